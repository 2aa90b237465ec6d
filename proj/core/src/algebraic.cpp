#include "pentile/algebraic.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "pentile/linalg.hpp"
#include "pentile/trig.hpp"

namespace pentile {

namespace {

using Poly = std::vector<Rational>;  // constant term first

void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// Exact division, throws if the remainder is nonzero.
Poly poly_divexact(Poly num, const Poly& den) {
  assert(den.size() >= 1 && den.back() != 0);
  if (num.size() < den.size()) {
    poly_trim(num);
    if (num.size() == 1 && num[0] == 0) return {Rational(0)};
    throw std::logic_error("poly_divexact: degree underflow");
  }
  Poly q(num.size() - den.size() + 1, Rational(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Rational c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const auto& v : num)
    if (v != 0) throw std::logic_error("poly_divexact: nonzero remainder");
  poly_trim(q);
  return q;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m) {
  assert(m.back() == 1);
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    Rational c = a.back();
    int shift = static_cast<int>(a.size()) - 1 - dm;
    if (c != 0)
      for (int j = 0; j <= dm; ++j) a[shift + j] -= c * m[j];
    a.pop_back();
    while (a.size() > static_cast<size_t>(dm) && a.back() == 0 &&
           static_cast<int>(a.size()) - 1 >= dm)
      a.pop_back();
  }
  poly_trim(a);
  return a;
}

// Extended Euclid: returns u with u*a = gcd (mod m); a invertible when the
// gcd is a nonzero constant.
Poly poly_inverse_mod(const Poly& a, const Poly& m) {
  // classic iterative extended gcd over Q[x]
  Poly r0 = m, r1 = a;
  Poly s0{Rational(0)}, s1{Rational(1)};
  poly_trim(r1);
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // quotient of r0 by r1
    Poly q(std::max<size_t>(1, r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1),
           Rational(0));
    Poly rem = r0;
    int dr1 = static_cast<int>(r1.size()) - 1;
    while (static_cast<int>(rem.size()) - 1 >= dr1 && !(rem.size() == 1 && rem[0] == 0)) {
      int shift = static_cast<int>(rem.size()) - 1 - dr1;
      Rational c = rem.back() / r1.back();
      q[shift] += c;
      for (int j = 0; j <= dr1; ++j) rem[shift + j] -= c * r1[j];
      poly_trim(rem);
      if (static_cast<int>(rem.size()) - 1 < dr1) break;
      if (rem.size() == 1 && rem[0] == 0) break;
    }
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd; must be a nonzero constant for field elements
  if (!(r0.size() == 1 && r0[0] != 0))
    throw std::logic_error("poly_inverse_mod: non-invertible element");
  Poly inv = s0;
  for (auto& c : inv) c /= r0[0];
  return poly_mod(std::move(inv), m);
}

// Cyclotomic polynomial over Q, memoized.
const Poly& cyclotomic(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<Poly(int)> compute = [&](int k) -> Poly {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    Poly result;
    if (k == 1) {
      result = Poly{Rational(-1), Rational(1)};  // x - 1
    } else {
      Poly num(k + 1, Rational(0));
      num[0] = -1;
      num[k] = 1;  // x^k - 1
      Poly den{Rational(1)};
      for (int d = 1; d < k; ++d)
        if (k % d == 0) den = poly_mul(den, compute(d));
      result = poly_divexact(std::move(num), den);
    }
    cache[k] = result;
    return result;
  };
  compute(n);
  return cache[n];
}

// Minimal polynomial of y = x + x^{2N-1} in Q[x]/Phi_{2N}(x), i.e. of
// 2 cos(pi/N). Found as the first linear dependence among the powers of y.
Poly minpoly_2cos_pi_over(int N) {
  if (N == 1) return Poly{Rational(2), Rational(1)};  // y = -2
  if (N == 2) return Poly{Rational(0), Rational(1)};  // y = 0
  const Poly& phi = cyclotomic(2 * N);
  int deg = static_cast<int>(phi.size()) - 1;

  // y = x + x^(2N-1) reduced mod phi
  Poly y(2 * N, Rational(0));
  y[1] = 1;
  y[2 * N - 1] += 1;
  y = poly_mod(std::move(y), phi);

  auto as_vec = [&](const Poly& p) {
    RatVec v(deg, Rational(0));
    for (size_t i = 0; i < p.size(); ++i) v[i] = p[i];
    return v;
  };

  RatMat powers;                 // rows: y^0, y^1, ...
  Poly cur{Rational(1)};         // y^0
  powers.push_back(as_vec(cur));
  for (int k = 1;; ++k) {
    cur = poly_mod(poly_mul(cur, y), phi);
    RatVec target = as_vec(cur);
    if (mat_rank(powers) == mat_rank([&] {
          RatMat m = powers;
          m.push_back(target);
          return m;
        }())) {
      // y^k depends on lower powers: solve for the combination
      int rows = deg, cols = static_cast<int>(powers.size());
      RatMat aug(rows, RatVec(cols, Rational(0)));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) aug[i][j] = powers[j][i];
      RatVec rhs(rows, Rational(0));
      for (int i = 0; i < rows; ++i) rhs[i] = target[i];
      RatVec lambda = solve_unique(aug, rhs, cols);
      if (lambda.empty())
        throw std::logic_error("minpoly: dependence without unique solution");
      Poly mp(k + 1, Rational(0));
      mp[k] = 1;
      for (int j = 0; j < cols; ++j) mp[j] = -lambda[j];
      return mp;
    }
    powers.push_back(std::move(target));
  }
}

}  // namespace

CosField::CosField(int index) : index_(index) {
  if (index < 1) throw std::invalid_argument("CosField index must be positive");
  minpoly_ = minpoly_2cos_pi_over(index);
  for (const auto& c : minpoly_) {
    assert(denominator(c) == 1);  // algebraic integer: monic over Z
    (void)c;
  }
  assert(minpoly_.back() == 1);
}

std::shared_ptr<const CosField> CosField::get(int index) {
  static std::map<int, std::shared_ptr<const CosField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(index);
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const CosField>(new CosField(index));
  cache[index] = field;
  return field;
}

RationalInterval CosField::generator_enclosure(int prec_bits) const {
  return cos_pi_point(Rational(1, index_), prec_bits + 1) * Rational(2);
}

AlgebraicReal::AlgebraicReal(std::shared_ptr<const CosField> field,
                             std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_ = {Rational(0)};
  if (field_ && static_cast<int>(coeffs_.size()) > field_->degree())
    throw std::invalid_argument("AlgebraicReal: coefficient vector too long");
  normalize();
}

void AlgebraicReal::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() == 1) field_.reset();  // rational: field irrelevant
}

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("AlgebraicReal: not rational");
  return coeffs_[0];
}

bool AlgebraicReal::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {

std::shared_ptr<const CosField> common_field(const AlgebraicReal& a,
                                             const AlgebraicReal& b) {
  if (a.field() && b.field()) {
    if (a.field() != b.field())
      throw std::logic_error("AlgebraicReal: mixing distinct fields");
    return a.field();
  }
  return a.field() ? a.field() : b.field();
}

}  // namespace

AlgebraicReal AlgebraicReal::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v = -v;
  return AlgebraicReal(field_, std::move(c));
}

AlgebraicReal AlgebraicReal::operator+(const AlgebraicReal& o) const {
  auto field = common_field(*this, o);
  std::vector<Rational> c = coeffs_;
  if (c.size() < o.coeffs_.size()) c.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return AlgebraicReal(field, std::move(c));
}

AlgebraicReal AlgebraicReal::operator-(const AlgebraicReal& o) const {
  return *this + (-o);
}

AlgebraicReal AlgebraicReal::operator*(const AlgebraicReal& o) const {
  auto field = common_field(*this, o);
  Poly prod = poly_mul(coeffs_, o.coeffs_);
  if (field) prod = poly_mod(std::move(prod), field->minpoly());
  return AlgebraicReal(field, std::move(prod));
}

AlgebraicReal AlgebraicReal::operator/(const AlgebraicReal& o) const {
  if (o.is_zero()) throw std::domain_error("AlgebraicReal: division by zero");
  if (o.is_rational()) {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v /= o.coeffs_[0];
    return AlgebraicReal(field_, std::move(c));
  }
  auto field = common_field(*this, o);
  Poly inv = poly_inverse_mod(o.coeffs_, field->minpoly());
  Poly prod = poly_mod(poly_mul(coeffs_, inv), field->minpoly());
  return AlgebraicReal(field, std::move(prod));
}

RationalInterval AlgebraicReal::enclosure(int prec_bits) const {
  if (is_rational()) return RationalInterval::point(coeffs_[0]);
  RationalInterval y = field_->generator_enclosure(prec_bits);
  // Horner over the interval
  RationalInterval acc = RationalInterval::point(coeffs_.back());
  for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i)
    acc = acc * y + coeffs_[i];
  return acc;
}

int AlgebraicReal::sign() const {
  if (is_rational()) return sign_of(coeffs_[0]);
  if (is_zero()) return 0;
  for (int prec = 48; prec <= 3072; prec *= 2) {
    RationalInterval enc = enclosure(prec);
    if (!enc.contains_zero()) return sign_of(enc.lo) > 0 ? 1 : -1;
  }
  throw std::logic_error("AlgebraicReal::sign: refinement failed to separate");
}

AlgebraicReal alg_cos(long p, int N) {
  if (N <= 0) throw std::invalid_argument("alg_cos: N must be positive");
  long period = 2L * N;
  long q = ((p % period) + period) % period;  // [0, 2N)
  if (q > N) q = period - q;                  // cos symmetry, now [0, N]
  auto field = CosField::get(N);
  // 2cos(q*pi/N) = D_q(y) with the Dickson recurrence D_0=2, D_1=y.
  Poly dm1{Rational(2)};
  if (q == 0) return AlgebraicReal(field, {Rational(1)});
  Poly d{Rational(0), Rational(1)};  // y
  if (field->degree() == 1) d = poly_mod(std::move(d), field->minpoly());
  for (long k = 1; k < q; ++k) {
    // D_{k+1} = y*D_k - D_{k-1}
    Poly next(d.size() + 1, Rational(0));
    for (size_t i = 0; i < d.size(); ++i) next[i + 1] = d[i];
    next = poly_sub(std::move(next), dm1);
    next = poly_mod(std::move(next), field->minpoly());
    dm1 = std::move(d);
    d = std::move(next);
  }
  for (auto& c : d) c /= 2;
  return AlgebraicReal(field, std::move(d));
}

AlgebraicReal alg_sin(long p, int N) {
  // sin(p*pi/N) = cos((N-2p) * pi / (2N))
  return alg_cos(static_cast<long>(N) - 2 * p, 2 * N);
}

}  // namespace pentile
