#include "pentile/certificate.hpp"

#include <algorithm>
#include <deque>

#include "pentile/linalg.hpp"
#include "pentile/trig.hpp"

namespace pentile {

namespace {

// s(alpha) as exact fractions p_i / q with one common denominator.
struct TurningFractions {
  std::array<long, 5> p;
  long q = 1;
};

TurningFractions turning_fractions(const std::array<Rational, 5>& alpha) {
  TurningVector s = turning(alpha);
  Integer l = 1;
  for (const auto& v : s.s) l = boost::multiprecision::lcm(l, denominator(v));
  TurningFractions out;
  out.q = static_cast<long>(l);
  for (int i = 0; i < 5; ++i)
    out.p[i] = static_cast<long>(numerator(s.s[i]) * (l / denominator(s.s[i])));
  return out;
}

}  // namespace

std::optional<std::array<Rational, 5>> unique_alpha(const AnglePolytope& p) {
  RatMat rows;
  RatVec rhs;
  for (const auto& r : p.base.rows)
    if (r.kind == RowKind::Eq) {
      rows.push_back(r.coeffs);
      rhs.push_back(r.rhs);
    }
  RatVec x = solve_unique(rows, rhs, 5);
  if (x.empty()) return std::nullopt;
  std::array<Rational, 5> a;
  for (int i = 0; i < 5; ++i) {
    if (x[i] < 0 || x[i] > 1) return std::nullopt;
    a[i] = x[i];
  }
  return a;
}

Certificate closure_feasible_at(const std::array<Rational, 5>& alpha,
                                const LengthProgram& q, ClosureWitness* witness) {
  TurningFractions tf = turning_fractions(alpha);
  auto field = CosField::get(static_cast<int>(2 * tf.q));

  LinearSystemT<AlgebraicReal> sys(5);
  for (const auto& r : q.sys.rows) {
    std::vector<AlgebraicReal> coeffs;
    coeffs.reserve(5);
    for (const auto& c : r.coeffs) coeffs.emplace_back(c);
    sys.add(std::move(coeffs), AlgebraicReal(r.rhs), r.kind);
  }
  std::vector<AlgebraicReal> cos_row, sin_row;
  for (int i = 0; i < 5; ++i) {
    cos_row.push_back(alg_cos(2 * tf.p[i], static_cast<int>(2 * tf.q)));
    sin_row.push_back(alg_cos(tf.q - 2 * tf.p[i], static_cast<int>(2 * tf.q)));
  }
  sys.add_eq(cos_row, AlgebraicReal(0));
  sys.add_eq(sin_row, AlgebraicReal(0));
  for (int i = 0; i < 5; ++i)
    sys.add_box(i, AlgebraicReal(0), AlgebraicReal(1), /*strict=*/true);

  FeasResult<AlgebraicReal> res = lp_feasible(sys);
  if (!res.feasible) return Certificate::InfeasibleCertified;
  if (witness) {
    witness->alpha = alpha;
    for (int i = 0; i < 5; ++i) witness->lengths[i] = res.point[i];
  }
  return Certificate::Feasible;
}

namespace {

struct AlphaBox {
  std::array<RationalInterval, 5> range;
  int depth = 0;

  int widest() const {
    int best = 0;
    Rational w = range[0].width();
    for (int i = 1; i < 5; ++i)
      if (range[i].width() > w) {
        w = range[i].width();
        best = i;
      }
    return best;
  }
};

// Restriction of P to a coordinate box; empty restriction prunes the box.
bool box_intersects(const AnglePolytope& p, const AlphaBox& box) {
  LinearSystem sys = p.base;
  for (int i = 0; i < 5; ++i) sys.add_box(i, box.range[i].lo, box.range[i].hi);
  return lp_feasible(sys).feasible;
}

// The interval refutation at one box: no strictly positive length vector in Q
// can satisfy the four relaxed projections of the closure equation.
bool box_refuted(const AnglePolytope& p, const LengthProgram& q, const AlphaBox& box,
                 int prec_bits) {
  LinearSystem sys = q.with_open_cube();
  // s_i = (i-1) - sum_{j<i} alpha_j as intervals over the box
  std::array<RationalInterval, 5> s;
  RationalInterval sum(Rational(0), Rational(0));
  for (int i = 0; i < 5; ++i) {
    s[i] = RationalInterval(Rational(i), Rational(i)) - sum;
    sum = sum + box.range[i];
  }
  RatVec sin_plus(5), sin_minus(5), cos_plus(5), cos_minus(5);
  for (int i = 0; i < 5; ++i) {
    TrigBounds tb = trig_bounds(s[i].lo, s[i].hi, prec_bits);
    sin_plus[i] = tb.sin.hi;
    sin_minus[i] = tb.sin.lo;
    cos_plus[i] = tb.cos.hi;
    cos_minus[i] = tb.cos.lo;
  }
  // x . sin+ >= 0, x . sin- <= 0, x . cos+ >= 0, x . cos- <= 0
  sys.add_ge(sin_plus, Rational(0));
  sys.add_le(sin_minus, Rational(0));
  sys.add_ge(cos_plus, Rational(0));
  sys.add_le(cos_minus, Rational(0));
  return !lp_feasible(sys).feasible;
}

}  // namespace

Certificate feasibility_certificate(const AnglePolytope& p, const LengthProgram& q,
                                    const CertificateOptions& opts) {
  if (!q.feasible()) return Certificate::InfeasibleCertified;
  int dim = p.dim();
  if (dim < 0) return Certificate::InfeasibleCertified;
  if (dim == 0) {
    auto alpha = unique_alpha(p);
    if (!alpha) return Certificate::InfeasibleCertified;
    return closure_feasible_at(*alpha, q);
  }

  // cheap witness: the regular pentagon
  {
    std::array<Rational, 5> reg;
    reg.fill(Rational(3, 5));
    RatVec pt(5, Rational(3, 5));
    if (p.base.satisfies(pt)) {
      LinearSystem open_q = q.with_open_cube();
      RatVec uniform(5, Rational(1, 5));
      if (open_q.satisfies(uniform)) return Certificate::Feasible;
    }
  }

  AlphaBox root;
  for (int i = 0; i < 5; ++i) {
    RatVec obj(5, Rational(0));
    obj[i] = 1;
    LpResult<Rational> lo = lp_minimize(obj, p.base);
    LpResult<Rational> hi = lp_maximize(obj, p.base);
    if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal)
      return Certificate::InfeasibleCertified;  // empty polytope
    root.range[i] = RationalInterval(lo.value, hi.value);
  }

  std::deque<AlphaBox> work{root};
  int processed = 0;
  while (!work.empty()) {
    if (++processed > opts.max_boxes) return Certificate::Unknown;
    AlphaBox box = work.front();
    work.pop_front();
    if (!box_intersects(p, box)) continue;
    if (box_refuted(p, q, box, opts.prec_bits)) continue;
    if (box.depth >= opts.max_depth) return Certificate::Unknown;
    int split = box.widest();
    Rational mid = (box.range[split].lo + box.range[split].hi) / 2;
    AlphaBox left = box, right = box;
    left.depth = right.depth = box.depth + 1;
    left.range[split] = RationalInterval(box.range[split].lo, mid);
    right.range[split] = RationalInterval(mid, box.range[split].hi);
    work.push_back(std::move(left));
    work.push_back(std::move(right));
  }
  return Certificate::InfeasibleCertified;
}

}  // namespace pentile
