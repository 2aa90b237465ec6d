#include <doctest.h>

#include <random>

#include "pentile/algebraic.hpp"
#include "pentile/linalg.hpp"
#include "pentile/polytope.hpp"
#include "pentile/simplex.hpp"
#include "pentile/trig.hpp"

using namespace pentile;

namespace {

LinearSystem ordered_simplex_system() {
  // 1 >= a1 >= ... >= a5 >= 0, sum = 3
  LinearSystem sys(5);
  sys.add_eq(RatVec(5, Rational(1)), Rational(3));
  for (int i = 0; i < 5; ++i) sys.add_box(i, Rational(0), Rational(1));
  for (int i = 0; i + 1 < 5; ++i) {
    RatVec a(5, Rational(0));
    a[i] = -1;
    a[i + 1] = 1;
    sys.add_le(std::move(a), Rational(0));
  }
  return sys;
}

RatVec unit(int i) {
  RatVec v(5, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("lp_feasible on simple boxes") {
  LinearSystem sys(1);
  sys.add_box(0, Rational(0), Rational(1));
  auto res = lp_feasible(sys);
  REQUIRE(res.feasible);
  CHECK(sys.satisfies(res.point));

  LinearSystem bad(1);
  bad.add_ge(RatVec{Rational(1)}, Rational(1));
  bad.add_le(RatVec{Rational(1)}, Rational(0));
  CHECK_FALSE(lp_feasible(bad).feasible);
}

TEST_CASE("lp_feasible finds a point of the ordered angle simplex") {
  LinearSystem sys = ordered_simplex_system();
  auto res = lp_feasible(sys);
  REQUIRE(res.feasible);
  CHECK(sys.satisfies(res.point));
  RatVec uniform(5, Rational(3, 5));
  CHECK(sys.satisfies(uniform));
}

TEST_CASE("strict feasibility rejects degenerate systems") {
  LinearSystem sys(2);
  sys.add_eq(RatVec{Rational(1), Rational(1)}, Rational(1));
  sys.add_lt(RatVec{Rational(1), Rational(0)}, Rational(0));  // x < 0
  sys.add_ge(RatVec{Rational(1), Rational(0)}, Rational(0));  // x >= 0
  CHECK_FALSE(lp_feasible(sys).feasible);

  LinearSystem open_box(1);
  open_box.add_box(0, Rational(0), Rational(1), /*strict=*/true);
  auto res = lp_feasible(open_box);
  REQUIRE(res.feasible);
  CHECK(res.point[0] > 0);
  CHECK(res.point[0] < 1);
}

TEST_CASE("ordered simplex minima match the published bounds") {
  LinearSystem sys = ordered_simplex_system();
  auto m1 = lp_minimize(unit(0), sys);
  REQUIRE(m1.status == LpStatus::Optimal);
  CHECK(m1.value == Rational(3, 5));
  auto m2 = lp_minimize(unit(1), sys);
  CHECK(m2.value == Rational(1, 2));
  auto m3 = lp_minimize(unit(2), sys);
  CHECK(m3.value == Rational(1, 3));
  auto m5 = lp_minimize(unit(4), sys);
  CHECK(m5.value == Rational(0));
  // witness satisfies the system exactly
  CHECK(sys.satisfies(m1.point));
  CHECK(dot(unit(0), m1.point) == m1.value);
}

TEST_CASE("lp_minimize detects unbounded problems") {
  LinearSystem sys(2);
  sys.add_le(RatVec{Rational(1), Rational(0)}, Rational(5));
  auto res = lp_minimize(RatVec{Rational(1), Rational(0)}, sys);
  CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("lp_feasible and lp_minimize agree on feasibility") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    LinearSystem sys(3);
    for (int r = 0; r < 4; ++r) {
      RatVec a(3);
      for (auto& c : a) c = coef(rng);
      sys.add_le(std::move(a), Rational(coef(rng)));
    }
    for (int i = 0; i < 3; ++i) sys.add_box(i, Rational(-2), Rational(2));
    bool feas = lp_feasible(sys).feasible;
    auto opt = lp_minimize(RatVec{Rational(1), Rational(1), Rational(1)}, sys);
    CHECK(feas == (opt.status == LpStatus::Optimal));
    if (opt.status == LpStatus::Optimal) CHECK(sys.satisfies(opt.point));
  }
}

TEST_CASE("affine_dim of table polytopes") {
  auto dim_of = [](const char* basis) {
    return polytope(compat(VecTypeSet::parse(basis)), false).dim();
  };
  CHECK(dim_of("11100") == 3);                       // class 1
  CHECK(dim_of("00003 00012 00102") == 1);           // class 29
  CHECK(dim_of("00003 00012 00102 01002") == 0);     // class 121
  LinearSystem empty(2);
  empty.add_ge(RatVec{Rational(1), Rational(0)}, Rational(1));
  empty.add_le(RatVec{Rational(1), Rational(0)}, Rational(0));
  CHECK(affine_dim(empty) == -1);
}

TEST_CASE("affine_dim is invariant under coordinate permutation") {
  LinearSystem sys(4);
  sys.add_eq(RatVec{Rational(1), Rational(1), Rational(0), Rational(0)}, Rational(1));
  for (int i = 0; i < 4; ++i) sys.add_box(i, Rational(0), Rational(1));
  int base = affine_dim(sys);
  // cyclic shift of all coefficient rows
  LinearSystem shifted(4);
  for (const auto& r : sys.rows) {
    RatVec a(4);
    for (int j = 0; j < 4; ++j) a[(j + 1) % 4] = r.coeffs[j];
    shifted.add(std::move(a), r.rhs, r.kind);
  }
  CHECK(affine_dim(shifted) == base);
}

TEST_CASE("span membership basics") {
  RatMat ones{{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(3)}};
  // one-dimensional span forces scalar 2/3, coordinates then mismatch
  CHECK_FALSE(span_member(RatVec{Rational(1), Rational(1), Rational(1), Rational(0),
                                 Rational(0), Rational(2)},
                          ones));
  RatMat two = ones;
  two.push_back(RatVec{Rational(1), Rational(1), Rational(1), Rational(0), Rational(0),
                       Rational(2)});
  CHECK(span_member(RatVec{Rational(0), Rational(0), Rational(0), Rational(1),
                           Rational(1), Rational(1)},
                    two));
  CHECK(span_member(two[1], two));
}

TEST_CASE("span membership agrees with a rank oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4, k = 1 + trial % 3;
    RatMat basis;
    for (int i = 0; i < k; ++i) {
      RatVec v(n);
      for (auto& c : v) c = coef(rng);
      basis.push_back(std::move(v));
    }
    RatVec target(n);
    for (auto& c : target) c = coef(rng);
    bool member = span_member(target, basis);
    RatMat aug = basis;
    aug.push_back(target);
    bool oracle = mat_rank(basis) == mat_rank(aug);
    CHECK(member == oracle);
    agreements += member == oracle;
  }
  CHECK(agreements == 200);
}

TEST_CASE("trig_bounds matches the stated enclosures") {
  Rational tol = Rational(1) / Rational(1 << 20);
  {
    TrigBounds tb = trig_bounds(Rational(0), Rational(1, 6));
    CHECK(tb.sin.lo <= 0);
    CHECK(tb.sin.hi >= Rational(1, 2));
    CHECK(tb.sin.lo >= -tol);
    CHECK(tb.sin.hi <= Rational(1, 2) + tol);
  }
  {
    TrigBounds tb = trig_bounds(Rational(1, 3), Rational(1, 3));
    CHECK(tb.cos.contains(Rational(1, 2)));
    CHECK(tb.cos.width() <= tol);
  }
  {
    TrigBounds tb = trig_bounds(Rational(1, 2), Rational(1, 2));
    CHECK(tb.sin.contains(Rational(1)));
    CHECK(tb.sin.width() <= tol);
  }
}

TEST_CASE("trig enclosures shrink with the input interval") {
  Rational slack = Rational(1) / Rational(1 << 20);
  TrigBounds wide = trig_bounds(Rational(1, 7), Rational(3, 7));
  TrigBounds narrow = trig_bounds(Rational(1, 5), Rational(2, 7));
  CHECK(narrow.sin.width() <= wide.sin.width() + slack);
  CHECK(narrow.cos.width() <= wide.cos.width() + slack);
}

TEST_CASE("alg_cos exact values") {
  CHECK(alg_cos(0, 7) == AlgebraicReal(Rational(1)));
  CHECK(alg_cos(7, 7) == AlgebraicReal(Rational(-1)));
  CHECK(alg_cos(1, 3) == AlgebraicReal(Rational(1, 2)));
  CHECK(alg_cos(1, 2) == AlgebraicReal(Rational(0)));
  CHECK(alg_cos(2, 4) == AlgebraicReal(Rational(0)));
}

TEST_CASE("alg_cos satisfies the double angle identity") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pd(-20, 40);
  std::uniform_int_distribution<int> nd(1, 24);
  for (int trial = 0; trial < 40; ++trial) {
    int n = nd(rng);
    int p = pd(rng);
    AlgebraicReal c = alg_cos(p, n);
    AlgebraicReal lhs = AlgebraicReal(Rational(2)) * c * c - AlgebraicReal(Rational(1));
    CHECK(lhs == alg_cos(2 * p, n));
  }
}

TEST_CASE("trig enclosures contain the exact algebraic values") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> nd(1, 24);
  for (int trial = 0; trial < 100; ++trial) {
    int n = nd(rng);
    std::uniform_int_distribution<int> pd(0, 2 * n);
    int p = pd(rng);
    AlgebraicReal exact = alg_cos(p, n);
    RationalInterval enc = trig_bounds(Rational(p, n), Rational(p, n)).cos;
    RationalInterval alg_enc = exact.enclosure(64);
    // both certified intervals must overlap around the common true value
    CHECK(alg_enc.lo <= enc.hi);
    CHECK(enc.lo <= alg_enc.hi);
    // and the midpoint-of-exact lies inside the trig enclosure
    if (exact.is_rational()) CHECK(enc.contains(exact.rational_value()));
  }
}

TEST_CASE("algebraic field arithmetic round trips through division") {
  auto field = CosField::get(12);
  AlgebraicReal y(field, {Rational(0), Rational(1)});
  AlgebraicReal expr = (y * y - AlgebraicReal(Rational(1, 3))) / y;
  AlgebraicReal back = expr * y + AlgebraicReal(Rational(1, 3));
  CHECK(back == y * y);
  CHECK(y.sign() > 0);
  CHECK((y - AlgebraicReal(Rational(2))).sign() < 0);
}
