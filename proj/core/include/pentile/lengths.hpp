#pragma once

#include <array>

#include "pentile/linalg.hpp"
#include "pentile/linear_system.hpp"
#include "pentile/simplex.hpp"

namespace pentile {

// Exact linear conditions on the five side lengths, always including
// sum(l) = 1 and l >= 0. Branch decisions add strict order rows.
struct LengthProgram {
  LinearSystem sys{5};

  static LengthProgram root() {
    LengthProgram q;
    q.sys.add_eq(RatVec(5, Rational(1)), Rational(1));
    for (int i = 0; i < 5; ++i) {
      RatVec a(5, Rational(0));
      a[i] = -1;
      q.sys.add_le(std::move(a), Rational(0));
    }
    return q;
  }

  LinearSystem with_open_cube() const {
    LinearSystem s = sys;
    for (int i = 0; i < 5; ++i) s.add_box(i, Rational(0), Rational(1), /*strict=*/true);
    return s;
  }

  bool feasible() const { return lp_feasible(with_open_cube()).feasible; }

  void add_zero(const RatVec& coeffs) { sys.add_eq(coeffs, Rational(0)); }
  void add_positive(const RatVec& coeffs) { sys.add_gt(coeffs, Rational(0)); }
  void add_negative(RatVec coeffs) {
    for (auto& c : coeffs) c = -c;
    sys.add_gt(std::move(coeffs), Rational(0));
  }

  // Exact implication of "coeffs . l == rhs" over the program (non-strict
  // relaxation): the residual's maximum and minimum must both vanish.
  bool implies_eq(const RatVec& coeffs, const Rational& rhs) const {
    LinearSystem relax = sys.relaxed();
    LpResult<Rational> lo = lp_minimize(coeffs, relax);
    if (lo.status != LpStatus::Optimal || lo.value != rhs) return false;
    LpResult<Rational> hi = lp_maximize(coeffs, relax);
    return hi.status == LpStatus::Optimal && hi.value == rhs;
  }
};

// Cumulative exterior-turn parameters of the pentagon outline: side i points
// in direction s_i * pi, where s_1 = 0.
struct TurningVector {
  std::array<Rational, 5> s;
};

// Requires sum(alpha) = 3 (in pi units).
inline TurningVector turning(const std::array<Rational, 5>& alpha) {
  TurningVector t;
  Rational sum(0);
  for (int i = 0; i < 5; ++i) {
    t.s[i] = Rational(i) - sum;
    sum += alpha[i];
  }
  return t;
}

}  // namespace pentile
