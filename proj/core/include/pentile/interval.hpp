#pragma once

#include <algorithm>
#include <cassert>

#include "pentile/rational.hpp"

namespace pentile {

// Closed rational interval; the basic certificate currency of the trig and
// algebraic sign machinery.
struct RationalInterval {
  Rational lo{0}, hi{0};

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    assert(lo <= hi);
  }
  static RationalInterval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sign_of(lo) <= 0 && sign_of(hi) >= 0; }

  RationalInterval operator+(const RationalInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  RationalInterval operator-(const RationalInterval& o) const {
    return {lo - o.hi, hi - o.lo};
  }
  RationalInterval operator-() const { return {-hi, -lo}; }
  RationalInterval operator*(const RationalInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min({a, b, c, d}), std::max({a, b, c, d})};
  }
  RationalInterval operator*(const Rational& s) const {
    if (sign_of(s) >= 0) return {lo * s, hi * s};
    return {hi * s, lo * s};
  }
  RationalInterval operator+(const Rational& s) const { return {lo + s, hi + s}; }

  RationalInterval hull(const RationalInterval& o) const {
    return {std::min(lo, o.lo), std::max(hi, o.hi)};
  }
  RationalInterval clamped(const Rational& l, const Rational& h) const {
    return {std::max(lo, l), std::min(hi, h)};
  }
};

// Outward rounding to multiples of 2^-bits keeps denominators small after
// long interval computations.
inline Rational round_down_dyadic(const Rational& x, int bits) {
  Integer scale = Integer(1) << bits;
  return Rational(floor_int(x * scale)) / Rational(scale);
}
inline Rational round_up_dyadic(const Rational& x, int bits) {
  return -round_down_dyadic(-x, bits);
}
inline RationalInterval round_outward(const RationalInterval& iv, int bits) {
  return {round_down_dyadic(iv.lo, bits), round_up_dyadic(iv.hi, bits)};
}

}  // namespace pentile
