#include "pentile/trig.hpp"

#include <cassert>
#include <stdexcept>

namespace pentile {

namespace {

// Bracketing enclosure of arctan(1/q) from the alternating series; partial
// sums with an odd/even number of terms bound the value from both sides.
RationalInterval arctan_inv(long q, int terms) {
  Rational x(1, q);
  Rational x2 = x * x;
  Rational term = x;
  Rational even(0), odd(0);
  Rational acc(0);
  for (int k = 0; k < terms; ++k) {
    Rational contrib = term / Rational(2 * k + 1);
    if (k % 2 == 0)
      acc += contrib;
    else
      acc -= contrib;
    if (k % 2 == 0)
      even = acc;  // after adding a positive term: upper bound
    else
      odd = acc;  // lower bound
    term *= x2;
  }
  assert(odd <= even);
  return {odd, even};
}

RationalInterval compute_pi() {
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
  RationalInterval a = arctan_inv(5, 64);    // error < 5^-129
  RationalInterval b = arctan_inv(239, 40);  // error < 239^-81
  RationalInterval pi = a * Rational(16) - b * Rational(4);
  return round_outward(pi, 200);
}

// Shared series core: sin when odd_series, cos otherwise, over t in [0, ~pi/2].
RationalInterval series_eval(const RationalInterval& t, bool odd_series, int terms) {
  assert(sign_of(t.lo) >= 0);
  RationalInterval t2 = t * t;
  RationalInterval pow = odd_series ? t : RationalInterval(Rational(1), Rational(1));
  Rational fact(1);
  long n = odd_series ? 1 : 0;
  RationalInterval acc(Rational(0), Rational(0));
  for (int k = 0; k < terms; ++k) {
    RationalInterval contrib = pow * (Rational(1) / fact);
    acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
    pow = pow * t2;
    fact *= Rational((n + 1) * (n + 2));
    n += 2;
  }
  // Lagrange/alternating remainder: the tail is bounded by the first omitted
  // term once terms are decreasing, which holds for t <= 2 and terms >= 2.
  Rational tmax = t.hi > Rational(2) ? Rational(2) : t.hi;
  Rational rem(1);
  for (long i = 0; i < n; ++i) rem *= tmax / Rational(i + 1);
  RationalInterval remainder(-rem, rem);
  return acc + remainder;
}

// sin(r*pi) for r in [0, 1/2].
RationalInterval sin_quarter(const Rational& r, int prec_bits) {
  assert(sign_of(r) >= 0 && r <= Rational(1, 2));
  if (sign_of(r) == 0) return RationalInterval::point(Rational(0));
  RationalInterval t = pi_enclosure() * r;
  int terms = 3 + prec_bits / 4;  // (pi/2)^(2k+1)/(2k+1)! shrinks fast
  RationalInterval s = series_eval(t, true, terms);
  return round_outward(s.clamped(Rational(-1), Rational(1)), prec_bits + 4);
}

RationalInterval cos_quarter(const Rational& r, int prec_bits) {
  assert(sign_of(r) >= 0 && r <= Rational(1, 2));
  if (sign_of(r) == 0) return RationalInterval::point(Rational(1));
  RationalInterval t = pi_enclosure() * r;
  int terms = 3 + prec_bits / 4;
  RationalInterval s = series_eval(t, false, terms);
  return round_outward(s.clamped(Rational(-1), Rational(1)), prec_bits + 4);
}

// True iff some c + 2k (k integer) lies in [a, b].
bool critical_inside(const Rational& a, const Rational& b, const Rational& c) {
  Integer k = floor_int((b - c) / 2);
  return c + Rational(k) * 2 >= a;
}

}  // namespace

const RationalInterval& pi_enclosure() {
  static const RationalInterval pi = compute_pi();
  return pi;
}

RationalInterval sin_pi_point(const Rational& r, int prec_bits) {
  Rational x = rat_mod(r, Rational(2));  // [0, 2)
  bool negate = false;
  if (x >= Rational(1)) {
    x -= 1;
    negate = true;
  }
  if (x > Rational(1, 2)) x = Rational(1) - x;
  RationalInterval s = sin_quarter(x, prec_bits);
  return negate ? -s : s;
}

RationalInterval cos_pi_point(const Rational& r, int prec_bits) {
  Rational x = rat_mod(r, Rational(2));  // [0, 2)
  if (x > Rational(1)) x = Rational(2) - x;
  bool negate = false;
  if (x > Rational(1, 2)) {
    x = Rational(1) - x;
    negate = true;
  }
  RationalInterval c = cos_quarter(x, prec_bits);
  return negate ? -c : c;
}

TrigBounds trig_bounds(const Rational& angle_lo, const Rational& angle_hi,
                       int prec_bits) {
  if (angle_lo > angle_hi) throw std::invalid_argument("trig_bounds: lo > hi");
  TrigBounds out;
  RationalInterval s = sin_pi_point(angle_lo, prec_bits)
                           .hull(sin_pi_point(angle_hi, prec_bits));
  if (critical_inside(angle_lo, angle_hi, Rational(1, 2))) s.hi = 1;
  if (critical_inside(angle_lo, angle_hi, Rational(3, 2))) s.lo = -1;
  out.sin = s.clamped(Rational(-1), Rational(1));

  RationalInterval c = cos_pi_point(angle_lo, prec_bits)
                           .hull(cos_pi_point(angle_hi, prec_bits));
  if (critical_inside(angle_lo, angle_hi, Rational(0))) c.hi = 1;
  if (critical_inside(angle_lo, angle_hi, Rational(1))) c.lo = -1;
  out.cos = c.clamped(Rational(-1), Rational(1));
  return out;
}

}  // namespace pentile
