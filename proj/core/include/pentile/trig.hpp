#pragma once

#include "pentile/interval.hpp"

namespace pentile {

// Certified enclosure of pi, width below 2^-160.
const RationalInterval& pi_enclosure();

// Certified enclosures of sin(r*pi) / cos(r*pi) for rational r. The result
// width is at most 2^-prec_bits; all arithmetic is rational.
RationalInterval sin_pi_point(const Rational& r, int prec_bits = 30);
RationalInterval cos_pi_point(const Rational& r, int prec_bits = 30);

struct TrigBounds {
  RationalInterval sin;
  RationalInterval cos;
};

// Enclosures of { sin(theta), cos(theta) : theta in [lo*pi, hi*pi] },
// via monotonicity between critical points plus certified endpoint series.
TrigBounds trig_bounds(const Rational& angle_lo, const Rational& angle_hi,
                       int prec_bits = 30);

}  // namespace pentile
