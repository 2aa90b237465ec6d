#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentile {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). GMP-backed.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

inline int sign_of(const Rational& x) { return x.sign(); }

inline Integer floor_int(const Rational& x) {
  Integer q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

// Largest integer n with n <= x; throws if it does not fit a long.
inline long floor_long(const Rational& x) {
  return static_cast<long>(floor_int(x));
}

// x mod m for rationals, result in [0, m).
inline Rational rat_mod(const Rational& x, const Rational& m) {
  Rational q = x / m;
  return x - Rational(floor_int(q)) * m;
}

inline std::string rat_str(const Rational& x) {
  return x.str();
}

// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  return Rational(s);
}

inline Integer lcm_denominators(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) l = boost::multiprecision::lcm(l, denominator(x));
  return l;
}

}  // namespace pentile
