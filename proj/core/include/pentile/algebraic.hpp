#pragma once

#include <memory>
#include <vector>

#include "pentile/interval.hpp"
#include "pentile/rational.hpp"

namespace pentile {

// The real cyclotomic field Q(2 cos(pi/N)), presented by the minimal
// polynomial of its generator. Instances are interned per index and shared.
class CosField {
 public:
  static std::shared_ptr<const CosField> get(int index);

  int index() const { return index_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  // Monic minimal polynomial of 2 cos(pi/N), constant term first.
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  // Certified enclosure of the generator, width <= 2^-prec_bits.
  RationalInterval generator_enclosure(int prec_bits) const;

 private:
  explicit CosField(int index);
  int index_;
  std::vector<Rational> minpoly_;
};

// An exact element of a CosField: a polynomial in the generator, reduced
// modulo the minimal polynomial. Field-less elements are plain rationals and
// interoperate freely; mixing two distinct fields is a logic error.
class AlgebraicReal {
 public:
  AlgebraicReal() : coeffs_{Rational(0)} {}
  AlgebraicReal(int v) : coeffs_{Rational(v)} {}
  AlgebraicReal(long v) : coeffs_{Rational(v)} {}
  AlgebraicReal(Rational v) : coeffs_{std::move(v)} {}
  AlgebraicReal(std::shared_ptr<const CosField> field, std::vector<Rational> coeffs);

  const std::shared_ptr<const CosField>& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rational rational_value() const;  // requires is_rational()

  bool is_zero() const;
  int sign() const;  // exact, via interval refinement for irrational elements

  AlgebraicReal operator-() const;
  AlgebraicReal operator+(const AlgebraicReal& o) const;
  AlgebraicReal operator-(const AlgebraicReal& o) const;
  AlgebraicReal operator*(const AlgebraicReal& o) const;
  AlgebraicReal operator/(const AlgebraicReal& o) const;
  AlgebraicReal& operator+=(const AlgebraicReal& o) { return *this = *this + o; }
  AlgebraicReal& operator-=(const AlgebraicReal& o) { return *this = *this - o; }
  AlgebraicReal& operator*=(const AlgebraicReal& o) { return *this = *this * o; }
  AlgebraicReal& operator/=(const AlgebraicReal& o) { return *this = *this / o; }

  bool operator==(const AlgebraicReal& o) const { return (*this - o).is_zero(); }
  bool operator!=(const AlgebraicReal& o) const { return !(*this == o); }
  bool operator<(const AlgebraicReal& o) const { return (*this - o).sign() < 0; }
  bool operator>(const AlgebraicReal& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const AlgebraicReal& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const AlgebraicReal& o) const { return (*this - o).sign() >= 0; }

  // Certified enclosure of the real value.
  RationalInterval enclosure(int prec_bits) const;

 private:
  void normalize();
  std::shared_ptr<const CosField> field_;  // null for plain rationals
  std::vector<Rational> coeffs_;           // constant term first, reduced
};

inline int sign_of(const AlgebraicReal& x) { return x.sign(); }

// Exact cos(p*pi/N) as an element of Q(2 cos(pi/N)).
AlgebraicReal alg_cos(long p, int N);

// Exact sin(p*pi/N), represented in the doubled field Q(2 cos(pi/(2N))).
AlgebraicReal alg_sin(long p, int N);

}  // namespace pentile
