#pragma once

#include <vector>

#include "pentile/rational.hpp"

namespace pentile {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

int mat_rank(RatMat rows);

// True iff target is a rational linear combination of the basis rows.
bool span_member(const RatVec& target, const RatMat& basis);

// Basis of { x : rows * x = 0 }.
RatMat nullspace(const RatMat& rows, int arity);

// Unique solution of a square-rank system rows*x = rhs restricted to the
// affine hull; returns empty when the system is not uniquely determined.
RatVec solve_unique(const RatMat& rows, const RatVec& rhs, int arity);

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace pentile
