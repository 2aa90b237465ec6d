#pragma once

#include <optional>
#include <stdexcept>

#include "pentile/linalg.hpp"
#include "pentile/linear_system.hpp"
#include "pentile/simplex.hpp"
#include "pentile/vectype.hpp"

namespace pentile {

// The angle polytope of a set of vector types: alpha in [0,1]^5 with
// sum(alpha) = 3 and v.alpha = 2 for every generator v.
struct AnglePolytope {
  LinearSystem base;  // arity 5, non-strict

  // Adds the open-cube rows 0 < alpha_i < 1.
  LinearSystem with_open_cube() const;

  bool nonempty() const { return lp_feasible(base).feasible; }
  bool open_nonempty() const { return lp_feasible(with_open_cube()).feasible; }
  std::optional<RatVec> interior_point() const;
  int dim() const { return affine_dim(base); }
};

struct InfiniteSetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyPolytopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// P_X (ordered=false) or P>=_X with the descending chain (ordered=true).
AnglePolytope polytope(const VecTypeSet& xs, bool ordered);

// The augmented span used by the closure: rows (v,2) for v in X plus
// (1,1,1,1,1,3).
RatMat augmented_span_rows(const VecTypeSet& xs);

// Compat(X): all w in N^5 with (w,2) in the augmented span. Requires the
// open polytope machinery to derive finite coordinate bounds; throws
// InfiniteSetError when no bound exists.
VecTypeSet compat(const VecTypeSet& xs);

// A set is good when no zero-sum direction separates it strictly to one side
// without being orthogonal to all of it; decided by one LP per member.
bool is_good(const VecTypeSet& xs);

// Coordinate-wise minima over P>=_X; throws EmptyPolytopeError.
std::array<Rational, 5> min_vector(const VecTypeSet& xs);

}  // namespace pentile
