#include "pentile/simplex.hpp"

#include "pentile/linalg.hpp"

namespace pentile {

int affine_dim(const LinearSystem& sys) {
  FeasResult<Rational> feas = lp_feasible(sys.relaxed());
  if (!feas.feasible) return -1;

  RatMat eqs;
  for (const auto& r : sys.rows)
    if (r.kind == RowKind::Eq) eqs.push_back(r.coeffs);

  // An inequality is an implicit equality iff it is tight on the whole
  // polytope, i.e. the minimum of its slack is zero on both sides.
  for (const auto& r : sys.rows) {
    if (r.kind == RowKind::Eq) continue;
    LpResult<Rational> lo = lp_minimize(r.coeffs, sys.relaxed());
    if (lo.status == LpStatus::Optimal && lo.value == r.rhs) eqs.push_back(r.coeffs);
  }
  return sys.arity - mat_rank(eqs);
}

}  // namespace pentile
