#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentile/lengths.hpp"
#include "pentile/polytope.hpp"

namespace pentile {

enum class FamilyKind { Known, SpecialCase, Degenerate };

// One row of the published 24-type table: linear conditions on angles (pi
// units) and side lengths that identify a pentagon family.
struct FamilyCondition {
  int type_id = 0;     // 1..24
  int table_case = 0;  // the class index the row is stated for
  FamilyKind kind = FamilyKind::Known;
  int subcase_of = 0;  // 16..19 reduce to a known family
  // rows are (coeffs over alpha resp. l, rhs)
  std::vector<std::pair<RatVec, Rational>> angle_equations;
  std::vector<std::pair<RatVec, Rational>> length_equations;
};

const std::vector<FamilyCondition>& family_table();

// True when every angle equation of the row holds identically on P.
bool family_angles_implied(const FamilyCondition& row, const AnglePolytope& p);

// First row (by type id) whose angle equations are implied by P and whose
// length equations are implied by Q.
std::optional<FamilyCondition> detect_family(const AnglePolytope& p,
                                             const LengthProgram& q);

// Same with the angle side precomputed (search keeps the per-case row list).
std::optional<FamilyCondition> detect_family_rows(
    const std::vector<FamilyCondition>& candidate_rows, const LengthProgram& q);

}  // namespace pentile
