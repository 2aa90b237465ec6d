#include "pentile/families.hpp"

namespace pentile {

namespace {

using Eq = std::pair<RatVec, Rational>;

Eq eq(std::initializer_list<std::pair<int, int>> terms, int rhs_num, int rhs_den = 1) {
  RatVec c(5, Rational(0));
  for (auto [idx, coef] : terms) c[idx] += coef;
  return {std::move(c), Rational(rhs_num, rhs_den)};
}

// angle letters a..e are indices 0..4; "x = y" becomes x - y = 0
Eq diff(std::initializer_list<std::pair<int, int>> lhs,
        std::initializer_list<std::pair<int, int>> rhs) {
  RatVec c(5, Rational(0));
  for (auto [idx, coef] : lhs) c[idx] += coef;
  for (auto [idx, coef] : rhs) c[idx] -= coef;
  return {std::move(c), Rational(0)};
}

std::vector<FamilyCondition> build_table() {
  constexpr int a = 0, b = 1, c = 2, d = 3, e = 4;
  constexpr int A = 0, B = 1, C = 2, D = 3, E = 4;
  std::vector<FamilyCondition> t;
  auto row = [&](int id, int case_idx, FamilyKind kind, int subcase,
                 std::vector<Eq> angles, std::vector<Eq> lengths) {
    FamilyCondition f;
    f.type_id = id;
    f.table_case = case_idx;
    f.kind = kind;
    f.subcase_of = subcase;
    f.angle_equations = std::move(angles);
    f.length_equations = std::move(lengths);
    t.push_back(std::move(f));
  };

  row(1, 1, FamilyKind::Known, 0, {eq({{a, 1}, {b, 1}, {c, 1}}, 2)}, {});
  row(2, 2, FamilyKind::Known, 0, {eq({{a, 1}, {b, 1}, {d, 1}}, 2)},
      {diff({{C, 1}}, {{E, 1}})});
  row(3, 31, FamilyKind::Known, 0,
      {eq({{e, 3}}, 2), eq({{d, 1}, {e, 2}}, 2), eq({{b, 1}, {e, 2}}, 2)},
      {diff({{C, 1}, {E, 1}}, {{D, 1}}), diff({{A, 1}}, {{B, 1}})});
  row(4, 6, FamilyKind::Known, 0, {eq({{a, 1}, {b, 1}, {d, 1}}, 2), eq({{e, 2}}, 1)},
      {diff({{D, 1}}, {{E, 1}}), diff({{B, 1}}, {{C, 1}})});
  row(5, 4, FamilyKind::Known, 0, {eq({{e, 3}}, 2), eq({{a, 1}, {b, 1}, {d, 1}}, 2)},
      {diff({{D, 1}}, {{E, 1}}), diff({{B, 1}}, {{C, 1}})});
  row(6, 13, FamilyKind::Known, 0,
      {eq({{d, 1}, {e, 2}}, 2), eq({{a, 1}, {c, 1}, {d, 1}}, 2)},
      {diff({{C, 1}}, {{D, 1}}), diff({{D, 1}}, {{E, 1}}), diff({{A, 1}}, {{B, 1}})});
  row(7, 17, FamilyKind::Known, 0,
      {eq({{d, 1}, {e, 2}}, 2), eq({{a, 1}, {c, 2}}, 2)},
      {diff({{A, 1}}, {{C, 1}}), diff({{C, 1}}, {{D, 1}}), diff({{D, 1}}, {{E, 1}})});
  row(8, 14, FamilyKind::Known, 0,
      {eq({{d, 1}, {e, 2}}, 2), eq({{b, 2}, {c, 1}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{B, 1}}, {{C, 1}}), diff({{C, 1}}, {{D, 1}})});
  row(9, 15, FamilyKind::Known, 0,
      {eq({{d, 1}, {e, 2}}, 2), eq({{a, 2}, {c, 1}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{B, 1}}, {{C, 1}}), diff({{C, 1}}, {{D, 1}})});
  row(10, 69, FamilyKind::Known, 0,
      {eq({{c, 2}, {d, 1}}, 2), eq({{b, 1}, {c, 1}, {e, 1}}, 2), eq({{a, 1}, {b, 2}}, 2)},
      {diff({{A, 1}, {C, 1}}, {{D, 1}}), diff({{D, 1}}, {{E, 1}})});
  row(11, 67, FamilyKind::Known, 0,
      {eq({{c, 1}, {d, 2}}, 2), eq({{b, 1}, {d, 1}, {e, 1}}, 2), eq({{a, 1}, {b, 2}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{B, 1}}, {{C, 1}, {E, 2}})});
  row(12, 67, FamilyKind::Known, 0,
      {eq({{c, 1}, {d, 2}}, 2), eq({{b, 1}, {d, 1}, {e, 1}}, 2), eq({{a, 1}, {b, 2}}, 2)},
      {diff({{A, 1}, {C, 1}}, {{B, 1}}), diff({{B, 1}}, {{E, 2}})});
  row(13, 63, FamilyKind::Known, 0,
      {eq({{b, 1}, {d, 2}}, 2), eq({{a, 1}, {b, 1}, {d, 1}}, 2), eq({{e, 2}}, 1)},
      {diff({{A, 1}}, {{B, 2}}), diff({{B, 2}}, {{C, 2}})});
  row(14, 67, FamilyKind::Known, 0,
      {eq({{c, 1}, {d, 2}}, 2), eq({{b, 1}, {d, 1}, {e, 1}}, 2), eq({{a, 1}, {b, 2}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{B, 1}}, {{C, 2}}), diff({{C, 2}}, {{E, 2}})});
  row(15, 303, FamilyKind::Known, 0,
      {eq({{c, 1}, {d, 2}}, 2), eq({{b, 2}, {e, 1}}, 2), eq({{a, 2}, {d, 1}}, 2),
       eq({{e, 2}}, 1)},
      {diff({{B, 1}}, {{D, 1}}), diff({{D, 1}}, {{E, 1}}), diff({{C, 1}}, {{B, 2}})});
  row(16, 72, FamilyKind::SpecialCase, 10,
      {eq({{b, 1}, {c, 1}, {e, 1}}, 2), eq({{b, 2}, {d, 1}}, 2), eq({{a, 1}, {c, 2}}, 2)},
      {diff({{A, 2}}, {{D, 1}}), diff({{D, 1}}, {{E, 1}}), diff({{A, 1}}, {{C, 1}})});
  row(17, 25, FamilyKind::SpecialCase, 2,
      {eq({{c, 1}, {e, 2}}, 2), eq({{b, 2}, {d, 1}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{B, 1}}, {{C, 1}}), diff({{C, 1}}, {{D, 1}}),
       diff({{D, 1}}, {{E, 1}})});
  row(18, 73, FamilyKind::SpecialCase, 2,
      {eq({{d, 1}, {e, 2}}, 2), eq({{c, 1}, {e, 2}}, 2), eq({{b, 1}, {d, 1}, {e, 1}}, 2)},
      {diff({{D, 1}}, {{E, 1}}), diff({{A, 1}}, {{B, 1}})});
  row(19, 23, FamilyKind::SpecialCase, 1,
      {eq({{c, 1}, {e, 2}}, 2), eq({{b, 1}, {d, 2}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{B, 1}}, {{C, 1}}), diff({{C, 1}}, {{D, 1}})});
  row(20, 2, FamilyKind::Degenerate, 0, {eq({{a, 1}, {b, 1}, {d, 1}}, 2)},
      {diff({{A, 1}}, {{C, 1}, {D, 1}}), diff({{B, 1}}, {{E, 1}})});
  row(21, 12, FamilyKind::Degenerate, 0,
      {eq({{d, 1}, {e, 2}}, 2), eq({{a, 2}, {b, 1}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{C, 1}}, {{D, 1}})});
  row(22, 27, FamilyKind::Degenerate, 0,
      {eq({{c, 1}, {e, 2}}, 2), eq({{a, 1}, {d, 2}}, 2)},
      {diff({{A, 1}}, {{B, 1}}), diff({{B, 1}}, {{C, 1}}), diff({{C, 1}}, {{E, 1}})});
  row(23, 64, FamilyKind::Degenerate, 0,
      {eq({{b, 2}, {d, 1}}, 2), eq({{a, 1}, {b, 1}, {d, 1}}, 2), eq({{e, 2}}, 1)},
      {diff({{A, 1}}, {{C, 2}}), diff({{C, 2}}, {{D, 2}})});
  row(24, 69, FamilyKind::Degenerate, 0,
      {eq({{c, 2}, {d, 1}}, 2), eq({{b, 1}, {c, 1}, {e, 1}}, 2), eq({{a, 1}, {b, 2}}, 2)},
      {diff({{D, 2}}, {{A, 1}, {C, 1}}), diff({{E, 2}}, {{A, 1}, {C, 1}})});
  return t;
}

}  // namespace

const std::vector<FamilyCondition>& family_table() {
  static const std::vector<FamilyCondition> table = build_table();
  return table;
}

bool family_angles_implied(const FamilyCondition& row, const AnglePolytope& p) {
  for (const auto& [coeffs, rhs] : row.angle_equations) {
    LpResult<Rational> lo = lp_minimize(coeffs, p.base);
    if (lo.status != LpStatus::Optimal || lo.value != rhs) return false;
    LpResult<Rational> hi = lp_maximize(coeffs, p.base);
    if (hi.status != LpStatus::Optimal || hi.value != rhs) return false;
  }
  return true;
}

std::optional<FamilyCondition> detect_family_rows(
    const std::vector<FamilyCondition>& candidate_rows, const LengthProgram& q) {
  for (const auto& row : candidate_rows) {
    bool ok = true;
    for (const auto& [coeffs, rhs] : row.length_equations)
      if (!q.implies_eq(coeffs, rhs)) {
        ok = false;
        break;
      }
    if (ok) return row;
  }
  return std::nullopt;
}

std::optional<FamilyCondition> detect_family(const AnglePolytope& p,
                                             const LengthProgram& q) {
  std::vector<FamilyCondition> rows;
  for (const auto& row : family_table())
    if (family_angles_implied(row, p)) rows.push_back(row);
  return detect_family_rows(rows, q);
}

}  // namespace pentile
