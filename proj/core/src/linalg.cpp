#include "pentile/linalg.hpp"

#include <cassert>

namespace pentile {

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelon(RatMat& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = rows[r][c];
    for (size_t j = c; j < ncols; ++j) rows[r][j] /= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int mat_rank(RatMat rows) {
  return static_cast<int>(echelon(rows).size());
}

bool span_member(const RatVec& target, const RatMat& basis) {
  RatMat rows = basis;
  echelon(rows);
  RatVec rem = target;
  for (const auto& row : rows) {
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (rem[lead] == 0) continue;
    Rational f = rem[lead];
    for (size_t j = lead; j < rem.size(); ++j) rem[j] -= f * row[j];
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  return true;
}

RatMat nullspace(const RatMat& rows, int arity) {
  RatMat red = rows;
  for ([[maybe_unused]] auto& r : red) assert(static_cast<int>(r.size()) == arity);
  std::vector<int> pivots = echelon(red);
  std::vector<bool> is_pivot(arity, false);
  for (int c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (int free = 0; free < arity; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(arity, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) {
      // pivot row i has leading 1 at pivots[i]
      if (static_cast<size_t>(pivots[i]) >= red[i].size()) continue;
      v[pivots[i]] = -red[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec solve_unique(const RatMat& rows, const RatVec& rhs, int arity) {
  RatMat aug = rows;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  std::vector<int> pivots = echelon(aug);
  // inconsistent or underdetermined -> empty
  for (const auto& row : aug) {
    bool all_zero = true;
    for (int j = 0; j < arity; ++j)
      if (row[j] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && row[arity] != 0) return {};
  }
  if (static_cast<int>(pivots.size()) != arity) return {};
  RatVec x(arity, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= arity) return {};
    x[pivots[i]] = aug[i][arity];
  }
  return x;
}

}  // namespace pentile
