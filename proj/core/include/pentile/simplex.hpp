#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pentile/linear_system.hpp"

namespace pentile {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class F>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  F value{0};
  std::vector<F> point;  // witness, arity-sized, valid when Optimal
};

template <class F>
struct FeasResult {
  bool feasible = false;
  std::vector<F> point;  // valid when feasible; satisfies strict rows strictly
};

// Dense two-phase simplex with Bland's rule over an exact ordered field.
// Free variables are split into positive/negative parts; every query is
// deterministic and terminates.
template <class F>
class SimplexTableau {
 public:
  // Only Eq/Le rows are accepted here; strict handling lives in lp_feasible.
  explicit SimplexTableau(const LinearSystemT<F>& sys) : n_(sys.arity) {
    nsplit_ = 2 * n_;
    int nslack = 0;
    for (const auto& r : sys.rows)
      if (r.kind != RowKind::Eq) ++nslack;
    m_ = static_cast<int>(sys.rows.size());
    ncols_ = nsplit_ + nslack + m_;  // artificials at the end
    art0_ = nsplit_ + nslack;
    a_.assign(m_, std::vector<F>(ncols_, F(0)));
    b_.assign(m_, F(0));
    basis_.assign(m_, -1);
    in_basis_.assign(ncols_, false);

    int slack = nsplit_;
    for (int i = 0; i < m_; ++i) {
      const auto& r = sys.rows[i];
      assert(r.kind != RowKind::Lt);
      for (int j = 0; j < n_; ++j) {
        a_[i][2 * j] = r.coeffs[j];
        a_[i][2 * j + 1] = -r.coeffs[j];
      }
      b_[i] = r.rhs;
      if (r.kind == RowKind::Le) a_[i][slack++] = F(1);
      if (sign(b_[i]) < 0) {
        for (auto& v : a_[i]) v = -v;
        b_[i] = -b_[i];
      }
      a_[i][art0_ + i] = F(1);
      basis_[i] = art0_ + i;
      in_basis_[art0_ + i] = true;
    }
  }

  // Phase 1. Returns true when a basic feasible solution exists.
  bool phase1() {
    auto cost = [&](int j) { return j >= art0_ ? F(1) : F(0); };
    optimize(cost);
    F total(0);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= art0_) total += b_[i];
    if (sign(total) != 0) return false;
    // Degenerate artificials: pivot them out where a structural column is
    // available; otherwise the row is redundant and stays inert.
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < art0_) continue;
      for (int j = 0; j < art0_; ++j) {
        if (sign(a_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  // Phase 2 on a structural objective (minimization); obj is indexed by the
  // split columns and implicitly zero on slacks. Requires phase1() true.
  LpStatus phase2(const std::vector<F>& obj_split) {
    auto cost = [&](int j) {
      return j < static_cast<int>(obj_split.size()) ? obj_split[j] : F(0);
    };
    return optimize(cost);
  }

  std::vector<F> extract() const {
    std::vector<F> split(ncols_, F(0));
    for (int i = 0; i < m_; ++i) split[basis_[i]] = b_[i];
    std::vector<F> x(n_, F(0));
    for (int j = 0; j < n_; ++j) x[j] = split[2 * j] - split[2 * j + 1];
    return x;
  }

  int split_cols() const { return nsplit_; }

 private:
  static int sign(const F& x) { return sign_of(x); }

  void pivot(int r, int c) {
    F p = a_[r][c];
    assert(sign(p) != 0);
    for (auto& v : a_[r]) v /= p;
    b_[r] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || sign(a_[i][c]) == 0) continue;
      F f = a_[i][c];
      for (int j = 0; j < ncols_; ++j)
        if (sign(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      b_[i] -= f * b_[r];
    }
    in_basis_[basis_[r]] = false;
    in_basis_[c] = true;
    basis_[r] = c;
  }

  // Artificial columns never enter the basis; they start basic and only leave.
  template <class CostFn>
  LpStatus optimize(const CostFn& cost) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < art0_ && entering < 0; ++j) {
        if (in_basis_[j]) continue;
        F red = cost(j);
        for (int i = 0; i < m_; ++i)
          if (sign(a_[i][j]) != 0) red -= cost(basis_[i]) * a_[i][j];
        if (sign(red) < 0) entering = j;  // Bland: lowest index
      }
      if (entering < 0) return LpStatus::Optimal;
      int leaving = -1;
      std::optional<F> best;
      for (int i = 0; i < m_; ++i) {
        if (sign(a_[i][entering]) <= 0) continue;
        F ratio = b_[i] / a_[i][entering];
        if (!best || ratio < *best ||
            (ratio == *best && basis_[i] < basis_[leaving])) {
          best = ratio;
          leaving = i;
        }
      }
      if (leaving < 0) return LpStatus::Unbounded;
      pivot(leaving, entering);
    }
  }

  int n_, nsplit_, m_, ncols_, art0_;
  std::vector<std::vector<F>> a_;
  std::vector<F> b_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
};

// Minimizes objective over the system. Strict rows are rejected.
template <class F>
LpResult<F> lp_minimize(const std::vector<F>& objective, const LinearSystemT<F>& sys) {
  assert(!sys.has_strict());
  assert(static_cast<int>(objective.size()) == sys.arity);
  SimplexTableau<F> tab(sys);
  LpResult<F> res;
  if (!tab.phase1()) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  std::vector<F> cost(tab.split_cols(), F(0));
  for (int j = 0; j < sys.arity; ++j) {
    cost[2 * j] = objective[j];
    cost[2 * j + 1] = -objective[j];
  }
  LpStatus st = tab.phase2(cost);
  if (st == LpStatus::Unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.point = tab.extract();
  res.value = F(0);
  for (int j = 0; j < sys.arity; ++j) res.value += objective[j] * res.point[j];
  return res;
}

template <class F>
LpResult<F> lp_maximize(const std::vector<F>& objective, const LinearSystemT<F>& sys) {
  std::vector<F> neg = objective;
  for (auto& c : neg) c = -c;
  LpResult<F> res = lp_minimize(neg, sys);
  res.value = -res.value;
  return res;
}

// Feasibility with strict rows honored exactly: a shared positive margin is
// maximized over the strict rows; the system is strictly feasible iff the
// optimum margin is positive.
template <class F>
FeasResult<F> lp_feasible(const LinearSystemT<F>& sys) {
  FeasResult<F> out;
  if (!sys.has_strict()) {
    SimplexTableau<F> tab(sys);
    if (!tab.phase1()) return out;
    out.feasible = true;
    out.point = tab.extract();
    return out;
  }
  LinearSystemT<F> aug(sys.arity + 1);
  const int t = sys.arity;
  for (const auto& r : sys.rows) {
    std::vector<F> a = r.coeffs;
    a.push_back(r.kind == RowKind::Lt ? F(1) : F(0));
    aug.add(std::move(a), r.rhs, r.kind == RowKind::Lt ? RowKind::Le : r.kind);
  }
  {
    std::vector<F> a(aug.arity, F(0));
    a[t] = F(1);
    aug.add_le(a, F(1));
    a[t] = F(-1);
    aug.add_le(std::move(a), F(0));  // t >= 0
  }
  std::vector<F> obj(aug.arity, F(0));
  obj[t] = F(-1);  // maximize t
  LpResult<F> res = lp_minimize(obj, aug);
  if (res.status != LpStatus::Optimal) return out;
  if (sign_of(res.point[t]) <= 0) return out;
  out.feasible = true;
  out.point.assign(res.point.begin(), res.point.begin() + sys.arity);
  return out;
}

// Affine dimension of the solution set (-1 when empty): the implicit-equality
// rows are found by one minimization per inequality, then the dimension is
// arity minus the rank of all equality rows.
int affine_dim(const LinearSystem& sys);

}  // namespace pentile
