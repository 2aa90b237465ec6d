#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "pentile/rational.hpp"

namespace pentile {

enum class RowKind { Eq, Le, Lt };  // a.x = b, a.x <= b, a.x < b

template <class F>
struct RowT {
  std::vector<F> coeffs;
  F rhs;
  RowKind kind = RowKind::Le;
};

// A conjunction of exact linear constraints over n variables. Strict rows
// participate only in feasibility queries, never in optimization.
template <class F>
struct LinearSystemT {
  int arity = 0;
  std::vector<RowT<F>> rows;

  LinearSystemT() = default;
  explicit LinearSystemT(int n) : arity(n) {}

  void add(std::vector<F> a, F b, RowKind k) {
    assert(static_cast<int>(a.size()) == arity);
    rows.push_back(RowT<F>{std::move(a), std::move(b), k});
  }
  void add_eq(std::vector<F> a, F b) { add(std::move(a), std::move(b), RowKind::Eq); }
  void add_le(std::vector<F> a, F b) { add(std::move(a), std::move(b), RowKind::Le); }
  void add_lt(std::vector<F> a, F b) { add(std::move(a), std::move(b), RowKind::Lt); }
  void add_ge(std::vector<F> a, F b) {
    for (auto& c : a) c = -c;
    add(std::move(a), -b, RowKind::Le);
  }
  void add_gt(std::vector<F> a, F b) {
    for (auto& c : a) c = -c;
    add(std::move(a), -b, RowKind::Lt);
  }

  // Bounds a single variable: lo <= x_i <= hi (strict if requested).
  void add_box(int i, const F& lo, const F& hi, bool strict = false) {
    std::vector<F> a(arity, F(0));
    a[i] = F(1);
    add(a, hi, strict ? RowKind::Lt : RowKind::Le);
    a[i] = F(-1);
    add(std::move(a), -lo, strict ? RowKind::Lt : RowKind::Le);
  }

  bool has_strict() const {
    for (const auto& r : rows)
      if (r.kind == RowKind::Lt) return true;
    return false;
  }

  // Non-strict relaxation (Lt rows become Le).
  LinearSystemT relaxed() const {
    LinearSystemT out = *this;
    for (auto& r : out.rows)
      if (r.kind == RowKind::Lt) r.kind = RowKind::Le;
    return out;
  }

  bool satisfies(const std::vector<F>& x) const {
    for (const auto& r : rows) {
      F v(0);
      for (int j = 0; j < arity; ++j) v += r.coeffs[j] * x[j];
      switch (r.kind) {
        case RowKind::Eq:
          if (v != r.rhs) return false;
          break;
        case RowKind::Le:
          if (v > r.rhs) return false;
          break;
        case RowKind::Lt:
          if (v >= r.rhs) return false;
          break;
      }
    }
    return true;
  }
};

using LinearSystem = LinearSystemT<Rational>;

}  // namespace pentile
