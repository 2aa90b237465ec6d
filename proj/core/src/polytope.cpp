#include "pentile/polytope.hpp"

#include <functional>

#include "pentile/linalg.hpp"

namespace pentile {

LinearSystem AnglePolytope::with_open_cube() const {
  LinearSystem sys = base;
  for (int i = 0; i < 5; ++i) sys.add_box(i, Rational(0), Rational(1), /*strict=*/true);
  return sys;
}

std::optional<RatVec> AnglePolytope::interior_point() const {
  FeasResult<Rational> res = lp_feasible(with_open_cube());
  if (!res.feasible) return std::nullopt;
  return res.point;
}

AnglePolytope polytope(const VecTypeSet& xs, bool ordered) {
  AnglePolytope p;
  p.base = LinearSystem(5);
  p.base.add_eq(RatVec(5, Rational(1)), Rational(3));
  for (int i = 0; i < 5; ++i) p.base.add_box(i, Rational(0), Rational(1));
  for (const auto& v : xs) p.base.add_eq(v.to_rationals(), Rational(2));
  if (ordered) {
    for (int i = 0; i + 1 < 5; ++i) {
      RatVec a(5, Rational(0));
      a[i] = -1;
      a[i + 1] = 1;
      p.base.add_le(std::move(a), Rational(0));  // alpha_i >= alpha_{i+1}
    }
  }
  return p;
}

RatMat augmented_span_rows(const VecTypeSet& xs) {
  RatMat rows;
  rows.push_back(RatVec{1, 1, 1, 1, 1, 3});
  for (const auto& v : xs) {
    RatVec r = v.to_rationals();
    r.push_back(Rational(2));
    rows.push_back(std::move(r));
  }
  return rows;
}

VecTypeSet compat(const VecTypeSet& xs) {
  AnglePolytope p = polytope(xs, /*ordered=*/false);

  // Every member w satisfies w.alpha = 2 on all of P, hence (with alpha >= 0
  // and w >= 0) w_i <= 2 / max{alpha_i}. A vanishing maximum means the open
  // polytope is empty and no finite bound exists.
  std::array<long, 5> bound{};
  for (int i = 0; i < 5; ++i) {
    RatVec obj(5, Rational(0));
    obj[i] = 1;
    LpResult<Rational> mx = lp_maximize(obj, p.base);
    if (mx.status != LpStatus::Optimal || sign_of(mx.value) <= 0)
      throw InfiniteSetError("compat: no coordinate bound (open polytope empty)");
    bound[i] = floor_long(Rational(2) / mx.value);
  }

  // Membership of (w,2) in the span is a finite list of orthogonality
  // constraints against the span's complement.
  RatMat comp = nullspace(augmented_span_rows(xs), 6);

  VecTypeSet out;
  VecType w;
  auto feasible_tail = [&](int depth, const RatVec& partial) {
    // interval pruning on each complement constraint
    for (const auto& n : comp) {
      Rational fixed = n[5] * 2;
      for (int j = 0; j < depth; ++j) fixed += n[j] * w[j];
      Rational lo(0), hi(0);
      for (int j = depth; j < 5; ++j) {
        Rational c = n[j];
        if (sign_of(c) > 0)
          hi += c * bound[j];
        else
          lo += c * bound[j];
      }
      if (fixed + lo > 0 || fixed + hi < 0) return false;
    }
    (void)partial;
    return true;
  };

  std::function<void(int)> rec = [&](int depth) {
    if (!feasible_tail(depth, {})) return;
    if (depth == 5) {
      out.insert(w);
      return;
    }
    for (long v = 0; v <= bound[depth]; ++v) {
      w[depth] = static_cast<int>(v);
      rec(depth + 1);
    }
    w[depth] = 0;
  };
  rec(0);
  return out;
}

bool is_good(const VecTypeSet& xs) {
  if (xs.empty()) return true;
  // X fails goodness iff some u with sum(u)=0 and u.v >= 0 for all v has
  // u.v0 > 0 for a member v0 (the all-nonpositive side is the mirror u -> -u).
  LinearSystem cone(5);
  cone.add_eq(RatVec(5, Rational(1)), Rational(0));
  for (const auto& v : xs) cone.add_ge(v.to_rationals(), Rational(0));
  for (int i = 0; i < 5; ++i) cone.add_box(i, Rational(-1), Rational(1));
  for (const auto& v0 : xs) {
    LpResult<Rational> res = lp_maximize(v0.to_rationals(), cone);
    if (res.status != LpStatus::Optimal)
      throw std::logic_error("is_good: bounded LP failed");
    if (sign_of(res.value) > 0) return false;
  }
  return true;
}

std::array<Rational, 5> min_vector(const VecTypeSet& xs) {
  AnglePolytope p = polytope(xs, /*ordered=*/true);
  std::array<Rational, 5> m;
  for (int i = 0; i < 5; ++i) {
    RatVec obj(5, Rational(0));
    obj[i] = 1;
    LpResult<Rational> res = lp_minimize(obj, p.base);
    if (res.status != LpStatus::Optimal)
      throw EmptyPolytopeError("min_vector: empty ordered polytope");
    m[i] = res.value;
  }
  return m;
}

}  // namespace pentile
