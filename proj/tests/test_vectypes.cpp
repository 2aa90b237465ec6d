#include <doctest.h>

#include <functional>
#include <random>

#include "pentile/linalg.hpp"
#include "pentile/polytope.hpp"
#include "pentile/vectype.hpp"

using namespace pentile;

namespace {

VecType vt(const char* s) { return VecType::parse(s); }
VecTypeSet vs(const char* s) { return VecTypeSet::parse(s); }

// brute-force closure oracle: scan the whole coordinate box and verify no
// boundary candidates appear one past the bound
VecTypeSet compat_oracle(const VecTypeSet& xs, int bound = 6) {
  RatMat rows = augmented_span_rows(xs);
  VecTypeSet out;
  VecType w;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == 5) {
      RatVec aug = w.to_rationals();
      aug.push_back(Rational(2));
      if (span_member(aug, rows)) {
        for (int i = 0; i < 5; ++i) REQUIRE(w[i] < bound + 1);
        out.insert(w);
      }
      return;
    }
    for (int c = 0; c <= bound + 1; ++c) {
      w[depth] = c;
      rec(depth + 1);
    }
    w[depth] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("digit codec round trip") {
  CHECK(vt("00012").to_string() == "00012");
  CHECK(vt("00012") == VecType{{0, 0, 0, 1, 2}});
  VecType wide{{0, 0, 0, 2, 12}};
  CHECK(VecType::parse(wide.to_string()) == wide);
  CHECK(vs("11100 00022").to_string() == "00022 11100");  // members sorted
  CHECK(VecTypeSet::parse(vs("00012 00111").to_string()) == vs("00111 00012"));
}

TEST_CASE("corrected doubles half vertices only") {
  CHECK(corrected(vt("00011"), true) == vt("00022"));
  CHECK(corrected(vt("11100"), false) == vt("11100"));
  CHECK(corrected(vt("00101"), true) == vt("00202"));
}

TEST_CASE("dihedral group has ten elements and acts as documented") {
  CHECK(dihedral_group().size() == 10);
  CHECK(symmetric_group().size() == 120);
  Permutation5 mirror{{4, 3, 2, 1, 0}};
  CHECK(apply_perm(mirror, vs("00012")) == vs("21000"));
  Permutation5 rot{{1, 2, 3, 4, 0}};
  VecTypeSet x = vs("00012 01100");
  VecTypeSet y = x;
  for (int i = 0; i < 5; ++i) y = apply_perm(rot, y);
  CHECK(y == x);
  Permutation5 ident;
  CHECK(apply_perm(ident, x) == x);
}

TEST_CASE("canonical form is orbit invariant") {
  VecTypeSet x = vs("00012");
  CHECK(canonical_form(x) == vs("00012"));
  for (const auto& p : dihedral_group())
    CHECK(canonical_form(apply_perm(p, x)) == canonical_form(x));
}

TEST_CASE("compat of the empty set is empty") {
  CHECK(compat(VecTypeSet{}).empty());
}

TEST_CASE("compat of a single full type adds its half companion") {
  VecTypeSet r = compat(vs("11100"));
  CHECK(r == vs("11100 00022"));
}

TEST_CASE("compat is idempotent") {
  VecTypeSet b7 = vs("00012 00111");
  VecTypeSet once = compat(b7);
  CHECK(compat(once) == once);
}

TEST_CASE("compat agrees with the bounded brute-force oracle") {
  const char* cases[] = {
      "11100",          "11010",          "00003 11100",    "00012 00111",
      "00012 01011",    "00102 01020",    "00102 10110",    "01011 11010",
      "00003 00012 01002", "00003 00012 01200", "00003 00102 01020",
      "00012 00102 01011", "00012 00120 21000", "00201 02010 10200",
      "00003 00012 00102 01002", "00120 02001 20010 00004",
      "00012 00120 21000 00301", "01020 02001 10200 30010",
      "00021 00210 01011 10020", "00003 01200 02010 00031",
  };
  for (const char* c : cases) {
    VecTypeSet xs = vs(c);
    CHECK(compat(xs) == compat_oracle(xs));
  }
}

TEST_CASE("goodness of the documented examples") {
  CHECK(is_good(VecTypeSet{}));
  CHECK_FALSE(is_good(vs("11100")));
  CHECK(is_good(vs("11100 00022")));
}

TEST_CASE("goodness is permutation invariant") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> cd(0, 2);
  std::uniform_int_distribution<int> sz(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<VecType> ms;
    int k = sz(rng);
    for (int i = 0; i < k; ++i) {
      VecType v;
      for (int j = 0; j < 5; ++j) v[j] = cd(rng);
      ms.push_back(v);
    }
    VecTypeSet x(ms);
    bool base = is_good(x);
    for (const auto& p : dihedral_group())
      CHECK(is_good(apply_perm(p, x)) == base);
  }
}

TEST_CASE("good sets stay good under compat closure") {
  const char* cases[] = {"11100 00022", "11010", "00012 00111", "00102 01020"};
  for (const char* c : cases) {
    VecTypeSet xs = vs(c);
    if (!polytope(xs, false).open_nonempty()) continue;
    if (is_good(xs)) CHECK(is_good(compat(xs)));
  }
}

TEST_CASE("polytope witnesses and equalities") {
  AnglePolytope p0 = polytope(VecTypeSet{}, true);
  auto w = p0.interior_point();
  REQUIRE(w.has_value());
  CHECK(p0.base.satisfies(*w));
  RatVec uniform(5, Rational(3, 5));
  CHECK(p0.base.satisfies(uniform));

  // P_X equals P_compat(X) as a set: every closure member is implied
  VecTypeSet x = vs("00003 01101");
  VecTypeSet cx = compat(x);
  AnglePolytope px = polytope(x, false);
  for (const auto& v : cx) {
    auto lo = lp_minimize(v.to_rationals(), px.base);
    auto hi = lp_maximize(v.to_rationals(), px.base);
    REQUIRE(lo.status == LpStatus::Optimal);
    CHECK(lo.value == 2);
    CHECK(hi.value == 2);
  }
}

TEST_CASE("min_vector of the empty set") {
  auto m = min_vector(VecTypeSet{});
  CHECK(m[0] == Rational(3, 5));
  CHECK(m[1] == Rational(1, 2));
  CHECK(m[2] == Rational(1, 3));
  CHECK(m[3] == Rational(0));
  CHECK(m[4] == Rational(0));
  for (int i = 0; i + 1 < 5; ++i) CHECK(m[i] >= m[i + 1]);
}

TEST_CASE("min_vector throws on an empty ordered polytope") {
  VecTypeSet xs = vs("55555");  // forces alpha sum 2/5 < lower bound
  CHECK_THROWS_AS(min_vector(xs), EmptyPolytopeError);
}

TEST_CASE("vertex equalities hold exactly at polytope optima") {
  VecTypeSet xs = compat(vs("00012 00111"));
  AnglePolytope p = polytope(xs, false);
  for (const auto& v : xs) {
    for (int i = 0; i < 5; ++i) {
      RatVec obj(5, Rational(0));
      obj[i] = 1;
      auto vert = lp_minimize(obj, p.base);
      REQUIRE(vert.status == LpStatus::Optimal);
      CHECK(dot(v.to_rationals(), vert.point) == Rational(2));
    }
  }
}
