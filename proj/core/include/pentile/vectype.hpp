#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pentile/rational.hpp"

namespace pentile {

// Occurrence counts of the five corner types around one tiling vertex.
struct VecType {
  std::array<int, 5> counts{0, 0, 0, 0, 0};

  int& operator[](int i) { return counts[i]; }
  int operator[](int i) const { return counts[i]; }
  auto operator<=>(const VecType&) const = default;

  bool dominates(const VecType& o) const {
    for (int i = 0; i < 5; ++i)
      if (counts[i] < o.counts[i]) return false;
    return true;
  }
  VecType doubled() const {
    VecType v = *this;
    for (auto& c : v.counts) c *= 2;
    return v;
  }
  int total() const {
    int t = 0;
    for (int c : counts) t += c;
    return t;
  }
  std::vector<Rational> to_rationals() const {
    return {Rational(counts[0]), Rational(counts[1]), Rational(counts[2]),
            Rational(counts[3]), Rational(counts[4])};
  }

  // Five ASCII digits, e.g. (0,0,0,1,2) <-> "00012". Falls back to a
  // bracketed tuple when some count exceeds 9.
  std::string to_string() const;
  static VecType parse(const std::string& s);
};

// Ordered duplicate-free set of vector types, kept sorted lexicographically.
struct VecTypeSet {
  std::vector<VecType> members;

  VecTypeSet() = default;
  explicit VecTypeSet(std::vector<VecType> ms);

  bool contains(const VecType& v) const;
  void insert(const VecType& v);
  size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  auto begin() const { return members.begin(); }
  auto end() const { return members.end(); }
  auto operator<=>(const VecTypeSet&) const = default;

  bool subset_of(const VecTypeSet& o) const;

  std::string to_string() const;  // space-separated digit strings
  static VecTypeSet parse(const std::string& s);
};

// One of the ten relabelings generated by the cycle (12345) and the mirror
// (3)(24)(15).
struct Permutation5 {
  std::array<int, 5> images{0, 1, 2, 3, 4};  // 0-based: p(i) = images[i]

  VecType apply(const VecType& v) const {
    VecType out;
    for (int i = 0; i < 5; ++i) out[i] = v[images[i]];
    return out;
  }
  Permutation5 compose(const Permutation5& o) const {
    // (this ∘ o): apply o first
    Permutation5 r;
    for (int i = 0; i < 5; ++i) r.images[i] = o.images[images[i]];
    return r;
  }
  auto operator<=>(const Permutation5&) const = default;
};

// The 10-element dihedral relabeling group.
const std::vector<Permutation5>& dihedral_group();
// All 120 coordinate permutations.
const std::vector<Permutation5>& symmetric_group();

VecType corrected(const VecType& v, bool is_half);
VecTypeSet apply_perm(const Permutation5& p, const VecTypeSet& xs);
// Lexicographically least dihedral image.
VecTypeSet canonical_form(const VecTypeSet& xs);

}  // namespace pentile
