#include "pentile/vectype.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pentile {

std::string VecType::to_string() const {
  bool wide = false;
  for (int c : counts)
    if (c > 9) wide = true;
  if (!wide) {
    std::string s;
    for (int c : counts) s.push_back(static_cast<char>('0' + c));
    return s;
  }
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < 5; ++i) os << counts[i] << (i < 4 ? "," : ")");
  return os.str();
}

VecType VecType::parse(const std::string& s) {
  VecType v;
  if (!s.empty() && s.front() == '(') {
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream is(body);
    std::string tok;
    for (int i = 0; i < 5; ++i) {
      if (!std::getline(is, tok, ',')) throw std::invalid_argument("bad vectype: " + s);
      v[i] = std::stoi(tok);
    }
    return v;
  }
  if (s.size() != 5) throw std::invalid_argument("vectype needs 5 digits: " + s);
  for (int i = 0; i < 5; ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad digit in: " + s);
    v[i] = s[i] - '0';
  }
  return v;
}

VecTypeSet::VecTypeSet(std::vector<VecType> ms) : members(std::move(ms)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VecTypeSet::contains(const VecType& v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

void VecTypeSet::insert(const VecType& v) {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) members.insert(it, v);
}

bool VecTypeSet::subset_of(const VecTypeSet& o) const {
  for (const auto& v : members)
    if (!o.contains(v)) return false;
  return true;
}

std::string VecTypeSet::to_string() const {
  std::string out;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ' ';
    out += members[i].to_string();
  }
  return out;
}

VecTypeSet VecTypeSet::parse(const std::string& s) {
  std::istringstream is(s);
  std::string tok;
  std::vector<VecType> ms;
  while (is >> tok) ms.push_back(VecType::parse(tok));
  return VecTypeSet(std::move(ms));
}

const std::vector<Permutation5>& dihedral_group() {
  static const std::vector<Permutation5> group = [] {
    Permutation5 rot{{1, 2, 3, 4, 0}};     // (12345)
    Permutation5 mirror{{4, 3, 2, 1, 0}};  // (3)(24)(15)
    std::set<std::array<int, 5>> seen;
    std::vector<Permutation5> out;
    std::vector<Permutation5> frontier{Permutation5{}};
    while (!frontier.empty()) {
      Permutation5 p = frontier.back();
      frontier.pop_back();
      if (!seen.insert(p.images).second) continue;
      out.push_back(p);
      frontier.push_back(p.compose(rot));
      frontier.push_back(p.compose(mirror));
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return group;
}

const std::vector<Permutation5>& symmetric_group() {
  static const std::vector<Permutation5> group = [] {
    std::array<int, 5> ids{0, 1, 2, 3, 4};
    std::vector<Permutation5> out;
    do {
      out.push_back(Permutation5{ids});
    } while (std::next_permutation(ids.begin(), ids.end()));
    return out;
  }();
  return group;
}

VecType corrected(const VecType& v, bool is_half) {
  return is_half ? v.doubled() : v;
}

VecTypeSet apply_perm(const Permutation5& p, const VecTypeSet& xs) {
  std::vector<VecType> out;
  out.reserve(xs.size());
  for (const auto& v : xs) out.push_back(p.apply(v));
  return VecTypeSet(std::move(out));
}

VecTypeSet canonical_form(const VecTypeSet& xs) {
  VecTypeSet best = xs;
  for (const auto& p : dihedral_group()) {
    VecTypeSet img = apply_perm(p, xs);
    if (img < best) best = img;
  }
  return best;
}

}  // namespace pentile
