#include "pentile/goodsets.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "pentile/linalg.hpp"

namespace pentile {

RatVec choose_u(const VecTypeSet& xs) {
  std::array<Rational, 5> m = min_vector(xs);
  bool need4 = sign_of(m[3]) == 0;
  bool need5 = sign_of(m[4]) == 0;
  if (!need4 && !need5) return RatVec(5, Rational(0));

  // u = (boundary vertex) - (interior point): both lie in the ordered
  // polytope, so u is zero-sum and orthogonal to every member of X, and the
  // boundary vertex pins the required coordinates at zero.
  AnglePolytope ordered = polytope(xs, /*ordered=*/true);
  RatVec tail(5, Rational(0));
  if (need4) tail[3] = 1;
  tail[4] = 1;  // need5 holds whenever need4 does (minima are sorted)
  LpResult<Rational> boundary = lp_minimize(tail, ordered.base);
  if (boundary.status != LpStatus::Optimal || sign_of(boundary.value) != 0)
    throw NoSuchUError("choose_u: no boundary vertex with vanishing tail");
  auto interior = ordered.interior_point();
  if (!interior) throw NoSuchUError("choose_u: ordered polytope has empty interior");

  RatVec u(5);
  for (int i = 0; i < 5; ++i) u[i] = boundary.point[i] - (*interior)[i];
  if ((need4 && sign_of(u[3]) >= 0) || (need5 && sign_of(u[4]) >= 0))
    throw NoSuchUError("choose_u: direction misses a negative coordinate");
  Integer scale = lcm_denominators(u);
  for (auto& c : u) c *= Rational(scale);
  return u;
}

namespace {

VecTypeSet candidate_vectors_impl(const std::array<Rational, 5>& m, const RatVec& u) {
  std::array<long, 5> bound{};
  Rational pos_part(0);
  for (int i = 0; i < 5; ++i) {
    if (sign_of(m[i]) > 0) {
      bound[i] = floor_long(Rational(2) / m[i]);
      if (sign_of(u[i]) > 0) pos_part += Rational(bound[i]) * u[i];
    }
  }
  for (int i = 0; i < 5; ++i) {
    if (sign_of(m[i]) > 0) continue;
    if (sign_of(u[i]) >= 0)
      throw UnboundedCandidatesError("candidate_vectors: u misses a negative coordinate");
    bound[i] = floor_long(pos_part / -u[i]);
  }

  VecTypeSet out;
  VecType v;
  // partial sums: prune when v.m already exceeds 2 or v.u cannot recover
  std::function<void(int, Rational, Rational)> rec = [&](int depth, Rational dm,
                                                         Rational du) {
    if (dm > 2) return;
    Rational u_headroom(0);
    for (int i = depth; i < 5; ++i)
      if (sign_of(u[i]) > 0) u_headroom += u[i] * bound[i];
    if (du + u_headroom < 0) return;
    if (depth == 5) {
      if (sign_of(du) >= 0) out.insert(v);
      return;
    }
    for (long c = 0; c <= bound[depth]; ++c) {
      v[depth] = static_cast<int>(c);
      rec(depth + 1, dm + m[depth] * c, du + u[depth] * c);
    }
    v[depth] = 0;
  };
  rec(0, Rational(0), Rational(0));
  return out;
}

}  // namespace

VecTypeSet candidate_vectors(const VecTypeSet& xs, const RatVec& u) {
  return candidate_vectors_impl(min_vector(xs), u);
}

namespace {

struct RecurseCtx {
  std::function<void(const VecTypeSet&)> emit;
  std::set<VecTypeSet> emitted;
  EnumStats stats;
  int depth = 0;

  void run(VecTypeSet xs, VecTypeSet excluded) {
    if (++stats.recurse_calls > kRecurseBudget)
      throw BudgetExceededError("recurse: call budget exhausted");
    if (depth > 6) throw std::logic_error("recurse: depth bound violated");
    ++stats.calls_by_depth[depth];

    AnglePolytope ordered = polytope(xs, /*ordered=*/true);
    if (!ordered.open_nonempty()) return;
    xs = compat(xs);
    for (const auto& w : excluded)
      if (xs.contains(w)) return;

    if (!xs.empty() && is_good(xs)) {
      if (emitted.insert(xs).second) {
        ++stats.maximal_sets_found;
        emit(xs);
      }
    }

    // coordinate extrema over the ordered polytope (P>= is compat-invariant)
    std::array<Rational, 5> m, cap;
    for (int i = 0; i < 5; ++i) {
      RatVec obj(5, Rational(0));
      obj[i] = 1;
      LpResult<Rational> lo = lp_minimize(obj, ordered.base);
      LpResult<Rational> hi = lp_maximize(obj, ordered.base);
      if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal)
        throw std::logic_error("recurse: nonempty polytope lost its optimum");
      m[i] = lo.value;
      cap[i] = hi.value;
    }

    RatVec u = choose_u(xs);
    VecTypeSet candidates = candidate_vectors_impl(m, u);
    for (const auto& w : candidates) {
      if (xs.contains(w) || excluded.contains(w)) continue;
      // a child surviving line 3 needs w.alpha = 2 somewhere on P>=, which
      // the coordinate maxima already bound
      Rational reach(0);
      for (int i = 0; i < 5; ++i) reach += cap[i] * w[i];
      if (reach < 2) continue;
      ++stats.children_by_depth[depth];
      VecTypeSet child = xs;
      child.insert(w);
      ++depth;
      run(std::move(child), excluded);
      --depth;
      excluded.insert(w);
    }
  }
};

}  // namespace

EnumStats recurse(const VecTypeSet& xs, const VecTypeSet& excluded,
                  const std::function<void(const VecTypeSet&)>& emit) {
  RecurseCtx ctx;
  ctx.emit = emit;
  auto start = std::chrono::steady_clock::now();
  ctx.run(xs, excluded);
  ctx.stats.elapsed = std::chrono::steady_clock::now() - start;
  return ctx.stats;
}

VecTypeSet minimal_basis(const VecTypeSet& maximal) {
  RatMat full = augmented_span_rows(maximal);
  int target = mat_rank(full);
  int k = target - 1;  // rows beyond the all-ones vector

  const auto& ms = maximal.members;
  int n = static_cast<int>(ms.size());
  std::vector<int> pick;
  VecTypeSet best;
  bool found = false;
  // lexicographically least k-subset spanning the full space
  std::function<void(int, int)> rec = [&](int from, int need) {
    if (found) return;
    if (need == 0) {
      VecTypeSet cand(std::vector<VecType>([&] {
        std::vector<VecType> v;
        for (int i : pick) v.push_back(ms[i]);
        return v;
      }()));
      if (mat_rank(augmented_span_rows(cand)) == target) {
        best = cand;
        found = true;
      }
      return;
    }
    for (int i = from; i <= n - need && !found; ++i) {
      pick.push_back(i);
      rec(i + 1, need - 1);
      pick.pop_back();
    }
  };
  rec(0, k);
  if (!found) throw std::logic_error("minimal_basis: no spanning subset");
  return best;
}

EnumerateResult enumerate_all() {
  EnumerateResult out;
  out.stats = recurse(VecTypeSet{}, VecTypeSet{},
                      [&](const VecTypeSet& xs) { out.ordered_maximal.push_back(xs); });

  // All-permutation expansion: every maximal good set with a nonempty open
  // polytope is a coordinate permutation of an order-respecting one.
  std::set<VecTypeSet> permuted;
  for (const auto& xs : out.ordered_maximal)
    for (const auto& p : symmetric_group()) permuted.insert(apply_perm(p, xs));
  out.permuted_count = static_cast<std::int64_t>(permuted.size());

  std::set<VecTypeSet> classes;
  for (const auto& xs : permuted) classes.insert(canonical_form(xs));

  for (const auto& cls : classes) {
    GoodSetRecord rec;
    rec.maximal_set = cls;
    rec.canonical = cls;
    rec.basis = minimal_basis(cls);
    rec.dim = polytope(cls, /*ordered=*/false).dim();
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::vector<GoldenEntry> load_golden_tables(const std::string& data_dir) {
  const std::pair<const char*, int> tables[] = {
      {"table1a.txt", 3}, {"table1b.txt", 2}, {"table1c.txt", 1},
      {"table1d.txt", 0}, {"table1e.txt", 0},
  };
  std::vector<GoldenEntry> out;
  for (const auto& [name, dim] : tables) {
    std::string path = data_dir + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table: " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream is(line);
      GoldenEntry e;
      int struck_flag = 0;
      is >> e.index >> struck_flag;
      e.struck = struck_flag != 0;
      e.dim = dim;
      std::string rest;
      std::getline(is, rest);
      e.basis = VecTypeSet::parse(rest);
      if (e.basis.empty()) throw std::runtime_error("empty basis in " + path);
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GoldenEntry& a, const GoldenEntry& b) { return a.index < b.index; });
  return out;
}

void match_against_golden(std::vector<GoodSetRecord>& records,
                          const std::vector<GoldenEntry>& golden) {
  std::map<VecTypeSet, GoodSetRecord*> by_class;
  for (auto& r : records) by_class[r.canonical] = &r;
  std::set<int> assigned;
  for (const auto& g : golden) {
    VecTypeSet cls = canonical_form(compat(g.basis));
    auto it = by_class.find(cls);
    if (it == by_class.end())
      throw std::runtime_error("golden entry " + std::to_string(g.index) +
                               " has no enumerated class");
    if (it->second->index != 0)
      throw std::runtime_error("golden entry " + std::to_string(g.index) +
                               " collides with " + std::to_string(it->second->index));
    it->second->index = g.index;
    it->second->struck = g.struck;
    if (it->second->dim != g.dim)
      throw std::runtime_error("golden entry " + std::to_string(g.index) +
                               " dim mismatch");
    assigned.insert(g.index);
  }
  for (const auto& r : records)
    if (r.index == 0)
      throw std::runtime_error("enumerated class missing from golden tables: " +
                               r.canonical.to_string());
  std::sort(records.begin(), records.end(),
            [](const GoodSetRecord& a, const GoodSetRecord& b) { return a.index < b.index; });
}

void write_goodsets_tsv(const std::vector<GoodSetRecord>& records, std::ostream& os) {
  for (const auto& r : records) {
    os << r.index << '\t' << r.dim << '\t' << (r.struck ? 1 : 0) << '\t'
       << r.basis.to_string() << '\t' << r.maximal_set.to_string() << '\n';
  }
}

}  // namespace pentile
