#include "pentile/search.hpp"

#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "pentile/render.hpp"
#include "pentile/trig.hpp"

namespace pentile {

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::NoTiling: return "NoTiling";
    case VerdictKind::PrunedIntoFamilies: return "PrunedIntoFamilies";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

CaseData make_case(int index, const VecTypeSet& maximal) {
  CaseData cd;
  cd.index = index;
  cd.xs = maximal;
  cd.p = polytope(maximal, /*ordered=*/false);
  cd.dim = cd.p.dim();
  for (const auto& row : family_table())
    if (family_angles_implied(row, cd.p)) cd.rows.push_back(row);
  return cd;
}

VertexId select_branch_vertex(const TilingGraph& g, const VecTypeSet& xs) {
  VertexId best = -1;
  size_t best_count = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertices.size()); ++v) {
    if (!g.vertices[v].alive || g.is_complete_vertex(v)) continue;
    size_t count = enumerate_attachments(g, v, xs).size();
    if (best < 0 || count < best_count) {
      best = v;
      best_count = count;
    }
  }
  return best;
}

std::vector<BranchEntry> branch_run(const TilingGraph& g, const LengthProgram& q,
                                    const Run& run) {
  RatVec d = run_distance(g, run);
  std::vector<BranchEntry> out;
  {
    LengthProgram q0 = q;
    q0.add_zero(d);
    if (q0.feasible()) {
      TilingGraph g0 = g;
      if (!merge_run_endpoints(g0, run))
        out.push_back(BranchEntry{std::move(g0), std::move(q0), true, 0});
    }
  }
  {
    LengthProgram qp = q;
    qp.add_positive(d);
    if (qp.feasible()) out.push_back(BranchEntry{g, std::move(qp), false, +1});
  }
  {
    LengthProgram qn = q;
    qn.add_negative(d);
    if (qn.feasible()) out.push_back(BranchEntry{g, std::move(qn), false, -1});
  }
  return out;
}

namespace {

bool witness_satisfies(const LengthProgram& q, const ClosureWitness& w) {
  for (const auto& r : q.sys.rows) {
    AlgebraicReal acc(Rational(0));
    for (int i = 0; i < 5; ++i)
      if (r.coeffs[i] != 0) acc += AlgebraicReal(r.coeffs[i]) * w.lengths[i];
    AlgebraicReal residual = acc - AlgebraicReal(r.rhs);
    int s = residual.sign();
    switch (r.kind) {
      case RowKind::Eq:
        if (s != 0) return false;
        break;
      case RowKind::Le:
        if (s > 0) return false;
        break;
      case RowKind::Lt:
        if (s >= 0) return false;
        break;
    }
  }
  return true;
}

// Interval refutation of the closure system at one exact angle vector.
bool point_refuted(const std::array<Rational, 5>& alpha, const LengthProgram& q,
                   int prec_bits) {
  TurningVector s = turning(alpha);
  LinearSystem sys = q.with_open_cube();
  RatVec sin_plus(5), sin_minus(5), cos_plus(5), cos_minus(5);
  for (int i = 0; i < 5; ++i) {
    TrigBounds tb = trig_bounds(s.s[i], s.s[i], prec_bits);
    sin_plus[i] = tb.sin.hi;
    sin_minus[i] = tb.sin.lo;
    cos_plus[i] = tb.cos.hi;
    cos_minus[i] = tb.cos.lo;
  }
  sys.add_ge(sin_plus, Rational(0));
  sys.add_le(sin_minus, Rational(0));
  sys.add_ge(cos_plus, Rational(0));
  sys.add_le(cos_minus, Rational(0));
  return !lp_feasible(sys).feasible;
}

struct Searcher {
  const CaseData& cd;
  const SearchLimits& lim;
  CaseVerdict out;
  bool limit_hit = false;
  std::optional<std::array<Rational, 5>> alpha0;

  explicit Searcher(const CaseData& c, const SearchLimits& l) : cd(c), lim(l) {
    out.case_index = cd.index;
    if (cd.dim == 0) alpha0 = unique_alpha(cd.p);
  }

  void trace(std::uint64_t x) {
    out.stats.trace_hash ^= x;
    out.stats.trace_hash *= 1099511628211ull;
  }

  struct State {
    TilingGraph g;
    LengthProgram q;
    std::set<std::tuple<int, int, std::string>> resolved;
    bool q_dirty = true;
    std::optional<ClosureWitness> witness;
  };

  static std::string dist_key(const RatVec& d) {
    std::string s;
    for (const auto& c : d) {
      s += rat_str(c);
      s += ',';
    }
    return s;
  }

  Certificate run_certificate(State& st) {
    if (cd.dim == 0) {
      if (!alpha0) return Certificate::InfeasibleCertified;
      if (st.witness && witness_satisfies(st.q, *st.witness))
        return Certificate::Feasible;
      if (point_refuted(*alpha0, st.q, lim.cert.prec_bits))
        return Certificate::InfeasibleCertified;
      ClosureWitness w;
      Certificate c = closure_feasible_at(*alpha0, st.q, &w);
      if (c == Certificate::Feasible) st.witness = std::move(w);
      return c;
    }
    return feasibility_certificate(cd.p, st.q, lim.cert);
  }

  void explore(State st) {
    if (limit_hit) return;
    ++out.stats.nodes;
    if (out.stats.nodes > lim.max_nodes) {
      limit_hit = true;
      return;
    }
    if (st.g.tile_count() > out.stats.max_tiles_seen) {
      out.stats.max_tiles_seen = st.g.tile_count();
      Snapshot snap{cd.xs, st.q, st.g};
      out.deepest_snapshot = snap.serialize();
    }
    trace(0x9e3779b97f4a7c15ull + out.stats.nodes);

    // Completion and forced-merge fixed point.
    std::optional<Run> undecided;
    while (true) {
      if (auto viol = complete_vertices(st.g, cd.xs)) {
        ++out.stats.violation_prunes;
        trace(static_cast<std::uint64_t>(*viol) | 0x100);
        return;
      }
      bool progressed = false;
      undecided.reset();
      for (const Run& run : find_runs(st.g)) {
        if (run.cyclic) continue;
        VertexId a = st.g.halfedges[run.corners.front()].origin;
        VertexId b = st.g.halfedges[run.corners.back()].origin;
        RatVec d = run_distance(st.g, run);
        bool dzero = true;
        for (const auto& c : d) dzero &= c == 0;
        auto key = std::make_tuple(std::min(a, b), std::max(a, b), dist_key(d));
        if (st.resolved.count(key)) continue;

        if (a == b) {
          // one vertex, one point: the walk must close
          if (dzero) {
            st.resolved.insert(key);
            continue;
          }
          LengthProgram q0 = st.q;
          q0.add_zero(d);
          if (!q0.feasible()) {
            ++out.stats.infeasible_prunes;
            trace(0x200);
            return;
          }
          st.q = std::move(q0);
          st.q_dirty = true;
          st.resolved.insert(key);
          progressed = true;
          continue;
        }

        LengthProgram q0 = st.q;
        q0.add_zero(d);
        bool f0 = q0.feasible();
        LengthProgram qp = st.q;
        qp.add_positive(d);
        bool fp = qp.feasible();
        LengthProgram qn = st.q;
        qn.add_negative(d);
        bool fn = qn.feasible();
        int alternatives = int(f0) + int(fp) + int(fn);
        if (alternatives == 0) {
          ++out.stats.infeasible_prunes;
          trace(0x201);
          return;
        }
        if (alternatives == 1) {
          if (f0) {
            if (auto viol = merge_run_endpoints(st.g, run)) {
              ++out.stats.violation_prunes;
              trace(static_cast<std::uint64_t>(*viol) | 0x300);
              return;
            }
            ++out.stats.merges;
            progressed = true;
            break;  // the graph changed: rescan runs
          }
          st.resolved.insert(key);
          continue;
        }
        if (!undecided) undecided = run;
      }
      if (!progressed) break;
    }

    CheckResult check = check_invariants(st.g, cd.xs);
    if (!check.ok()) {
      ++out.stats.violation_prunes;
      trace(static_cast<std::uint64_t>(check.violation) | 0x400);
      return;
    }

    if (auto fam = detect_family_rows(cd.rows, st.q)) {
      out.families.insert(fam->type_id);
      ++out.stats.family_prunes;
      trace(0x500 + fam->type_id);
      return;
    }

    if (st.q_dirty || out.stats.nodes % lim.cert_period == 0) {
      Certificate c = run_certificate(st);
      if (c == Certificate::InfeasibleCertified) {
        ++out.stats.certificate_prunes;
        trace(0x600);
        return;
      }
      st.q_dirty = false;
    }

    if (undecided) {
      ++out.stats.run_branches;
      VertexId a = st.g.halfedges[undecided->corners.front()].origin;
      VertexId b = st.g.halfedges[undecided->corners.back()].origin;
      RatVec d = run_distance(st.g, *undecided);
      auto key = std::make_tuple(std::min(a, b), std::max(a, b), dist_key(d));
      for (BranchEntry& entry : branch_run(st.g, st.q, *undecided)) {
        State child;
        child.g = std::move(entry.graph);
        child.q = std::move(entry.q);
        child.resolved = st.resolved;
        if (!entry.merged) child.resolved.insert(key);
        child.q_dirty = true;
        child.witness = st.witness;
        trace(0x700 + entry.order + 1);
        explore(std::move(child));
        if (limit_hit) return;
      }
      return;
    }

    if (st.g.tile_count() >= lim.max_tiles) {
      limit_hit = true;
      return;
    }
    VertexId w = select_branch_vertex(st.g, cd.xs);
    if (w < 0) {
      ++out.stats.dead_ends;
      return;
    }
    std::vector<Attachment> ats = enumerate_attachments(st.g, w, cd.xs);
    if (ats.empty()) {
      ++out.stats.dead_ends;
      trace(0x800);
      return;
    }
    ++out.stats.attach_branches;
    for (const Attachment& at : ats) {
      State child;
      child.g = st.g;
      if (add_face(child.g, at)) continue;  // filtered already; defensive
      child.q = st.q;
      child.resolved = st.resolved;
      child.q_dirty = false;
      child.witness = st.witness;
      trace(0x900 + at.corner * 4 + at.share_outgoing * 2 + at.ascending);
      explore(std::move(child));
      if (limit_hit) return;
    }
  }
};

}  // namespace

CaseVerdict search_case(const CaseData& cd, const SearchLimits& limits) {
  auto start = std::chrono::steady_clock::now();
  Searcher s(cd, limits);
  Searcher::State root;
  root.g = initial_graph();
  root.q = LengthProgram::root();
  s.explore(std::move(root));
  s.out.stats.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s.limit_hit)
    s.out.outcome = VerdictKind::Inconclusive;
  else if (!s.out.families.empty())
    s.out.outcome = VerdictKind::PrunedIntoFamilies;
  else
    s.out.outcome = VerdictKind::NoTiling;
  return s.out;
}

std::vector<CaseVerdict> search_all(const std::vector<CaseData>& cases,
                                    const SearchLimits& limits, int threads) {
  std::vector<CaseVerdict> out(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      out[i] = search_case(cases[i], limits);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

std::string verdict_to_json(const CaseVerdict& v) {
  nlohmann::json j;
  j["case"] = v.case_index;
  j["outcome"] = verdict_name(v.outcome);
  j["families"] = v.families;
  j["stats"] = {
      {"nodes", v.stats.nodes},
      {"max_tiles", v.stats.max_tiles_seen},
      {"run_branches", v.stats.run_branches},
      {"attach_branches", v.stats.attach_branches},
      {"merges", v.stats.merges},
      {"family_prunes", v.stats.family_prunes},
      {"certificate_prunes", v.stats.certificate_prunes},
      {"violation_prunes", v.stats.violation_prunes},
      {"infeasible_prunes", v.stats.infeasible_prunes},
      {"dead_ends", v.stats.dead_ends},
      {"elapsed_sec", v.stats.elapsed_sec},
      {"trace_hash", v.stats.trace_hash},
  };
  return j.dump();
}

CaseVerdict verdict_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  CaseVerdict v;
  v.case_index = j.at("case").get<int>();
  std::string outcome = j.at("outcome").get<std::string>();
  if (outcome == "NoTiling") v.outcome = VerdictKind::NoTiling;
  else if (outcome == "PrunedIntoFamilies") v.outcome = VerdictKind::PrunedIntoFamilies;
  else v.outcome = VerdictKind::Inconclusive;
  for (int f : j.at("families")) v.families.insert(f);
  const auto& s = j.at("stats");
  v.stats.nodes = s.at("nodes").get<std::int64_t>();
  v.stats.max_tiles_seen = s.at("max_tiles").get<int>();
  v.stats.run_branches = s.at("run_branches").get<std::int64_t>();
  v.stats.attach_branches = s.at("attach_branches").get<std::int64_t>();
  v.stats.merges = s.at("merges").get<std::int64_t>();
  v.stats.family_prunes = s.at("family_prunes").get<std::int64_t>();
  v.stats.certificate_prunes = s.at("certificate_prunes").get<std::int64_t>();
  v.stats.violation_prunes = s.at("violation_prunes").get<std::int64_t>();
  v.stats.infeasible_prunes = s.at("infeasible_prunes").get<std::int64_t>();
  v.stats.dead_ends = s.at("dead_ends").get<std::int64_t>();
  v.stats.elapsed_sec = s.at("elapsed_sec").get<double>();
  v.stats.trace_hash = s.at("trace_hash").get<std::uint64_t>();
  return v;
}

}  // namespace pentile
