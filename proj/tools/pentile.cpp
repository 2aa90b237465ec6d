// Command-line driver: good-set enumeration with golden-table checking, the
// per-case backtracking search, and SVG rendering of graph snapshots.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pentile/goodsets.hpp"
#include "pentile/render.hpp"
#include "pentile/search.hpp"

namespace {

using namespace pentile;

std::string data_dir() {
  if (const char* env = std::getenv("PENTILE_DATA")) return env;
  return "data";
}

struct Enumeration {
  EnumerateResult result;
  bool matched = false;
};

Enumeration run_enumeration(bool require_golden) {
  Enumeration e;
  e.result = enumerate_all();
  try {
    auto golden = load_golden_tables(data_dir());
    match_against_golden(e.result.records, golden);
    e.matched = true;
  } catch (const std::exception& ex) {
    if (require_golden) throw;
    std::cerr << "warning: golden tables unavailable (" << ex.what()
              << "); class indices unassigned\n";
  }
  return e;
}

// Mutual implication of the defining equalities: both polytopes see every
// equality of the other side as identically satisfied.
bool polytopes_equal(const VecTypeSet& a, const VecTypeSet& b) {
  AnglePolytope pa = polytope(a, false), pb = polytope(b, false);
  auto implied = [](const AnglePolytope& p, const VecTypeSet& gens) {
    for (const auto& v : gens) {
      RatVec c = v.to_rationals();
      LpResult<Rational> lo = lp_minimize(c, p.base);
      LpResult<Rational> hi = lp_maximize(c, p.base);
      if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal) return false;
      if (lo.value != 2 || hi.value != 2) return false;
    }
    return true;
  };
  return implied(pa, b) && implied(pb, a);
}

int cmd_enumerate(bool check, const std::string& out_path) {
  Enumeration e = run_enumeration(/*require_golden=*/check);
  const auto& r = e.result;

  std::map<int, int> by_dim;
  for (const auto& rec : r.records) ++by_dim[rec.dim];
  std::cout << r.stats.maximal_sets_found << " maximal good sets ("
            << r.stats.recurse_calls << " recursion calls, " << r.stats.elapsed.count()
            << " s)\n";
  std::cout << r.permuted_count << " sets after permutation expansion\n";
  std::cout << r.records.size() << " canonical classes; by dim:";
  for (auto it = by_dim.rbegin(); it != by_dim.rend(); ++it)
    std::cout << " dim" << it->first << "=" << it->second;
  std::cout << "\n";

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  write_goodsets_tsv(r.records, out);
  std::cout << "wrote " << out_path << "\n";

  if (check) {
    auto golden = load_golden_tables(data_dir());
    for (const auto& entry : golden) {
      const auto* rec = &r.records[entry.index - 1];
      if (rec->index != entry.index) {
        std::cerr << "check: record order broken at " << entry.index << "\n";
        return 2;
      }
      VecTypeSet gset = canonical_form(compat(entry.basis));
      if (gset.to_string() != rec->canonical.to_string()) {
        std::cerr << "check: class " << entry.index << " canonical form mismatch\n";
        return 2;
      }
      if (!polytopes_equal(rec->maximal_set, compat(entry.basis))) {
        std::cerr << "check: class " << entry.index << " polytope mismatch\n";
        return 2;
      }
    }
    std::cout << "golden tables check: ok (" << golden.size() << " classes)\n";
  }
  return 0;
}

int cmd_search(int case_index, bool all, const SearchLimits& limits, int threads,
               const std::string& report_path, const std::string& snapshot_dir) {
  Enumeration e = run_enumeration(/*require_golden=*/true);
  const auto& records = e.result.records;

  std::vector<CaseData> cases;
  if (all) {
    for (const auto& rec : records) cases.push_back(make_case(rec.index, rec.maximal_set));
  } else {
    if (case_index < 1 || case_index > static_cast<int>(records.size())) {
      std::cerr << "invalid case index " << case_index << " (valid: 1.."
                << records.size() << ")\n";
      return 3;
    }
    const auto& rec = records[case_index - 1];
    cases.push_back(make_case(rec.index, rec.maximal_set));
  }

  std::vector<CaseVerdict> verdicts = search_all(cases, limits, threads);

  std::ofstream report(report_path, std::ios::binary);
  for (const auto& v : verdicts) {
    report << verdict_to_json(v) << "\n";
    std::cout << "case " << v.case_index << ": " << verdict_name(v.outcome);
    if (!v.families.empty()) {
      std::cout << " families={";
      bool first = true;
      for (int f : v.families) {
        std::cout << (first ? "" : ",") << f;
        first = false;
      }
      std::cout << "}";
    }
    std::cout << " nodes=" << v.stats.nodes << " tiles<=" << v.stats.max_tiles_seen
              << "\n";
    if (!snapshot_dir.empty() && !v.deepest_snapshot.empty()) {
      std::filesystem::create_directories(snapshot_dir);
      std::string path = snapshot_dir + "/case_" + std::to_string(v.case_index) +
                         ".snapshot";
      std::ofstream snap(path, std::ios::binary);
      snap << v.deepest_snapshot;
    }
  }
  std::cout << "report: " << report_path << "\n";
  return 0;
}

int cmd_render(const std::string& snapshot_path, const std::string& out_path,
               double scale) {
  std::ifstream in(snapshot_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << snapshot_path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Snapshot snap = Snapshot::deserialize(buf.str());
  RenderOptions opts;
  opts.scale = scale;
  std::string svg = render_svg(snap, opts);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << svg;
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and tiling search for convex pentagon angle cases"};
  app.require_subcommand(1);

  auto* enm = app.add_subcommand("enumerate", "Enumerate maximal good sets and classes");
  bool check = false;
  std::string out_path = "goodsets.tsv";
  enm->add_flag("--check", check, "verify the result against the golden tables");
  enm->add_option("--out", out_path, "output TSV path");

  auto* sch = app.add_subcommand("search", "Backtracking tiling search per angle case");
  int case_index = 0;
  bool all = false;
  SearchLimits limits;
  int threads = 1;
  std::string report_path = "search_report.jsonl";
  std::string snapshot_dir;
  auto* case_opt = sch->add_option("--case", case_index, "case index (1..371)");
  sch->add_flag("--all", all, "search every case");
  sch->add_option("--max-tiles", limits.max_tiles, "tile budget per case");
  sch->add_option("--max-nodes", limits.max_nodes, "node budget per case");
  sch->add_option("--threads", threads, "worker threads for --all");
  sch->add_option("--cert-period", limits.cert_period,
                  "covering-certificate cadence (nodes)");
  sch->add_option("--report", report_path, "JSON-lines report path");
  sch->add_option("--snapshot-dir", snapshot_dir, "dump deepest snapshots here");

  auto* rnd = app.add_subcommand("render", "Render a graph snapshot to SVG");
  std::string snapshot_path, svg_path;
  double scale = 120.0;
  rnd->add_option("--snapshot", snapshot_path, "snapshot file")->required();
  rnd->add_option("--out", svg_path, "output SVG path")->required();
  rnd->add_option("--scale", scale, "SVG units per unit length");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enm->parsed()) return cmd_enumerate(check, out_path);
    if (sch->parsed()) {
      if (!all && case_opt->count() == 0) {
        std::cerr << "search: need --case N or --all\n";
        return 3;
      }
      return cmd_search(case_index, all, limits, threads, report_path, snapshot_dir);
    }
    if (rnd->parsed()) return cmd_render(snapshot_path, svg_path, scale);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
