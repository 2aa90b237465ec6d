#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pentile/certificate.hpp"
#include "pentile/families.hpp"
#include "pentile/goodsets.hpp"
#include "pentile/lengths.hpp"
#include "pentile/tiling_graph.hpp"

namespace pentile {

struct SearchLimits {
  int max_tiles = 50;
  std::int64_t max_nodes = 1'000'000;
  int cert_period = 8;  // covering-certificate cadence for dim > 0
  CertificateOptions cert;
};

enum class VerdictKind { NoTiling, PrunedIntoFamilies, Inconclusive };

const char* verdict_name(VerdictKind v);

struct SearchStats {
  std::int64_t nodes = 0;
  int max_tiles_seen = 0;
  std::int64_t run_branches = 0;
  std::int64_t attach_branches = 0;
  std::int64_t merges = 0;
  std::int64_t family_prunes = 0;
  std::int64_t certificate_prunes = 0;
  std::int64_t violation_prunes = 0;
  std::int64_t infeasible_prunes = 0;
  std::int64_t dead_ends = 0;
  double elapsed_sec = 0;
  std::uint64_t trace_hash = 1469598103934665603ull;  // FNV-1a offset basis
};

struct CaseVerdict {
  int case_index = 0;
  VerdictKind outcome = VerdictKind::Inconclusive;
  std::set<int> families;  // family hits recorded during the search
  SearchStats stats;
  std::string deepest_snapshot;  // deepest state, for failure reproduction
};

// Immutable per-case data shared by all nodes of one search.
struct CaseData {
  int index = 0;
  VecTypeSet xs;  // compat-closed canonical class
  AnglePolytope p;
  int dim = 0;
  std::vector<FamilyCondition> rows;  // table rows whose angle part holds on P
};

CaseData make_case(int index, const VecTypeSet& maximal);

// Non-complete vertex with the fewest surviving attachments, ties broken by
// smallest id; -1 when every vertex is complete.
VertexId select_branch_vertex(const TilingGraph& g, const VecTypeSet& xs);

struct BranchEntry {
  TilingGraph graph;
  LengthProgram q;
  bool merged = false;
  int order = 0;  // -1, 0, +1: the sign committed for the pair distance
};

// The three-way split on one undecided run pair; only feasible children are
// returned (the merged child carries the d = 0 row).
std::vector<BranchEntry> branch_run(const TilingGraph& g, const LengthProgram& q,
                                    const Run& run);

CaseVerdict search_case(const CaseData& cd, const SearchLimits& limits);
std::vector<CaseVerdict> search_all(const std::vector<CaseData>& cases,
                                    const SearchLimits& limits, int threads = 1);

std::string verdict_to_json(const CaseVerdict& v);
CaseVerdict verdict_from_json(const std::string& line);

}  // namespace pentile
