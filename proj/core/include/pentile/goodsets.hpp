#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pentile/polytope.hpp"
#include "pentile/vectype.hpp"

namespace pentile {

struct EnumStats {
  std::int64_t recurse_calls = 0;
  std::int64_t maximal_sets_found = 0;
  std::chrono::duration<double> elapsed{0};
  std::array<std::int64_t, 7> calls_by_depth{};
  std::array<std::int64_t, 7> children_by_depth{};
};

struct NoSuchUError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedCandidatesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hard cap on recursion work; termination is proven, the cap catches bugs.
inline constexpr std::int64_t kRecurseBudget = 1'000'000;

// Zero-sum direction orthogonal to X with u_i < 0 wherever the ordered
// minimum vanishes on coordinates 4 and 5; deterministic (lexicographic LP,
// denominators cleared).
RatVec choose_u(const VecTypeSet& xs);

// The finite branch set { v in N^5 : v.u >= 0 and v.m_X <= 2 }.
VecTypeSet candidate_vectors(const VecTypeSet& xs, const RatVec& u);

// Exhaustive search for maximal good supersets of X avoiding `excluded`,
// with the sibling-exclusion optimization threaded through.
EnumStats recurse(const VecTypeSet& xs, const VecTypeSet& excluded,
                  const std::function<void(const VecTypeSet&)>& emit);

struct GoodSetRecord {
  int index = 0;  // 1..371 once matched against the published tables
  VecTypeSet maximal_set;  // canonical class representative, compat-closed
  VecTypeSet basis;        // lexicographically least generating subset
  VecTypeSet canonical;
  int dim = 0;
  bool struck = false;
};

struct EnumerateResult {
  std::vector<VecTypeSet> ordered_maximal;  // the sets found by recurse
  std::int64_t permuted_count = 0;          // all-permutation expansion size
  std::vector<GoodSetRecord> records;       // one per canonical class
  EnumStats stats;
};

// Full pipeline: recurse from the empty set, expand over all coordinate
// permutations, canonicalize under the dihedral group, classify dimensions,
// select display bases.
EnumerateResult enumerate_all();

// Golden tables --------------------------------------------------------

struct GoldenEntry {
  int index = 0;
  int dim = 0;
  bool struck = false;
  VecTypeSet basis;
};

// Loads data/table1a.txt .. table1e.txt from the given directory.
std::vector<GoldenEntry> load_golden_tables(const std::string& data_dir);

// Assigns published indices and strike flags to the records by matching
// canonical classes; throws on any mismatch in either direction.
void match_against_golden(std::vector<GoodSetRecord>& records,
                          const std::vector<GoldenEntry>& golden);

// Minimal generating subset of a compat-closed set, lexicographically least.
VecTypeSet minimal_basis(const VecTypeSet& maximal);

void write_goodsets_tsv(const std::vector<GoodSetRecord>& records, std::ostream& os);

}  // namespace pentile
