// Observer-side verification: exact admissible-situation counting for a
// fake-count hypothesis, success/discreetness verdicts, revealing factor,
// weighing-subset tables and greedy ordering. Two independent counting
// routes are provided: the class-level counter (admissible_count) and a
// literal coin-level brute force (oracle_admissible_count) that shares no
// counting code with it.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "coinproof/combinatorics.hpp"
#include "coinproof/model.hpp"

namespace coinproof {

inline constexpr std::uint64_t kDefaultOracleCap = 500000;

class OracleCapExceeded : public std::runtime_error {
 public:
  explicit OracleCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Result of counting situations with n fakes consistent with a syndrome.
// per_class[j] is the set of fake counts class j takes over all
// consistent class-level vectors.
struct ClassCountResult {
  Count count;
  std::vector<std::set<long long>> per_class;
};

// Enumerates class-level count vectors (x_1..x_p), sum = n,
// 0 <= x_j <= g_j, whose induced per-weighing signs equal the syndrome;
// returns sum over consistent vectors of prod_j C(g_j, x_j).
// Depth-first, lexicographic, with remaining-sum and per-weighing
// reachability pruning.
ClassCountResult admissible_count(const Strategy& strategy, long long n, const Syndrome& syndrome);

// Independent oracle: enumerates all coin-level subsets of size n and
// evaluates each weighing literally. Requires C(t, n) <= cap, else
// throws OracleCapExceeded.
Count oracle_admissible_count(const Strategy& strategy, long long n, const Syndrome& syndrome,
                              std::uint64_t cap = kDefaultOracleCap);

struct AdmissibleReport {
  Syndrome syndrome;
  Count count_f;
  Count count_d;
  bool success = false;
  bool discreet = false;
  Ratio X;  // C(t,f) / count_f
  Ratio R;  // 1 - 1/X
  std::vector<std::set<long long>> per_class;  // admissible fake counts within Z_f
  std::vector<long long> class_sizes;
};

// Full verdict under the realized syndrome of the prover's arrangement.
// success  <=>  count_d = 0 and count_f > 0.
// discreet <=>  success and every class j has a consistent Z_f vector
//               with x_j >= 1 and one with x_j <= g_j - 1.
AdmissibleReport verify(const Strategy& strategy);

struct SubsetRow {
  std::vector<int> weighing_indices;
  Count count_f;
  Count count_d;
};

// One row per subset of weighings (order-irrelevant), counts for Z_f and
// Z_d under the realized sub-syndrome. Rows in subset-size order, then by
// index list. Requires m <= 20.
std::vector<SubsetRow> subset_table(const Strategy& strategy);

// Greedy permutation of weighing indices maximizing count_f after each
// prefix; ties broken by original index.
std::vector<int> best_order(const Strategy& strategy);

}  // namespace coinproof
