// Strategy generators for every family handled by the toolkit, the
// bounded linear-combination solver, and the exhaustive configuration
// search over linear-combination layouts.
#pragma once

#include <vector>

#include "coinproof/combinatorics.hpp"
#include "coinproof/model.hpp"

namespace coinproof {

// Group multiplicities c_i (piles per group, each in [2, f]) and pile
// sizes g_i (each in [1, t/2]); Sum c_i * g_i = t.
struct LinCombConfig {
  std::vector<long long> c;
  std::vector<long long> g;

  bool operator==(const LinCombConfig& o) const { return c == o.c && g == o.g; }
};

// Nonnegative x with Sum c_i x_i = target and 0 <= x_i <= g_i.
struct SolutionVector {
  std::vector<long long> x;

  bool operator==(const SolutionVector& o) const { return x == o.x; }
};

// The fixed 80/3/2 showcase: piles A(10,1) B(10,0) C(20,0) D(20,1)
// E(20,1); weighings A+C|B+D, A+B|E, C+D|A+B+E.
Strategy gen_shapovalov(long long t = 80, long long f = 3, long long d = 2);

// a piles of size t/a with f/a fakes each, chained in a-1 adjacent
// comparisons. Requires a >= 2, a | f, a | t, a -/ d.
Strategy gen_divisibility(long long t, long long f, long long d, long long a);

// a piles of size floor(t/a) with f/a fakes each plus t mod a leftover
// real singletons; pile chain, leftover chain, and when the leftover
// block is smaller than d+1, enough real coins are split out of the
// piles as singletons to chain d+1 provably-equal coins. When
// d mod a > t mod a the pile chain alone suffices (exact case).
Strategy gen_indiscreet_piles(long long t, long long f, long long d, long long a);

// 3f piles A_i/B_i/C_i with sizes (k-2,1,2) for i <= r and (k-3,2,1)
// otherwise, one fake per pile of the chosen family; chains
// A_i+B_i | A_{i+1}+B_{i+1} and B_i+C_i | B_{i+1}+C_{i+1}.
// Requires k = floor(t/f) >= 4 and 0 < r < f. Success is only
// guaranteed for 0 < d < f; other d are generated and left to verify.
Strategy gen_three_family(long long t, long long f, long long d, char family = 'A');

// Base three-family strategy plus every exchange comparison
// A_w+B_x | A_y+B_z and B_w+C_x | B_y+C_z with w != y, x != z and all
// four indices inside [1,r] or inside [r+1,f]; duplicates removed.
Strategy gen_three_family_augmented(long long t, long long f, long long d);

// All solution vectors for Sum c_i x_i = target, 0 <= x_i <= g_i,
// lexicographically ordered, duplicate-free. Empty result is meaningful.
std::vector<SolutionVector> solve_solution_vectors(const std::vector<long long>& c,
                                                   const std::vector<long long>& g, long long target);

// For each group i, c_i piles of size g_i holding placement.x[i] fakes
// each; chain of c_i - 1 comparisons per group. Requires the config to
// fit t, the placement to solve for f, and d to be unrepresentable.
Strategy gen_linear_combination(long long t, long long f, long long d, const LinCombConfig& config,
                                const SolutionVector& placement);

struct SearchLimits {
  int max_groups = 3;
  long long max_c = 0;          // 0 = no extra cap beyond c <= f
  long long max_g = 0;          // 0 = no extra cap beyond g <= t/2
  long long t_ceiling = 120;
  long long node_budget = 2000000;  // enumeration steps before flagging partial results
};

struct SearchResult {
  std::vector<std::pair<LinCombConfig, Count>> ranked;  // count descending
  bool complete = true;
};

// Exhaustively enumerates configs with at most max_groups groups,
// canonicalized as nondecreasing (c_i, g_i) sequences, keeps those with
// at least one solution for f and none for d, ranks by lincomb count
// descending with lexicographic tie-break.
SearchResult search_lincomb(long long t, long long f, long long d, const SearchLimits& limits = {});

}  // namespace coinproof
