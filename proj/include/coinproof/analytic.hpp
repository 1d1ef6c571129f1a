// Closed-form counts and bounds: single-weighing possibility counts, the
// general and single-weighing upper bounds, the divisibility-strategy
// revealing factor and its large-t limit, the indiscreet-pile lower
// bound, the three-family count, linear-combination counts, and the
// classical upper bound on weighings for the find-the-fakes problem.
#pragma once

#include <utility>
#include <vector>

#include "coinproof/combinatorics.hpp"

namespace coinproof {

// Possibility counts after a single weighing of n coins per pan.
// The three syndrome classes partition Z_f: balanced + 2*unbalanced = C(t,f).
struct SingleWeighingCounts {
  long long t = 0;
  long long f = 0;
  long long n = 0;
  Count balanced;
  Count unbalanced;
};

SingleWeighingCounts single_weighing_counts(long long t, long long f, long long n);

// Possibilities left after one balanced weighing of n coins per pan:
// Sum_i C(n,i)^2 C(t-2n, f-2i). Requires 1 <= n <= t/2, 0 <= f <= t.
Count balanced_count(long long t, long long f, long long n);

// Possibilities on one side of an unbalanced weighing:
// Sum_{i<j} C(n,i) C(n,j) C(t-2n, f-i-j). Same domain.
Count unbalanced_count(long long t, long long f, long long n);

// For a successful discreet strategy: lower bound
// max(ceil(t/f), ceil(t/(t-f))) and strict upper bound C(t,f).
// Requires 1 < f < t-1.
std::pair<Count, Count> theorem1_bounds(long long t, long long f);

// Max possibilities after any single weighing: max over 1 <= n <= t/2 of
// balanced_count (and unbalanced_count unless balanced_only).
Count single_weighing_cap(long long t, long long f, bool balanced_only);

// Revealing factor of the a-pile divisibility strategy,
// X = C(t,f) / C(t/a, f/a)^a. Requires a >= 2, a | f, a | t.
Ratio strategy6_X(long long t, long long f, long long a);

// Its limit as t grows: (f^f / f!) * ((f/a)! / (f/a)^(f/a))^a.
Ratio strategy6_X_limit(long long f, long long a);

// Lower bound on the optimal indiscreet count:
// C(floor(t/a)-ceil(d/a), f/a)^e1 * C(floor(t/a)-floor(d/a), f/a)^e2
// with e1 = a*floor(t/a) - a*floor(d/a) + d + 1 - t and e2 = a - e1.
// Preconditions (each named on failure): a >= 2, a|f, a-/d, a-/t,
// t > 2a, floor(t/a) - ceil(d/a) > f/a, and e1 >= 0.
Count theorem2_lower_bound(long long t, long long f, long long d, long long a);

// Count for the three-family strategy, k = floor(t/f), r = t - f*k:
// (k-2)^r (k-3)^(f-r) + 2^(f-r) + 2^r. Requires k >= 4 and 0 < r < f.
Count three_family_count(long long t, long long f);

// Sum over solution vectors of prod_i C(g_i, x_i)^(c_i). All solutions
// must share the same value of Sum c_i x_i and respect 0 <= x_i <= g_i.
Count lincomb_count(const std::vector<long long>& c, const std::vector<long long>& g,
                    const std::vector<std::vector<long long>>& solutions);

// Upper bound on weighings needed to locate m lighter fakes among n
// coins: ceil(log3 C(n,m)) + 15m. Requires 1 <= m <= n.
Count pyber_bound(long long n, long long m);

}  // namespace coinproof
