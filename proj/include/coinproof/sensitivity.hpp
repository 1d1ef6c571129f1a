// Average sensitivity of the Boolean function that tests whether the
// number of 0-bits (fakes) is a multiple of m, exactly and via the
// cosine closed form, plus the oblivious-measurement bound order.
#pragma once

#include <string_view>

#include "coinproof/combinatorics.hpp"

namespace coinproof {

// 1 iff (number of '0' characters in bits) mod m == 0. Requires m >= 2
// and bits over {'0','1'}.
int mod_m_star(std::string_view bits, long long m);

// Number of single-bit flips that change mod_m_star.
long long sensitivity_at(std::string_view bits, long long m);

// (1/2^n) * Sum over all 2^n strings of sensitivity_at, by full
// enumeration. Requires 1 <= n <= 24, m >= 2.
Ratio avg_sensitivity_enum(long long n, long long m);

// Exact closed form n * multisection_sum(n, m, 0) / 2^(n-1).
Ratio avg_sensitivity_exact(long long n, long long m);

// (2n/m) * [1 + Sum_{j=1}^{m-1} cos(pi n j / m) cos^n(pi j / m)].
// Mathematically equal to the exact value; floating evaluation.
double avg_sensitivity_trig(long long n, long long m);

// Exact average sensitivity divided by sqrt(n): the order term of the
// oblivious-measurement lower bound. Omega-semantics -- the hidden
// constant is unspecified, the value is reported as-is.
double measurement_bound_order(long long n, long long m);

struct SensitivityResult {
  long long n = 0;
  long long m = 0;
  Ratio exact;
  double trig = 0.0;
  Ratio asymptote;  // 2n/m
  double bound_order = 0.0;
};

SensitivityResult sensitivity_summary(long long n, long long m);

}  // namespace coinproof
