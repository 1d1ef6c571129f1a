#include "coinproof/analytic.hpp"

#include <stdexcept>
#include <string>

namespace coinproof {

namespace {

void check_single_weighing_domain(long long t, long long f, long long n, const char* who) {
  if (f < 0 || f > t) throw std::invalid_argument(std::string(who) + ": f must satisfy 0 <= f <= t");
  if (n < 1 || n > t / 2) throw std::invalid_argument(std::string(who) + ": n must satisfy 1 <= n <= floor(t/2)");
}

Count int_pow(const Count& base, long long exp) {
  Count result = 1;
  for (long long i = 0; i < exp; ++i) result *= base;
  return result;
}

Count factorial(long long n) {
  Count result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

SingleWeighingCounts single_weighing_counts(long long t, long long f, long long n) {
  return {t, f, n, balanced_count(t, f, n), unbalanced_count(t, f, n)};
}

Count balanced_count(long long t, long long f, long long n) {
  check_single_weighing_domain(t, f, n, "balanced_count");
  Count total = 0;
  for (long long i = 0; 2 * i <= f; ++i) {
    Count b = binomial(n, i);
    total += b * b * binomial(t - 2 * n, f - 2 * i);
  }
  return total;
}

Count unbalanced_count(long long t, long long f, long long n) {
  check_single_weighing_domain(t, f, n, "unbalanced_count");
  Count total = 0;
  for (long long i = 0; i < n; ++i) {
    for (long long j = i + 1; j <= n; ++j) {
      if (f - i - j < 0) break;
      total += binomial(n, i) * binomial(n, j) * binomial(t - 2 * n, f - i - j);
    }
  }
  return total;
}

std::pair<Count, Count> theorem1_bounds(long long t, long long f) {
  if (!(1 < f && f < t - 1)) {
    throw std::invalid_argument("theorem1_bounds: requires 1 < f < t-1 (no discreet strategy otherwise)");
  }
  Count lower = std::max(ceil_div(t, f), ceil_div(t, t - f));
  return {lower, binomial(t, f)};
}

Count single_weighing_cap(long long t, long long f, bool balanced_only) {
  if (t < 2) throw std::invalid_argument("single_weighing_cap: t must be >= 2");
  if (f < 0 || f > t) throw std::invalid_argument("single_weighing_cap: f must satisfy 0 <= f <= t");
  Count best = 0;
  for (long long n = 1; n <= t / 2; ++n) {
    best = std::max(best, balanced_count(t, f, n));
    if (!balanced_only) best = std::max(best, unbalanced_count(t, f, n));
  }
  return best;
}

Ratio strategy6_X(long long t, long long f, long long a) {
  if (a < 2) throw std::invalid_argument("strategy6_X: a must be >= 2");
  if (f % a != 0) throw std::invalid_argument("strategy6_X: a must divide f");
  if (t % a != 0) throw std::invalid_argument("strategy6_X: a must divide t");
  if (f < 0 || f > t) throw std::invalid_argument("strategy6_X: f must satisfy 0 <= f <= t");
  return Ratio(binomial(t, f), int_pow(binomial(t / a, f / a), a));
}

Ratio strategy6_X_limit(long long f, long long a) {
  if (a < 2) throw std::invalid_argument("strategy6_X_limit: a must be >= 2");
  if (f < 0 || f % a != 0) throw std::invalid_argument("strategy6_X_limit: a must divide f >= 0");
  const long long q = f / a;
  // f^f/f! * ((q)!/q^q)^a, with 0^0 = 1
  Count num = int_pow(Count(f), f) * int_pow(factorial(q), a);
  Count den = factorial(f) * int_pow(int_pow(Count(q), q), a);
  return Ratio(num, den);
}

Count theorem2_lower_bound(long long t, long long f, long long d, long long a) {
  if (a < 2) throw std::invalid_argument("theorem2_lower_bound: a must be >= 2");
  if (f % a != 0) throw std::invalid_argument("theorem2_lower_bound: a must divide f");
  if (d % a == 0) throw std::invalid_argument("theorem2_lower_bound: a must not divide d");
  if (t % a == 0) throw std::invalid_argument("theorem2_lower_bound: a must not divide t");
  if (t <= 2 * a) throw std::invalid_argument("theorem2_lower_bound: requires t > 2a");
  const long long qt = t / a;
  if (qt - ceil_div(d, a) <= f / a) {
    throw std::invalid_argument("theorem2_lower_bound: requires floor(t/a) - ceil(d/a) > f/a");
  }
  const long long e1 = a * qt - a * (d / a) + d + 1 - t;
  const long long e2 = a - e1;
  if (e1 < 0) {
    throw std::invalid_argument(
        "theorem2_lower_bound: pile accounting undefined for d mod a < t mod a - 1 (e1 < 0)");
  }
  return int_pow(binomial(qt - ceil_div(d, a), f / a), e1) * int_pow(binomial(qt - d / a, f / a), e2);
}

Count three_family_count(long long t, long long f) {
  if (f < 1) throw std::invalid_argument("three_family_count: f must be >= 1");
  const long long k = t / f;
  const long long r = t - f * k;
  if (k < 4) throw std::invalid_argument("three_family_count: requires floor(t/f) >= 4");
  if (r == 0) throw std::invalid_argument("three_family_count: r = 0; use the divisibility strategy");
  return int_pow(Count(k - 2), r) * int_pow(Count(k - 3), f - r) + int_pow(Count(2), f - r) +
         int_pow(Count(2), r);
}

Count lincomb_count(const std::vector<long long>& c, const std::vector<long long>& g,
                    const std::vector<std::vector<long long>>& solutions) {
  if (c.size() != g.size()) throw std::invalid_argument("lincomb_count: c and g lengths differ");
  bool have_target = false;
  long long target = 0;
  for (const auto& x : solutions) {
    if (x.size() != c.size()) throw std::invalid_argument("lincomb_count: solution length mismatch");
    long long value = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0 || x[i] > g[i]) throw std::invalid_argument("lincomb_count: solution entry out of [0, g_i]");
      value += c[i] * x[i];
    }
    if (!have_target) {
      target = value;
      have_target = true;
    } else if (value != target) {
      throw std::invalid_argument("lincomb_count: solutions disagree on Sum c_i x_i");
    }
  }
  Count total = 0;
  for (const auto& x : solutions) {
    Count term = 1;
    for (size_t i = 0; i < x.size(); ++i) term *= int_pow(binomial(g[i], x[i]), c[i]);
    total += term;
  }
  return total;
}

Count pyber_bound(long long n, long long m) {
  if (m < 1 || m > n) throw std::invalid_argument("pyber_bound: requires 1 <= m <= n");
  const Count target = binomial(n, m);
  long long e = 0;
  Count power = 1;
  while (power < target) {
    power *= 3;
    ++e;
  }
  return Count(e) + Count(15) * m;
}

}  // namespace coinproof
