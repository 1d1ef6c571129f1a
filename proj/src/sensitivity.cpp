#include "coinproof/sensitivity.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace coinproof {

namespace {

void check_m(long long m, const char* who) {
  if (m < 2) throw std::invalid_argument(std::string(who) + ": m must be >= 2");
}

long long zero_count(std::string_view bits, const char* who) {
  long long zeros = 0;
  for (char ch : bits) {
    if (ch == '0') {
      ++zeros;
    } else if (ch != '1') {
      throw std::invalid_argument(std::string(who) + ": bits must contain only '0' and '1'");
    }
  }
  return zeros;
}

// bit = 1 encodes a real coin; zeros(x) = n - popcount(x)
inline int eval_mask(std::uint64_t x, long long n, long long m) {
  return (n - std::popcount(x)) % m == 0 ? 1 : 0;
}

}  // namespace

int mod_m_star(std::string_view bits, long long m) {
  check_m(m, "mod_m_star");
  return zero_count(bits, "mod_m_star") % m == 0 ? 1 : 0;
}

long long sensitivity_at(std::string_view bits, long long m) {
  check_m(m, "sensitivity_at");
  const long long zeros = zero_count(bits, "sensitivity_at");
  const int base = zeros % m == 0 ? 1 : 0;
  long long flips = 0;
  for (char ch : bits) {
    const long long flipped_zeros = ch == '0' ? zeros - 1 : zeros + 1;
    if ((flipped_zeros % m == 0 ? 1 : 0) != base) ++flips;
  }
  return flips;
}

Ratio avg_sensitivity_enum(long long n, long long m) {
  check_m(m, "avg_sensitivity_enum");
  if (n < 1 || n > 24) throw std::invalid_argument("avg_sensitivity_enum: requires 1 <= n <= 24");
  std::uint64_t total = 0;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const int base = eval_mask(x, n, m);
    for (long long i = 0; i < n; ++i) {
      if (eval_mask(x ^ (1ull << i), n, m) != base) ++total;
    }
  }
  return Ratio(Count(total), Count(limit));
}

Ratio avg_sensitivity_exact(long long n, long long m) {
  check_m(m, "avg_sensitivity_exact");
  if (n < 1) throw std::invalid_argument("avg_sensitivity_exact: n must be >= 1");
  Count half = 1;
  for (long long i = 0; i < n - 1; ++i) half *= 2;
  return Ratio(Count(n) * multisection_sum(n, m, 0), half);
}

double avg_sensitivity_trig(long long n, long long m) {
  check_m(m, "avg_sensitivity_trig");
  if (n < 1) throw std::invalid_argument("avg_sensitivity_trig: n must be >= 1");
  const double pi = std::acos(-1.0);
  double bracket = 1.0;
  for (long long j = 1; j < m; ++j) {
    const double c = std::cos(pi * j / m);
    double power = std::pow(std::fabs(c), static_cast<double>(n));
    if (c < 0.0 && n % 2 != 0) power = -power;
    bracket += std::cos(pi * static_cast<double>(n) * j / m) * power;
  }
  return 2.0 * static_cast<double>(n) / static_cast<double>(m) * bracket;
}

double measurement_bound_order(long long n, long long m) {
  return avg_sensitivity_exact(n, m).value() / std::sqrt(static_cast<double>(n));
}

SensitivityResult sensitivity_summary(long long n, long long m) {
  SensitivityResult r;
  r.n = n;
  r.m = m;
  r.exact = avg_sensitivity_exact(n, m);
  r.trig = avg_sensitivity_trig(n, m);
  r.asymptote = Ratio(Count(2 * n), Count(m));
  r.bound_order = measurement_bound_order(n, m);
  return r;
}

}  // namespace coinproof
