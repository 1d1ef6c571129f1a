#include "coinproof/combinatorics.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace coinproof {

Count binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

Count multisection_sum(long long n, long long m, long long p) {
  if (n < 0) throw std::invalid_argument("multisection_sum: n must be nonnegative");
  if (m < 2) throw std::invalid_argument("multisection_sum: m must be >= 2");
  if (p < 0 || p >= m) throw std::invalid_argument("multisection_sum: p must satisfy 0 <= p < m");
  Count total = 0;
  for (long long i = p; i <= n; i += m) total += binomial(n, i);
  return total;
}

double multisection_trig(long long n, long long m, long long p) {
  if (n < 0) throw std::invalid_argument("multisection_trig: n must be nonnegative");
  if (m < 2) throw std::invalid_argument("multisection_trig: m must be >= 2");
  if (p < 0 || p >= m) throw std::invalid_argument("multisection_trig: p must satisfy 0 <= p < m");
  const double pi = std::acos(-1.0);
  double total = 0.0;
  for (long long j = 0; j < m; ++j) {
    const double c = std::cos(pi * j / m);
    // 2^n * cos^n = (2 cos)^n; keep the sign exact for odd n
    double power = std::pow(std::fabs(2.0 * c), static_cast<double>(n));
    if (c < 0.0 && n % 2 != 0) power = -power;
    total += std::cos(pi * static_cast<double>(n - 2 * p) * j / m) * power;
  }
  return total / static_cast<double>(m);
}

Ratio::Ratio(Count num, Count den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Ratio: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Count g = gcd(num_ < 0 ? Count(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::operator+(const Ratio& o) const { return Ratio(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
Ratio Ratio::operator-(const Ratio& o) const { return Ratio(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
Ratio Ratio::operator*(const Ratio& o) const { return Ratio(num_ * o.num_, den_ * o.den_); }

Ratio Ratio::operator/(const Ratio& o) const {
  if (o.num_ == 0) throw std::invalid_argument("Ratio: division by zero");
  return Ratio(num_ * o.den_, den_ * o.num_);
}

bool Ratio::operator<(const Ratio& o) const { return num_ * o.den_ < o.num_ * den_; }

Ratio Ratio::abs() const { return num_ < 0 ? Ratio(-num_, den_) : *this; }

std::string Ratio::fraction_string() const {
  std::ostringstream out;
  out << num_ << "/" << den_;
  return out.str();
}

std::string Ratio::decimal_string(int places) const {
  if (places < 0) throw std::invalid_argument("Ratio: negative decimal places");
  Count scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Count n = num_ < 0 ? Count(-num_) : num_;
  Count scaled = (n * scale * 2 + den_) / (den_ * 2);  // round half away from zero
  Count whole = scaled / scale;
  Count frac = scaled % scale;
  std::ostringstream out;
  if (num_ < 0 && scaled != 0) out << '-';
  out << whole;
  if (places > 0) {
    std::string digits = frac.str();
    out << '.' << std::string(places - digits.size(), '0') << digits;
  }
  return out.str();
}

double Ratio::value() const { return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>(); }

}  // namespace coinproof
