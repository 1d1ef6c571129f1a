// Exact counting primitives: arbitrary-precision counts, exact rationals,
// binomial coefficients and series multisection sums.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace coinproof {

// Nonnegative arbitrary-precision count. Cardinalities routinely exceed
// 64 bits (e.g. products of binomials over pile configurations), so all
// counting goes through this type. Serialized as a decimal string.
using Count = boost::multiprecision::cpp_int;

// C(n, k). Total in k: returns 0 for k < 0 or k > n (summation formulas
// index out of range freely). n must be >= 0.
Count binomial(long long n, long long k);

// Sum_{s>=0} C(n, p + s*m), computed exactly by direct summation.
// Requires m >= 2 and 0 <= p < m.
Count multisection_sum(long long n, long long m, long long p);

// Cosine closed form of the same sum:
//   (1/m) * Sum_{j=0}^{m-1} cos(pi*(n-2p)*j/m) * 2^n * cos^n(pi*j/m)
// Floating approximation; use multisection_sum for exact values.
double multisection_trig(long long n, long long m, long long p);

// Exact rational, always in lowest terms with positive denominator.
// Comparison and arithmetic are exact; decimal rendering is presentation
// only (default 4 decimal places, matching how revealing factors are
// usually quoted).
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(Count num, Count den);
  explicit Ratio(const Count& value) : num_(value), den_(1) {}
  explicit Ratio(long long value) : num_(value), den_(1) {}

  const Count& num() const { return num_; }
  const Count& den() const { return den_; }

  Ratio operator+(const Ratio& o) const;
  Ratio operator-(const Ratio& o) const;
  Ratio operator*(const Ratio& o) const;
  Ratio operator/(const Ratio& o) const;

  bool operator==(const Ratio& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Ratio& o) const { return !(*this == o); }
  bool operator<(const Ratio& o) const;
  bool operator<=(const Ratio& o) const { return *this < o || *this == o; }
  bool operator>(const Ratio& o) const { return o < *this; }
  bool operator>=(const Ratio& o) const { return o <= *this; }

  Ratio abs() const;

  // "num/den"
  std::string fraction_string() const;
  // Exact fixed-point rendering, rounded half away from zero.
  std::string decimal_string(int places = 4) const;
  double value() const;

 private:
  Count num_;
  Count den_;  // > 0
};

}  // namespace coinproof
