#include <doctest.h>

#include <cmath>

#include "coinproof/sensitivity.hpp"

using namespace coinproof;

TEST_CASE("mod_m_star") {
  CHECK(mod_m_star("0110", 2) == 1);
  CHECK(mod_m_star("111", 3) == 1);  // zero zeros: 0 is a multiple
  CHECK(mod_m_star("0111", 3) == 0);
  CHECK(mod_m_star("", 5) == 1);
  CHECK_THROWS_AS(mod_m_star("01", 1), std::invalid_argument);
  CHECK_THROWS_AS(mod_m_star("012", 2), std::invalid_argument);
}

TEST_CASE("sensitivity_at") {
  CHECK(sensitivity_at("000000", 3) == 6);  // multiple of m: every flip changes
  CHECK(sensitivity_at("011111", 3) == 1);  // only the single 0 flips the output
  CHECK(sensitivity_at("0101", 2) == 4);
  for (const char* bits : {"0000", "0110", "1111", "1000"}) {
    CHECK(sensitivity_at(bits, 2) == 4);  // m = 2: every flip changes parity
  }
}

TEST_CASE("avg_sensitivity examples") {
  CHECK(avg_sensitivity_enum(4, 2) == Ratio(4));
  CHECK(avg_sensitivity_enum(1, 2) == Ratio(1));
  CHECK(avg_sensitivity_enum(6, 3) == Ratio(Count(33), Count(8)));
  CHECK(avg_sensitivity_exact(6, 3) == Ratio(Count(33), Count(8)));
  CHECK(avg_sensitivity_trig(6, 3) == doctest::Approx(4.125).epsilon(1e-9));
  CHECK(avg_sensitivity_trig(8, 2) == doctest::Approx(8.0).epsilon(1e-9));
  CHECK_THROWS_AS(avg_sensitivity_enum(25, 2), std::invalid_argument);
  CHECK_THROWS_AS(avg_sensitivity_enum(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(avg_sensitivity_exact(6, 1), std::invalid_argument);
}

TEST_CASE("enumeration equals the closed form") {
  for (long long n = 1; n <= 14; ++n) {
    for (long long m = 2; m <= 9; ++m) {
      REQUIRE(avg_sensitivity_enum(n, m) == avg_sensitivity_exact(n, m));
    }
  }
}

TEST_CASE("trig form tracks the exact value to 1e-6 relative") {
  for (long long n = 1; n <= 64; ++n) {
    for (long long m = 2; m <= 9; ++m) {
      const double exact = avg_sensitivity_exact(n, m).value();
      REQUIRE(std::fabs(avg_sensitivity_trig(n, m) - exact) <= 1e-6 * exact);
    }
  }
}

TEST_CASE("m = 2 gives exactly n") {
  for (long long n = 1; n <= 64; ++n) REQUIRE(avg_sensitivity_exact(n, 2) == Ratio(Count(n)));
}

TEST_CASE("relative deviation from 2n/m vanishes monotonically") {
  for (long long m = 2; m <= 6; ++m) {
    Ratio previous;
    bool first = true;
    for (long long n : {16, 32, 64}) {
      const Ratio deviation =
          (avg_sensitivity_exact(n, m) * Ratio(Count(m), Count(2 * n)) - Ratio(1)).abs();
      if (!first) REQUIRE(deviation <= previous);
      previous = deviation;
      first = false;
    }
  }
}

TEST_CASE("measurement bound order") {
  CHECK(measurement_bound_order(6, 3) == doctest::Approx(4.125 / std::sqrt(6.0)));
  CHECK(measurement_bound_order(16, 2) == doctest::Approx(4.0));  // alpha = n gives sqrt(n)
  CHECK(measurement_bound_order(100, 5) == doctest::Approx(4.0).epsilon(1e-6));

  SensitivityResult r = sensitivity_summary(6, 3);
  CHECK(r.exact == Ratio(Count(33), Count(8)));
  CHECK(r.asymptote == Ratio(4));
  CHECK(r.trig == doctest::Approx(4.125));
  CHECK(r.bound_order == doctest::Approx(4.125 / std::sqrt(6.0)));
}
