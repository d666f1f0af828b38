#include <cmath>

#include "doctest.h"
#include "hfm/error.hpp"
#include "hfm/gamma.hpp"
#include "reference_values.hpp"

TEST_CASE("gamma: small arguments") {
  CHECK(hfm::gamma(1.0) == 1.0);
  CHECK(hfm::gamma(5.0) == 24.0);
  CHECK(hfm::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-15));
  CHECK(hfm::gamma(2.0) == 1.0);
  CHECK(hfm::gamma(3.0) == 2.0);
}

TEST_CASE("gamma: integers are exact factorials") {
  double f = 1.0;
  for (int n = 1; n <= 21; ++n) {
    CHECK(hfm::gamma(n) == f);
    f *= n;
  }
}

TEST_CASE("gamma: relative error against high-precision values on (0, 50]") {
  for (const auto& row : ref::kGamma) {
    CAPTURE(row.x);
    CHECK(std::abs(hfm::gamma(row.x) / row.value - 1.0) <= 1e-14);
  }
}

TEST_CASE("property: recurrence gamma(x+1) = x gamma(x)") {
  for (double x = 0.05; x < 49.0; x += 0.37) {
    CAPTURE(x);
    CHECK(hfm::gamma(x + 1) == doctest::Approx(x * hfm::gamma(x)).epsilon(3e-14));
  }
}

TEST_CASE("gamma: domain") {
  CHECK_THROWS_AS(hfm::gamma(0.0), hfm::DomainError);
  CHECK_THROWS_AS(hfm::gamma(-1.5), hfm::DomainError);
  CHECK_THROWS_AS(hfm::gamma(NAN), hfm::DomainError);
  CHECK_THROWS_AS(hfm::gamma(INFINITY), hfm::DomainError);
}
