#include <catch2/catch_amalgamated.hpp>

#include "magvac/bernoulli.hpp"

using Catch::Approx;
using namespace magvac;

TEST_CASE("table reproduces the exact small Bernoulli numbers") {
  const auto b = bernoulli_table(12);
  REQUIRE(b.size() == 13);
  CHECK(b[0] == 1.0);
  CHECK(b[1] == Approx(-0.5).epsilon(1e-16));
  CHECK(b[2] == Approx(1.0 / 6.0).epsilon(1e-16));
  CHECK(b[3] == 0.0);
  CHECK(b[4] == Approx(-1.0 / 30.0).epsilon(1e-16));
  CHECK(b[6] == Approx(1.0 / 42.0).epsilon(1e-16));
  CHECK(b[8] == Approx(-1.0 / 30.0).epsilon(1e-16));
  CHECK(b[10] == Approx(5.0 / 66.0).epsilon(1e-16));
  CHECK(b[12] == Approx(-691.0 / 2730.0).epsilon(1e-16));
}

TEST_CASE("odd entries beyond the first vanish") {
  const auto b = bernoulli_table(21);
  for (int k = 3; k <= 21; k += 2) CHECK(b[k] == 0.0);
}

TEST_CASE("large even entries match reference values") {
  // B_20 and B_30, exact rationals evaluated to double.
  CHECK(bernoulli_number(20) == Approx(-174611.0 / 330.0).epsilon(1e-15));
  CHECK(bernoulli_number(30) ==
        Approx(8615841276005.0 / 14322.0).epsilon(1e-15));
}

TEST_CASE("single-number accessor rejects bad indices") {
  CHECK_THROWS_AS(bernoulli_number(-2), std::domain_error);
  CHECK_THROWS_AS(bernoulli_number(3), std::domain_error);
}

TEST_CASE("second Bernoulli polynomial") {
  CHECK(bernoulli_poly2(0.0) == Approx(1.0 / 6.0).epsilon(1e-16));
  CHECK(bernoulli_poly2(1.0) == Approx(1.0 / 6.0).epsilon(1e-16));
  CHECK(bernoulli_poly2(0.5) == Approx(-1.0 / 12.0).epsilon(1e-16));
}
