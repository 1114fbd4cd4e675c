#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "magvac/constants.hpp"
#include "magvac/specfun.hpp"
#include "magvac/validation.hpp"

using Catch::Approx;
using namespace magvac;

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kZeta3 = 1.2020569031595942854;
}  // namespace

TEST_CASE("ln_gamma known values") {
  CHECK(ln_gamma(1.0) == Approx(0.0).margin(1e-15));
  CHECK(ln_gamma(2.0) == Approx(0.0).margin(1e-15));
  CHECK(ln_gamma(0.5) == Approx(0.5 * std::log(kPi)).epsilon(1e-14));
  CHECK(ln_gamma(5.0) == Approx(std::log(24.0)).epsilon(1e-14));
  // Gamma(1/3) = 2.6789385347077476337
  CHECK(ln_gamma(1.0 / 3.0) ==
        Approx(std::log(2.6789385347077476337)).epsilon(1e-14));
  CHECK(ln_gamma(30.5) == Approx(std::lgamma(30.5)).epsilon(1e-14));
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("digamma known values and recurrence") {
  CHECK(digamma(1.0) == Approx(-kEulerGamma).epsilon(1e-14));
  CHECK(digamma(0.5) ==
        Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(digamma(2.0) == Approx(1.0 - kEulerGamma).epsilon(1e-14));

  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 300; ++i) {
    const double x = u(rng);
    const double lhs = digamma(x + 1.0) - digamma(x);
    CHECK(std::fabs(lhs - 1.0 / x) / std::max(1.0, std::fabs(lhs)) < 1e-11);
  }
}

TEST_CASE("polygamma known values, recurrences, order guard") {
  CHECK(polygamma(1, 1.0) == Approx(kPi * kPi / 6.0).epsilon(1e-13));
  CHECK(polygamma(1, 0.5) == Approx(kPi * kPi / 2.0).epsilon(1e-13));
  CHECK(polygamma(2, 1.0) == Approx(-2.0 * kZeta3).epsilon(1e-13));

  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> u(0.05, 60.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(std::fabs(polygamma(1, x + 1.0) - polygamma(1, x) + 1.0 / (x * x)) <
          1e-11 * std::max(1.0, std::fabs(polygamma(1, x))));
    CHECK(std::fabs(polygamma(2, x + 1.0) - polygamma(2, x) -
                    2.0 / (x * x * x)) <
          1e-11 * std::max(1.0, std::fabs(polygamma(2, x))));
  }
  CHECK_THROWS_AS(polygamma(3, 1.0), std::domain_error);
  CHECK_THROWS_AS(polygamma(0, 1.0), std::domain_error);
}

TEST_CASE("hurwitz zeta matches polygamma and shift identity") {
  for (double h : {0.1, 0.37, 1.0, 2.5, 14.0, 49.0}) {
    CHECK(hurwitz_zeta(2.0, h) == Approx(polygamma(1, h)).epsilon(1e-12));
    CHECK(hurwitz_zeta(3.0, h) == Approx(-0.5 * polygamma(2, h)).epsilon(1e-12));
  }
  std::mt19937 rng(13u);
  std::uniform_real_distribution<double> us(1.1, 20.0);
  std::uniform_real_distribution<double> uh(0.02, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double s = us(rng);
    const double h = uh(rng);
    const double lhs = hurwitz_zeta(s, h) - hurwitz_zeta(s, h + 1.0);
    CHECK(std::fabs(lhs - std::pow(h, -s)) <
          1e-11 * std::max(1.0, std::pow(h, -s)));
  }
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::domain_error);
}

TEST_CASE("riemann zeta at integer arguments") {
  CHECK(riemann_zeta(2) == Approx(kPi * kPi / 6.0).epsilon(1e-15));
  CHECK(riemann_zeta(3) == Approx(kZeta3).epsilon(1e-14));
  CHECK(riemann_zeta(4) == Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-15));
  CHECK(riemann_zeta(5) == Approx(1.0369277551433699263).epsilon(1e-14));
  CHECK(riemann_zeta(7) == Approx(1.0083492773819228268).epsilon(1e-14));
  CHECK(riemann_zeta(12) == Approx(1.0002460865533080483).epsilon(1e-15));
  CHECK(riemann_zeta(25) == Approx(1.0000000298035035147).epsilon(1e-15));
  CHECK_THROWS_AS(riemann_zeta(1), std::domain_error);
}

TEST_CASE("zeta derivative at s = 0") {
  // zeta'(0, h) = ln Gamma(h) - ln(2 pi)/2; at h = 1 this is zeta'(0).
  CHECK(zeta_deriv_zero(1.0) == Approx(-0.5 * kLn2Pi).epsilon(1e-14));
  CHECK(zeta_deriv_zero(0.5) == Approx(-0.5 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("zeta derivative at s = -1: frozen reference values") {
  // High-precision references for the Hurwitz zeta s-derivative at s = -1.
  CHECK(hurwitz_zeta_deriv_minus1(1.0) ==
        Approx(-0.16542114370045092921).epsilon(1e-12));
  CHECK(hurwitz_zeta_deriv_minus1(0.5) ==
        Approx(0.053829439326894410048).epsilon(1e-12));
  CHECK(hurwitz_zeta_deriv_minus1(8.0) ==
        Approx(42.481004948829356253).epsilon(1e-13));
  // 1/12 - ln A with A the Glaisher constant.
  CHECK(hurwitz_zeta_deriv_minus1(1.0) ==
        Approx(1.0 / 12.0 - default_constants().ln_glaisher()).epsilon(1e-13));
}

TEST_CASE("zeta derivative at s = -1: downward recurrence") {
  std::mt19937 rng(17u);
  std::uniform_real_distribution<double> u(0.01, 49.0);
  for (int i = 0; i < 200; ++i) {
    const double h = u(rng);
    const double diff =
        hurwitz_zeta_deriv_minus1(h + 1.0) - hurwitz_zeta_deriv_minus1(h);
    CHECK(std::fabs(diff - h * std::log(h)) /
              std::max(1.0, std::fabs(h * std::log(h))) <
          1e-10);
  }
}

TEST_CASE("zeta derivative at s = -1: integral route agrees") {
  for (double h : {0.1, 0.3, 0.62, 1.0, 2.0, 5.0, 8.0, 20.0, 50.0}) {
    const double a = hurwitz_zeta_deriv_minus1(h);
    const double b = hurwitz_zeta_deriv_minus1_integral(h);
    CHECK(std::fabs(a - b) / std::max(1.0, std::fabs(a)) < 1e-8);
  }
  // Away from the sign change near h = 0.62 the plain relative error holds.
  for (double h : {5.0, 8.0, 20.0, 50.0}) {
    const double a = hurwitz_zeta_deriv_minus1(h);
    const double b = hurwitz_zeta_deriv_minus1_integral(h);
    CHECK(std::fabs(a - b) <= 1e-8 * std::fabs(a));
  }
}

TEST_CASE("integral kernel is smooth through its series switch") {
  // The truncated series meets the direct form at x = 1/2 within its own
  // tail term, which is well below what the integral tolerance needs.
  const double below = detail::zeta_kernel(0.4999999);
  const double above = detail::zeta_kernel(0.5000001);
  CHECK(std::fabs(below - above) < 1e-9);
  // K(x) vanishes linearly at zero with slope -1/720.
  CHECK(detail::zeta_kernel(1e-6) / 1e-6 ==
        Approx(-1.0 / 720.0).epsilon(1e-9));
}

TEST_CASE("lambert w: values, residuals, branch domains") {
  const double e = std::exp(1.0);
  CHECK(lambert_w(0, 0.0) == 0.0);
  CHECK(lambert_w(0, e) == Approx(1.0).epsilon(1e-14));
  // Omega constant W_0(1).
  CHECK(lambert_w(0, 1.0) == Approx(0.56714329040978387300).epsilon(1e-14));
  CHECK(lambert_w(-1, -0.1) == Approx(-3.5771520639572972184).epsilon(1e-13));

  std::mt19937 rng(19u);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double z = -1.0 / e + u(rng) * 30.0;
    const double w = lambert_w(0, z);
    CHECK(std::fabs(w * std::exp(w) - z) <= 1e-13 * std::max(1.0, std::fabs(z)));
  }
  for (int i = 0; i < 300; ++i) {
    const double z = -1.0 / e + u(rng) * (1.0 / e - 1e-8);
    const double w = lambert_w(-1, z);
    CHECK(w <= -1.0);
    CHECK(std::fabs(w * std::exp(w) - z) <= 1e-13 * std::max(1.0, std::fabs(z)));
  }
  CHECK_THROWS_AS(lambert_w(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(lambert_w(0, -1.0), std::domain_error);
  CHECK_THROWS_AS(lambert_w(-1, 0.5), std::domain_error);
  CHECK_THROWS_AS(lambert_w(-1, 0.0), std::domain_error);
}

TEST_CASE("trigamma curvature bound used by the moment checks") {
  for (double h : detail::log_grid(0.1, 50.0, 500)) {
    const double bound = -1.0 / (h * h) + 1.0 / (h * h * h) -
                         0.5 / std::pow(h, 4) + 1.0 / (6.0 * std::pow(h, 6));
    CHECK(polygamma(2, 1.0 + h) <= bound + 1e-13);
  }
}

TEST_CASE("identity battery stays inside its tolerances") {
  std::string worst;
  const double normalized = specfun_identity_battery(&worst);
  INFO("worst identity: " << worst);
  CHECK(normalized <= 1.0);
}
