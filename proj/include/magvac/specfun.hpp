#pragma once

#include <cmath>
#include <stdexcept>

#include "magvac/bernoulli.hpp"
#include "magvac/constants.hpp"
#include "magvac/quadrature.hpp"

namespace magvac {
namespace detail {

// B_2, B_4, ..., B_18 as exact double rationals; enough for every asymptotic
// tail below once arguments are shifted to >= 8.
inline constexpr double kB2k[9] = {
    1.0 / 6.0,        -1.0 / 30.0,     1.0 / 42.0,
    -1.0 / 30.0,      5.0 / 66.0,      -691.0 / 2730.0,
    7.0 / 6.0,        -3617.0 / 510.0, 43867.0 / 798.0};

inline constexpr double kHalfLn2Pi = 0.91893853320467274178;

}  // namespace detail

// log Gamma for positive real argument: upward recurrence into x >= 10, then
// the Stirling series with Bernoulli tail.
inline double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: x must be > 0");
  double shift = 0.0;
  double y = x;
  while (y < 10.0) {
    shift += std::log(y);
    y += 1.0;
  }
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double tail = 0.0;
  double p = inv;
  for (int k = 0; k < 9; ++k) {
    tail += detail::kB2k[k] / ((2 * k + 1) * (2 * k + 2)) * p;
    p *= inv2;
  }
  return (y - 0.5) * std::log(y) - y + detail::kHalfLn2Pi + tail - shift;
}

inline double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: x must be > 0");
  double shift = 0.0;
  double y = x;
  while (y < 10.0) {
    shift -= 1.0 / y;
    y += 1.0;
  }
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double r = std::log(y) - 0.5 * inv;
  double p = inv2;
  for (int k = 0; k < 9; ++k) {
    r -= detail::kB2k[k] / (2 * k + 2) * p;
    p *= inv2;
  }
  return r + shift;
}

// Polygamma of order 1 or 2. Order 1 deliberately avoids hurwitz_zeta so the
// psi'(x) = zeta(2, x) identity is a genuine two-route consistency check.
inline double polygamma(int n, double x) {
  if (n != 1 && n != 2) throw std::domain_error("polygamma: order must be 1 or 2");
  if (!(x > 0.0)) throw std::domain_error("polygamma: x must be > 0");
  double shift = 0.0;
  double y = x;
  while (y < 10.0) {
    shift += (n == 1) ? 1.0 / (y * y) : -2.0 / (y * y * y);
    y += 1.0;
  }
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double r;
  if (n == 1) {
    r = inv + 0.5 * inv2;
    double p = inv * inv2;
    for (int k = 0; k < 9; ++k) {
      r += detail::kB2k[k] * p;
      p *= inv2;
    }
  } else {
    r = -inv2 - inv * inv2;
    double p = inv2 * inv2;
    for (int k = 0; k < 9; ++k) {
      r -= (2 * k + 3) * detail::kB2k[k] * p;
      p *= inv2;
    }
  }
  return r + shift;
}

// Hurwitz zeta for s > 1, h > 0 by direct summation plus Euler-Maclaurin tail.
inline double hurwitz_zeta(double s, double h,
                           const PrecisionConfig& precision = default_precision()) {
  if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: s must be > 1");
  if (!(h > 0.0)) throw std::domain_error("hurwitz_zeta: h must be > 0");
  // The tail converges once the shifted argument clears both the Bernoulli
  // growth and the rising factorial in s.
  const double target = std::max(12.0, s);
  double a = h;
  double sum = 0.0;
  while (a < target) {
    sum += std::pow(a, -s);
    a += 1.0;
  }
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;            // (s)_{2k-1}
  double apow = std::pow(a, -s - 1.0);
  double factorial = 2.0;       // (2k)!
  const double inv_a2 = 1.0 / (a * a);
  for (int k = 1; k <= 9; ++k) {
    const double term = detail::kB2k[k - 1] / factorial * rising * apow;
    sum += term;
    if (std::fabs(term) <= precision.rel_tol * std::fabs(sum)) break;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    apow *= inv_a2;
    factorial *= (2 * k + 1) * (2 * k + 2);
  }
  return sum;
}

// Riemann zeta at integer argument n >= 2. Even n <= 16 use the exact
// Bernoulli closed form; odd n < 18 use the accelerated alternating series of
// Cohen, Rodriguez-Villegas and Zagier; n >= 18 sum directly.
inline double riemann_zeta(int n) {
  if (n < 2) throw std::domain_error("riemann_zeta: n must be >= 2");
  if (n >= 18) {
    double sum = 1.0;
    for (int k = 2; k < 64; ++k) {
      const double term = std::pow(static_cast<double>(k), -n);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum;
  }
  if (n % 2 == 0) {
    // zeta(2m) = |B_2m| (2 pi)^(2m) / (2 (2m)!)
    double factorial = 1.0;
    for (int j = 2; j <= n; ++j) factorial *= j;
    return std::fabs(bernoulli_number(n)) * std::pow(2.0 * kPi, n) /
           (2.0 * factorial);
  }
  const int terms = 32;
  double d = std::pow(3.0 + std::sqrt(8.0), terms);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    sum += c * std::pow(static_cast<double>(k + 1), -n);
    b *= (k + terms) * (k - terms) / ((k + 0.5) * (k + 1.0));
  }
  const double eta = sum / d;
  return eta / (1.0 - std::pow(2.0, 1.0 - n));
}

// zeta'(0, h) = ln Gamma(h) - (1/2) ln(2 pi) (Lerch).
inline double zeta_deriv_zero(double h) {
  if (!(h > 0.0)) throw std::domain_error("zeta_deriv_zero: h must be > 0");
  return ln_gamma(h) - detail::kHalfLn2Pi;
}

// zeta'(-1, h): asymptotic expansion once h clears the shift threshold,
// reached from below via the recurrence zeta'(-1, h+1) - zeta'(-1, h) = h ln h.
inline double hurwitz_zeta_deriv_minus1(
    double h, const PrecisionConfig& precision = default_precision()) {
  if (!(h > 0.0))
    throw std::domain_error("hurwitz_zeta_deriv_minus1: h must be > 0");
  const double threshold = std::max(8.0, precision.recurrence_shift_threshold);
  double shift = 0.0;
  double y = h;
  while (y < threshold) {
    shift += y * std::log(y);
    y += 1.0;
  }
  const double ln_y = std::log(y);
  double value = 1.0 / 12.0 - 0.25 * y * y + 0.5 * ln_y * bernoulli_poly2(y);
  const double inv2 = 1.0 / (y * y);
  double p = inv2;
  for (int k = 1; k <= 8; ++k) {
    value -= detail::kB2k[k] / ((2 * k) * (2 * k + 1) * (2 * k + 2)) * p;
    p *= inv2;
  }
  return value - shift;
}

namespace detail {

// (1/(1 - e^{-x}) - 1/x - 1/2 - x/12) / x^2, the exponential-cutoff kernel of
// the zeta'(-1, h) integral representation. Near 0 the direct form cancels
// catastrophically; its Bernoulli series takes over there.
inline double zeta_kernel(double x) {
  if (x < 0.5) {
    const double x2 = x * x;
    // B_{2m} x^{2m-3} / (2m)!, m = 2..7
    return x * (-1.0 / 720.0 +
           x2 * (1.0 / 30240.0 +
           x2 * (-1.0 / 1209600.0 +
           x2 * (1.0 / 47900160.0 +
           x2 * (-691.0 / 1307674368000.0 +
           x2 * (1.0 / 74724249600.0))))));
  }
  const double em = std::exp(-x);
  return (1.0 / (1.0 - em) - 1.0 / x - 0.5 - x / 12.0) / (x * x);
}

}  // namespace detail

// Independent route to zeta'(-1, h): the exact integral representation
//   zeta'(-1,h) = 1/12 - h^2/4 + (ln h / 2) B_2(h) - int_0^inf e^{-h x} K(x) dx
// with K the kernel above. Used as the cross-check oracle for the asymptotic
// route; valid for all h > 0.
inline double hurwitz_zeta_deriv_minus1_integral(double h,
                                                 QuadratureConfig config = {}) {
  if (!(h > 0.0))
    throw std::domain_error("hurwitz_zeta_deriv_minus1_integral: h must be > 0");
  auto f = [h](double x) { return std::exp(-h * x) * detail::zeta_kernel(x); };
  const QuadratureResult integral = integrate_semi_infinite(f, 1.0 / h, config);
  return 1.0 / 12.0 - 0.25 * h * h + 0.5 * std::log(h) * bernoulli_poly2(h) -
         integral.value;
}

// Real-branch Lambert W (branches 0 and -1) by Halley iteration from
// piecewise asymptotic seeds.
inline double lambert_w(int branch, double z) {
  if (branch != 0 && branch != -1)
    throw std::domain_error("lambert_w: branch must be 0 or -1");
  const double neg_inv_e = -std::exp(-1.0);
  if (z < neg_inv_e) {
    if (z < neg_inv_e - 1e-14 * std::fabs(neg_inv_e))
      throw std::domain_error("lambert_w: z below -1/e");
    z = neg_inv_e;
  }
  if (branch == -1 && z >= 0.0)
    throw std::domain_error("lambert_w: branch -1 needs z in [-1/e, 0)");

  const double p2 = 2.0 * (std::exp(1.0) * z + 1.0);
  if (p2 <= 0.0) return -1.0;  // branch point

  double w;
  if (branch == 0) {
    if (z < -0.25) {
      const double p = std::sqrt(p2);
      w = -1.0 + p * (1.0 - p * (1.0 / 3.0 - p * (11.0 / 72.0)));
    } else if (z < 2.0) {
      w = (z == 0.0) ? 0.0 : std::log1p(z);
    } else {
      const double l1 = std::log(z), l2 = std::log(l1);
      w = l1 - l2 + l2 / l1;
    }
  } else {
    if (z <= -0.25) {
      const double p = std::sqrt(p2);
      w = -1.0 - p * (1.0 + p * (1.0 / 3.0 + p * (11.0 / 72.0)));
    } else {
      const double l1 = std::log(-z), l2 = std::log(-l1);
      w = l1 - l2 + l2 / l1;
    }
  }

  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double residual = w * ew - z;
    const double wp1 = w + 1.0;
    if (std::fabs(wp1) < 1e-12) break;
    const double denom = ew * wp1 - (w + 2.0) * residual / (2.0 * wp1);
    const double step = residual / denom;
    w -= step;
    if (std::fabs(step) <= 1e-16 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

}  // namespace magvac
