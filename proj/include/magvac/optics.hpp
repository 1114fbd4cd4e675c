#pragma once

#include <cmath>
#include <stdexcept>

#include "magvac/bernoulli.hpp"
#include "magvac/constants.hpp"
#include "magvac/lagrangian.hpp"
#include "magvac/specfun.hpp"

namespace magvac {

// Photon state relative to the background field. Reduced units: the momentum
// in electron masses, the path length in reduced Compton lengths (1/m).
struct PhotonKinematics {
  double k_over_m = 0.1;
  double theta = 0.5 * kPi;  // angle between B and k
  double path_length = 0.0;

  PhotonKinematics() = default;
  PhotonKinematics(double k_over_m_, double theta_, double path_length_ = 0.0)
      : k_over_m(k_over_m_), theta(theta_), path_length(path_length_) {
    if (!(k_over_m >= 0.0))
      throw std::domain_error("PhotonKinematics: k_over_m must be >= 0");
    if (!(theta >= 0.0 && theta <= kPi))
      throw std::domain_error("PhotonKinematics: theta must lie in [0, pi]");
    if (!(path_length >= 0.0))
      throw std::domain_error("PhotonKinematics: path_length must be >= 0");
  }

  // The dispersion relations used here assume a soft photon.
  bool soft() const { return k_over_m < 1.0; }
  double sin2() const {
    const double s = std::sin(theta);
    return s * s;
  }
};

enum class Mode { Parallel, Perpendicular };
enum class RefractionMethod { Exact, WeakSeries, StrongSeries, Kappa };

struct RefractionResult {
  Mode mode;
  double n;
  RefractionMethod method;
  bool in_validity_domain;
  int terms_used = 0;  // series routes only
};

// Square-root form next to its first-order expansion, difference included.
struct KappaFormComparison {
  RefractionResult primary;
  double linearized_n;
  double difference;
};

// Perpendicular mode, linearized exact route: n = 1 + (1/2) B^2 gamma_GG sin^2(theta).
inline RefractionResult n_perp_exact(const FieldPoint& fp,
                                     const PhotonKinematics& kin,
                                     const Constants& constants = default_constants()) {
  const double n = 1.0 + 0.5 * b2_gamma_gg_closed(fp, constants) * kin.sin2();
  return RefractionResult{Mode::Perpendicular, n, RefractionMethod::Exact,
                          kin.soft()};
}

// Parallel mode, linearized exact route: n = 1 + (1/2) B^2 gamma_FF sin^2(theta).
// The FF weight saturates, which keeps this form finite; the validity flag
// marks the perturbative window b <= pi/alpha.
inline RefractionResult n_parallel_exact(const FieldPoint& fp,
                                         const PhotonKinematics& kin = {},
                                         const Constants& constants = default_constants()) {
  const double n = 1.0 + 0.5 * b2_gamma_ff(fp, constants) * kin.sin2();
  return RefractionResult{Mode::Parallel, n, RefractionMethod::Exact,
                          kin.soft() && fp.b <= kPi / constants.alpha};
}

// Perpendicular mode at theta = pi/2 through the kappa coefficient:
// sqrt(1 + kappa_p) against its linearization 1 + kappa_p/2.
inline KappaFormComparison n_perp_kappa(const FieldPoint& fp,
                                        const Constants& constants = default_constants()) {
  const KappaCoefficients kc = kappas(fp, constants);
  const double sqrt_n = std::sqrt(1.0 + kc.kappa_p);
  const double lin_n = 1.0 + 0.5 * kc.kappa_p;
  return KappaFormComparison{
      RefractionResult{Mode::Perpendicular, sqrt_n, RefractionMethod::Kappa, true},
      lin_n, sqrt_n - lin_n};
}

// Parallel mode through the kappa coefficient: 1/sqrt(1 - kappa_s sin^2(theta))
// against the binomial approximation 1 + (1/2) kappa_s sin^2(theta).
inline KappaFormComparison n_parallel_kappa(const FieldPoint& fp,
                                            const PhotonKinematics& kin,
                                            const Constants& constants = default_constants()) {
  const KappaCoefficients kc = kappas(fp, constants);
  const double x = kc.kappa_s * kin.sin2();
  if (x >= 1.0)
    throw std::domain_error("n_parallel_kappa: kappa_s sin^2(theta) >= 1");
  const double sqrt_n = 1.0 / std::sqrt(1.0 - x);
  const double lin_n = 1.0 + 0.5 * x;
  return KappaFormComparison{
      RefractionResult{Mode::Parallel, sqrt_n, RefractionMethod::Kappa,
                       kin.soft()},
      lin_n, sqrt_n - lin_n};
}

// Full angular kappa form sqrt((1 + kappa_p) / (1 + kappa_s cos^2(theta))).
// Kept as a flagged extension: away from theta = pi/2 it fails the
// no-birefringence limit at theta = 0, so the validity flag is only set on
// the transverse slice.
inline RefractionResult n_perp_angular(const FieldPoint& fp,
                                       const PhotonKinematics& kin,
                                       const Constants& constants = default_constants()) {
  const KappaCoefficients kc = kappas(fp, constants);
  const double c2 = 1.0 - kin.sin2();
  const double n = std::sqrt((1.0 + kc.kappa_p) / (1.0 + kc.kappa_s * c2));
  return RefractionResult{Mode::Perpendicular, n, RefractionMethod::Kappa,
                          std::fabs(kin.theta - 0.5 * kPi) < 1e-12};
}

// Weak-field series for the perpendicular index,
//   n = 1 + (alpha/4pi) sin^2(theta) [ (14/45) xi^2
//       - (1/3) sum_{j>=2} 2^{2j} (6 B_{2j+2} - (2j+1) B_{2j}) / (j (2j+1)) xi^{2j} ].
// Asymptotic in xi; truncated at max_order or at the smallest term.
inline RefractionResult n_perp_weak_series(const FieldPoint& fp,
                                           const PhotonKinematics& kin,
                                           int max_order,
                                           const Constants& constants = default_constants()) {
  if (max_order < 1)
    throw std::domain_error("n_perp_weak_series: max_order must be >= 1");
  const double xi = fp.b;
  const double xi2 = xi * xi;
  double series = (14.0 / 45.0) * xi2;
  int used = 1;
  if (max_order >= 2 && xi > 0.0) {
    const std::vector<double> bern = bernoulli_table(2 * max_order + 2);
    double last = std::fabs(series);
    double power = xi2;  // xi^{2j-2} running
    for (int j = 2; j <= max_order; ++j) {
      power *= xi2;
      const double cj = std::pow(2.0, 2 * j) *
                        (6.0 * bern[2 * j + 2] - (2 * j + 1) * bern[2 * j]) /
                        (j * (2.0 * j + 1.0));
      const double term = -(1.0 / 3.0) * cj * power;
      if (std::fabs(term) > last) break;  // asymptotic tail turned
      series += term;
      last = std::fabs(term);
      used = j;
    }
  }
  const double n = 1.0 + constants.alpha / (4.0 * kPi) * kin.sin2() * series;
  return RefractionResult{Mode::Perpendicular, n, RefractionMethod::WeakSeries,
                          fp.b <= 0.44 && kin.soft(), used};
}

// Strong-field series for the perpendicular index,
//   n = 1 + (alpha/4pi) sin^2(theta) [ (2/3) xi - (8 ln A - 1/3 - (2/3) gamma)
//       - (ln pi + pi^2/18 - 2 - ln xi) / xi + (1/2 + zeta(3)/6) / xi^2
//       + sum_{j>=3} (-1)^j 2^{-(j-2)} ( ((j-2)/(j(j-1))) zeta(j-1)
//                                        + zeta(j+1)/6 ) xi^{-j} ].
// Convergent for xi > 1/2.
inline RefractionResult n_perp_strong_series(const FieldPoint& fp,
                                             const PhotonKinematics& kin,
                                             int max_order,
                                             const Constants& constants = default_constants()) {
  if (max_order < 1)
    throw std::domain_error("n_perp_strong_series: max_order must be >= 1");
  if (!(fp.b > 0.0))
    throw std::domain_error("n_perp_strong_series: b must be > 0");
  const double xi = fp.b;
  const double c0 = 8.0 * constants.ln_glaisher() - 1.0 / 3.0 -
                    (2.0 / 3.0) * constants.euler_gamma;
  double series = (2.0 / 3.0) * xi - c0;
  int used = 0;
  if (max_order >= 1) {
    series -= (std::log(kPi) + kPi * kPi / 18.0 - 2.0 - std::log(xi)) / xi;
    used = 1;
  }
  if (max_order >= 2) {
    series += (0.5 + riemann_zeta(3) / 6.0) / (xi * xi);
    used = 2;
  }
  double power = 1.0 / (xi * xi);
  double sign = -1.0;  // (-1)^j at j = 3
  for (int j = 3; j <= max_order; ++j) {
    power /= xi;
    const double coeff = ((j - 2) / (static_cast<double>(j) * (j - 1))) *
                             riemann_zeta(j - 1) +
                         riemann_zeta(j + 1) / 6.0;
    series += sign * std::pow(2.0, -(j - 2)) * coeff * power;
    sign = -sign;
    used = j;
  }
  const double n = 1.0 + constants.alpha / (4.0 * kPi) * kin.sin2() * series;
  return RefractionResult{Mode::Perpendicular, n, RefractionMethod::StrongSeries,
                          fp.b > 0.5 && kin.soft(), used};
}

// Birefringence Delta n = n_perp - n_parallel, exact linearized routes only.
inline double delta_n(const FieldPoint& fp, const PhotonKinematics& kin,
                      const Constants& constants = default_constants()) {
  return n_perp_exact(fp, kin, constants).n -
         n_parallel_exact(fp, kin, constants).n;
}

// A printed series form of Delta n that circulates alongside the exact
// routes. Its transcription is visibly damaged (a summand detached from its
// sum, an unexplained -22/48 h^-2 tail), so it is evaluated only as a
// diagnostic under the minimal reading that keeps the summation index bound:
// the braced group is reattached to the alternating sum. Convergence of the
// h^j/(2j) part needs b > 1/4.
struct DeltaNSeriesDiagnostic {
  double series_value;
  double exact_value;
  double deviation;  // series - exact
  bool series_convergent;
};

inline DeltaNSeriesDiagnostic delta_n_series_diagnostic(
    const FieldPoint& fp, const PhotonKinematics& kin,
    const Constants& constants = default_constants()) {
  if (!(fp.b > 0.0))
    throw std::domain_error("delta_n_series_diagnostic: b must be > 0");
  const double h = fp.h();
  const bool convergent = fp.b > 0.25;
  double sum = 0.0;
  if (convergent) {
    double sign = 1.0;  // (-1)^{j-1} at j = 3
    for (int j = 3; j <= 60; ++j) {
      const double term =
          sign * std::pow(2.0, -(j - 2)) *
          ((j - 2) + riemann_zeta(j + 1) / 6.0 + std::pow(h, j) / (2.0 * j));
      sum += term;
      sign = -sign;
      if (std::fabs(term) < 1e-16 * std::fabs(sum)) break;
    }
  }
  const double c0 = 8.0 * constants.ln_glaisher() - 1.0 / 3.0 -
                    (2.0 / 3.0) * constants.euler_gamma;
  const double bracket =
      1.0 / (3.0 * h) - c0 -
      2.0 * h * (std::log(kPi) + kPi * kPi / 18.0 - 2.0 + std::log(2.0 * h)) +
      2.0 * h * h + (2.0 / 3.0) * riemann_zeta(3) * h * h - sum +
      (2.0 / 3.0) * std::log1p(h) - (1.0 / 3.0) / (1.0 + h) - 2.0 / 3.0 -
      (2.0 / 3.0) * std::log(h) - (22.0 / 48.0) / (h * h);
  const double series =
      constants.alpha / (4.0 * kPi) * bracket * kin.sin2();
  const double exact = delta_n(fp, kin, constants);
  return DeltaNSeriesDiagnostic{series, exact, series - exact, convergent};
}

// Faraday rotation chi = k * Delta n * l in radians.
inline double faraday_rotation(const FieldPoint& fp, const PhotonKinematics& kin,
                               const Constants& constants = default_constants()) {
  return kin.k_over_m * delta_n(fp, kin, constants) * kin.path_length;
}

// Group speed of the perpendicular mode and the two companion expressions
// that are quoted for it: a printed lower bound on v^2 (reported, not
// asserted, since it fails beyond b of order 1 as printed) and the
// ultra-strong-field limit form, meaningful for large b only.
struct VelocityReport {
  double v_perp;                 // 1 / n_perp(exact)
  double printed_lower_bound_sq; // 1/(1 + (alpha/4pi)(2/3 - 2h ln h + 2h ln 2pi))^2
  double strong_limit_sq;        // (1 - a(ln b - 0.79)) / (1 - a(ln b - 1.79)), a = alpha/3pi
  bool strong_limit_applicable;  // b >= 10
};

inline double v_perp(const FieldPoint& fp, const PhotonKinematics& kin,
                     const Constants& constants = default_constants()) {
  return 1.0 / n_perp_exact(fp, kin, constants).n;
}

inline double hu_v_perp_sq(const FieldPoint& fp,
                           const Constants& constants = default_constants()) {
  if (!(fp.b > 0.0)) throw std::domain_error("hu_v_perp_sq: b must be > 0");
  const double a = constants.alpha / (3.0 * kPi);  // e^2/(12 pi^2), e^2 = 4 pi alpha
  const double lnb = std::log(fp.b);
  return (1.0 - a * (lnb - 0.79)) / (1.0 - a * (lnb - 1.79));
}

inline VelocityReport velocity_report(const FieldPoint& fp,
                                      const PhotonKinematics& kin,
                                      const Constants& constants = default_constants()) {
  if (!(fp.b > 0.0)) throw std::domain_error("velocity_report: b must be > 0");
  const double h = fp.h();
  const double denom = 1.0 + constants.alpha / (4.0 * kPi) *
                                 (2.0 / 3.0 - 2.0 * h * std::log(h) +
                                  2.0 * h * kLn2Pi);
  return VelocityReport{v_perp(fp, kin, constants), 1.0 / (denom * denom),
                        hu_v_perp_sq(fp, constants), fp.b >= 10.0};
}

}  // namespace magvac
