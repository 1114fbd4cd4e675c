#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "magvac/constants.hpp"
#include "magvac/lagrangian.hpp"
#include "magvac/optics.hpp"
#include "magvac/specfun.hpp"

namespace magvac {

enum class MomentMethod { Exact, Weak, Strong, Hurwitz };

// mu_reduced is the full field-dependent factor of the photon moment
// including alpha/4pi but excluding (|k|/m) sin^2(theta). Conversion:
// mu/mu_Bohr = 2 * mu_reduced * (|k|/m) * sin^2(theta).
struct MomentResult {
  double mu_reduced;
  MomentMethod method;
  bool in_validity_domain;
};

struct HamiltonianPoint {
  double b;
  double h_reduced;  // <H(b)> per photon in units of |k|
};

// c_1 = ln(pi) + pi^2/18 - 1, the constant of the strong-field moment.
inline double moment_c1() { return std::log(kPi) + kPi * kPi / 18.0 - 1.0; }

namespace detail {

// d/db of the GG bracket, which is (4 pi / alpha) * mu_reduced. The direct
// form cancels badly once h = 1/(2b) grows, so above h = 8 the term-by-term
// derivative of the bracket's asymptotic series is used instead.
inline double moment_bracket(double b) {
  const double h = 1.0 / (2.0 * b);
  if (h >= 8.0) {
    double s = 0.0;
    double hp = 1.0 / h;  // h^{1-2k} running
    const double inv2 = 1.0 / (h * h);
    for (int k = 1; k <= 8; ++k) {
      const double ck = kB2k[k - 1] / (3.0 * k) -
                        2.0 * kB2k[k] / (static_cast<double>(k) * (2 * k + 1));
      s += 4.0 * k * ck * hp;
      hp *= inv2;
    }
    return s;
  }
  return 2.0 / 3.0 +
         (1.0 / (b * b * b)) *
             ((b / 3.0) * polygamma(1, 1.0 + h) + digamma(h) -
              2.0 * b * ln_gamma(h) + b * kLn2Pi + b + b * std::log(2.0 * b) -
              1.0);
}

}  // namespace detail

inline MomentResult mu_exact(const FieldPoint& fp, const PhotonKinematics&,
                             const Constants& constants = default_constants()) {
  if (fp.b == 0.0) return MomentResult{0.0, MomentMethod::Exact, true};
  const double mu =
      constants.alpha / (4.0 * kPi) * detail::moment_bracket(fp.b);
  return MomentResult{mu, MomentMethod::Exact, fp.b <= 30.0};
}

inline MomentResult mu_weak(const FieldPoint& fp, const PhotonKinematics&,
                            const Constants& constants = default_constants()) {
  const double mu = constants.alpha / (4.0 * kPi) * (28.0 / 45.0) *
                    (fp.b - (52.0 / 49.0) * fp.b * fp.b * fp.b);
  return MomentResult{mu, MomentMethod::Weak, fp.b <= 0.44};
}

inline MomentResult mu_strong(const FieldPoint& fp, const PhotonKinematics&,
                              const Constants& constants = default_constants()) {
  if (fp.b == 0.0)
    return MomentResult{std::numeric_limits<double>::quiet_NaN(),
                        MomentMethod::Strong, false};
  const double mu =
      constants.alpha / (4.0 * kPi) *
      (2.0 / 3.0 + (moment_c1() - std::log(fp.b)) / (fp.b * fp.b));
  return MomentResult{mu, MomentMethod::Strong, fp.b > 0.5};
}

// The moment through the Hurwitz-zeta route: the trigamma term evaluated as
// zeta(2, 1+h) by Euler-Maclaurin summation (an independent code path from
// the polygamma asymptotics) and the divergent zeta(1, .) term taken at its
// digamma finite part with argument h. This is the unique finite-part reading
// found to reproduce the exact route; the deviation is reported by validate.
inline MomentResult mu_hurwitz(const FieldPoint& fp, const PhotonKinematics&,
                               const Constants& constants = default_constants()) {
  if (!(fp.b > 0.0)) throw std::domain_error("mu_hurwitz: b must be > 0");
  const double b = fp.b;
  const double h = fp.h();
  const double bracket =
      2.0 / 3.0 +
      (1.0 / (b * b * b)) *
          ((b / 3.0) * hurwitz_zeta(2.0, 1.0 + h) + digamma(h) -
           2.0 * b * ln_gamma(h) + b * (kLn2Pi + 1.0 + std::log(2.0 * b)) -
           1.0);
  return MomentResult{constants.alpha / (4.0 * kPi) * bracket,
                      MomentMethod::Hurwitz, fp.b <= 30.0};
}

// The same formula as it circulates in print: coefficient 2b/3 on the
// zeta(2, .) term and the finite part of zeta(1, 1+h) (that is, -psi(1+h)).
// Kept only so validate can document that this reading does not reproduce
// the exact moment; do not use for physics.
inline double mu_hurwitz_printed_form(const FieldPoint& fp,
                                      const Constants& constants = default_constants()) {
  if (!(fp.b > 0.0))
    throw std::domain_error("mu_hurwitz_printed_form: b must be > 0");
  const double b = fp.b;
  const double h = fp.h();
  const double bracket =
      2.0 / 3.0 +
      (1.0 / (b * b * b)) *
          ((2.0 * b / 3.0) * hurwitz_zeta(2.0, 1.0 + h) + digamma(1.0 + h) -
           2.0 * b * ln_gamma(h) + b * (kLn2Pi + 1.0 + std::log(2.0 * b)) -
           1.0);
  return constants.alpha / (4.0 * kPi) * bracket;
}

inline double mu_over_bohr(const MomentResult& m, const PhotonKinematics& kin) {
  return 2.0 * m.mu_reduced * kin.k_over_m * kin.sin2();
}

// Inversion of the strong-field moment via Lambert W:
// with mu_n = (4 pi / alpha) mu_reduced - 2/3, solve for b in
// mu_n = (c1 - ln b)/b^2, giving b = exp(c1 - W_j(2 e^{2 c1} mu_n)/2).
// Branch 0 covers b < b* = exp(c1 + 1/2), branch -1 the range beyond; at the
// asymptote mu_n -> 0 branch -1 runs to infinity while branch 0 pins at the
// spurious finite point exp(c1), which is why the branch choice is explicit.
inline FieldPoint invert_b_from_mu(double mu_reduced, const PhotonKinematics&,
                                   int branch,
                                   const Constants& constants = default_constants()) {
  if (!(mu_reduced > 0.0))
    throw std::domain_error("invert_b_from_mu: mu_reduced must be positive");
  const double c1 = moment_c1();
  const double mu_n = 4.0 * kPi / constants.alpha * mu_reduced - 2.0 / 3.0;
  const double z = 2.0 * std::exp(2.0 * c1) * mu_n;
  const double w = lambert_w(branch, z);
  return FieldPoint(std::exp(c1 - 0.5 * w));
}

// Field strength at which the two inversion branches meet.
inline double inversion_branch_switch_b() {
  return std::exp(moment_c1() + 0.5);
}

inline HamiltonianPoint hamiltonian_expectation(
    const FieldPoint& fp, const PhotonKinematics& kin,
    const Constants& constants = default_constants()) {
  return HamiltonianPoint{
      fp.b, 1.0 - 0.5 * b2_gamma_gg_closed(fp, constants) * kin.sin2()};
}

struct CheckOutcome {
  bool passed;
  double worst;  // most adverse measured value
  double at_b;
};

struct DerivativeChecks {
  CheckOutcome positivity;                // mu > 0 on the grid
  CheckOutcome monotonicity;              // d mu / db > 0
  CheckOutcome weak_lower_bound;          // d mu / db >= (alpha/4pi)(28/45 - (156/49) b^2) on (0, 0.44]
  CheckOutcome zeta_derivative_identity;  // analytic d/db zeta'(-1, 1/(2b)) vs differences
  CheckOutcome hamiltonian_concavity;     // second differences of <H> <= 0
};

namespace detail {

// Five-point central difference, O(step^4).
template <class F>
inline double central_derivative(F&& f, double x, double step) {
  return (f(x - 2 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) -
          f(x + 2 * step)) /
         (12.0 * step);
}

}  // namespace detail

inline DerivativeChecks derivative_checks(
    const std::vector<double>& b_grid, const PhotonKinematics& kin,
    const Constants& constants = default_constants(),
    double identity_tol = 1e-6) {
  DerivativeChecks out{};
  out.positivity = {true, std::numeric_limits<double>::infinity(), 0.0};
  out.monotonicity = {true, std::numeric_limits<double>::infinity(), 0.0};
  out.weak_lower_bound = {true, std::numeric_limits<double>::infinity(), 0.0};
  out.zeta_derivative_identity = {true, 0.0, 0.0};
  out.hamiltonian_concavity = {true, -std::numeric_limits<double>::infinity(), 0.0};

  auto mu_at = [&](double b) {
    return mu_exact(FieldPoint(b), kin, constants).mu_reduced;
  };

  for (double b : b_grid) {
    if (!(b > 0.0 && b <= 30.0))
      throw std::domain_error("derivative_checks: grid must lie in (0, 30]");
    const double mu = mu_at(b);
    if (mu < out.positivity.worst) out.positivity = {out.positivity.passed, mu, b};
    if (!(mu > 0.0)) out.positivity.passed = false;

    const double step = 1e-3 * std::max(1.0, b);
    if (b - 2 * step > 0.0) {
      const double slope = detail::central_derivative(mu_at, b, step);
      if (slope < out.monotonicity.worst)
        out.monotonicity = {out.monotonicity.passed, slope, b};
      if (!(slope > 0.0)) out.monotonicity.passed = false;

      if (b <= 0.44) {
        const double bound = constants.alpha / (4.0 * kPi) *
                             (28.0 / 45.0 - (156.0 / 49.0) * b * b);
        const double margin = slope - bound;
        if (margin < out.weak_lower_bound.worst)
          out.weak_lower_bound = {out.weak_lower_bound.passed, margin, b};
        if (!(margin >= 0.0)) out.weak_lower_bound.passed = false;
      }

      // Analytic derivative of zeta'(-1, 1/(2b)) against finite differences.
      // The step scales with b: through h = 1/(2b) a fixed step is a large
      // relative excursion at small b and the stencil's truncation error
      // would swamp the identity tolerance.
      const double h = 1.0 / (2.0 * b);
      const double analytic = (0.5 - h - ln_gamma(h) + detail::kHalfLn2Pi) /
                              (2.0 * b * b);
      const double numeric = detail::central_derivative(
          [](double bb) { return hurwitz_zeta_deriv_minus1(1.0 / (2.0 * bb)); },
          b, 1e-3 * b);
      const double rel = std::fabs(analytic - numeric) /
                         std::max(1e-300, std::fabs(analytic));
      if (rel > out.zeta_derivative_identity.worst)
        out.zeta_derivative_identity = {out.zeta_derivative_identity.passed, rel, b};
      if (rel > identity_tol) out.zeta_derivative_identity.passed = false;

      const double h0 = hamiltonian_expectation(FieldPoint(b), kin, constants).h_reduced;
      const double hm =
          hamiltonian_expectation(FieldPoint(b - step), kin, constants).h_reduced;
      const double hp =
          hamiltonian_expectation(FieldPoint(b + step), kin, constants).h_reduced;
      const double second = (hp - 2.0 * h0 + hm) / (step * step);
      if (second > out.hamiltonian_concavity.worst)
        out.hamiltonian_concavity = {out.hamiltonian_concavity.passed, second, b};
      if (!(second <= 1e-10)) out.hamiltonian_concavity.passed = false;
    }
  }
  return out;
}

// Scale comparison with the electron's anomalous moment. All moments are in
// Bohr magnetons. The photon asymptote 2 * (alpha/4pi) * (2/3) = alpha/(3 pi)
// (at |k| = m, theta = pi/2) sits at exactly 2/3 of the electron's
// leading anomaly alpha/(2 pi).
struct MomentComparison {
  double mu_over_bohr_at_point;       // 2 mu_reduced (k/m) sin^2 theta at fp
  double asymptote_over_bohr;         // alpha/(3 pi), at k = m and theta = pi/2
  double electron_anomaly_over_bohr;  // alpha/(2 pi)
  double asymptotic_ratio;            // their ratio, 2/3
};

inline MomentComparison electron_moment_comparison(
    const FieldPoint& fp, const PhotonKinematics& kin,
    const Constants& constants = default_constants()) {
  const double photon = mu_over_bohr(mu_exact(fp, kin, constants), kin);
  const double asym = constants.alpha / (3.0 * kPi);
  const double electron = constants.alpha / (2.0 * kPi);
  return MomentComparison{photon, asym, electron, asym / electron};
}

}  // namespace magvac
