#pragma once

#include <cmath>
#include <stdexcept>

namespace magvac {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2Pi = 1.8378770664093454836;  // ln(2*pi)

// Physical constants. Field strengths are reduced throughout: b = B/B_cr with
// B_cr = m^2/e the critical field, and photon energies are measured in |k|.
struct Constants {
  double alpha = 7.2973525693e-3;          // fine-structure constant, CODATA 2018
  double euler_gamma = 0.5772156649015329;
  double glaisher_a = 1.2824271291006226;  // ln A = 1/12 - zeta'(-1)
  double b_cr_gauss = 4.414e13;            // critical field in gauss, display only

  double ln_glaisher() const { return std::log(glaisher_a); }

  void validate() const {
    if (!(alpha > 0.0))
      throw std::invalid_argument("Constants: alpha must be positive");
  }
};

inline const Constants& default_constants() {
  static const Constants c{};
  return c;
}

// Numerical knobs for the special-function kernel.
struct PrecisionConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int series_terms_max = 40;
  // Argument above which asymptotic tails are trusted directly; smaller
  // arguments are shifted upward by recurrence first.
  double recurrence_shift_threshold = 8.0;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::invalid_argument("PrecisionConfig: tolerances must be positive");
    if (series_terms_max < 8)
      throw std::invalid_argument("PrecisionConfig: series_terms_max must be >= 8");
    if (!(recurrence_shift_threshold > 0.0))
      throw std::invalid_argument(
          "PrecisionConfig: recurrence_shift_threshold must be positive");
  }
};

inline const PrecisionConfig& default_precision() {
  static const PrecisionConfig p{};
  return p;
}

}  // namespace magvac
