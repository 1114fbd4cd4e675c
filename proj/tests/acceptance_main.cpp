// Acceptance gate: runs the validation suite and prints one line per
// criterion. Exit status 0 only when every criterion passes.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "magvac/validation.hpp"

namespace {

const magvac::ValidationCheck* find(const magvac::ValidationReport& report,
                                    const std::string& name) {
  for (const auto& c : report.checks)
    if (c.name == name) return &c;
  return nullptr;
}

struct Criterion {
  const char* description;
  std::vector<std::string> check_names;
};

}  // namespace

int main() {
  const magvac::ValidationReport report = magvac::run_validation();

  const std::vector<Criterion> criteria = {
      {"GG weight: closed form vs proper-time quadrature on [0.01, 30]",
       {"three_route"}},
      {"weak-field coefficient of the perpendicular index -> 14/45",
       {"weak_field_coefficient"}},
      {"moment equals minus the slope of the energy curve",
       {"moment_matches_hamiltonian_slope"}},
      {"growth ratio mu(30)/mu(0.5) within 10% of 8/3", {"growth_ratio"}},
      {"gap to the asymptote at b = 30 positive and at most 5%",
       {"asymptote_gap"}},
      {"moment positivity, monotonicity and weak derivative bound",
       {"moment_signs"}},
      {"proper-time integrand nonnegative on (0, 100]",
       {"integrand_positivity"}},
      {"zeta derivative dual route and b-derivative identity",
       {"zeta_deriv_dual_route", "zeta_deriv_b_derivative"}},
      {"Lambert-W inversion round trip on [1, 30]", {"lambert_roundtrip"}},
      {"series regimes agree with the exact moment",
       {"regime_weak", "regime_strong"}},
      {"special-function identity suite", {"specfun_identities"}},
      {"energy curve non-increasing and concave on the figure preset",
       {"hamiltonian_curve_shape"}}};

  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    bool ok = true;
    double worst_measured = 0.0;
    for (const auto& name : criteria[i].check_names) {
      const magvac::ValidationCheck* c = find(report, name);
      if (!c || !c->passed) ok = false;
      if (c && std::fabs(c->measured) > std::fabs(worst_measured))
        worst_measured = c->measured;
    }
    all = all && ok;
    std::printf("criterion %2zu: %s  %s (measured %.6e)\n", i + 1,
                ok ? "PASS" : "FAIL", criteria[i].description, worst_measured);
  }

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
