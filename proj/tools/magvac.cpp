// Command-line front end: grid scans, the validation suite, the fixed
// figure preset, and moment-to-field inversion queries.
//
// Exit codes: 0 success, 1 failed validation or no inversion solution,
// 2 malformed request or internal error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magvac/magvac.hpp"

namespace {

std::vector<std::string> split_columns(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void print_report_human(const magvac::ValidationReport& report) {
  int required = 0;
  int passed = 0;
  for (const auto& c : report.checks) {
    const char* status = c.required ? (c.passed ? "PASS" : "FAIL") : "info";
    std::printf("[%s] %-34s measured %- .6e", status, c.name.c_str(),
                c.measured);
    if (c.tolerance > 0.0) std::printf("  tol %.3e", c.tolerance);
    std::printf("  | %s\n", c.anchor.c_str());
    if (!c.note.empty()) std::printf("       note: %s\n", c.note.c_str());
    if (c.required) {
      ++required;
      if (c.passed) ++passed;
    }
  }
  std::printf("validation: %d/%d required checks passed\n", passed, required);
}

void print_report_json(const magvac::ValidationReport& report) {
  std::printf("{\n  \"checks\": [\n");
  for (size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    std::printf("    {\"name\": \"%s\", \"required\": %s, \"passed\": %s, "
                "\"measured\": %.17g, \"tolerance\": %.17g, "
                "\"anchor\": \"%s\", \"note\": \"%s\"}%s\n",
                json_escape(c.name).c_str(), c.required ? "true" : "false",
                c.passed ? "true" : "false", c.measured, c.tolerance,
                json_escape(c.anchor).c_str(), json_escape(c.note).c_str(),
                i + 1 < report.checks.size() ? "," : "");
  }
  std::printf("  ],\n  \"all_passed\": %s\n}\n",
              report.all_passed() ? "true" : "false");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magnetized-vacuum refractive indices, Faraday rotation and "
               "photon magnetic moment"};
  app.set_config("--config", "", "flat key=value configuration file");
  app.require_subcommand(1);

  double b_min = 0.0;
  double b_max = 30.0;
  int points = 300;
  bool log_spacing = false;
  double theta = 0.5 * magvac::kPi;
  double k_over_m = 0.1;
  double length = 0.0;
  std::string columns;
  std::string format = "csv";
  double alpha = magvac::default_constants().alpha;
  int series_order = 0;
  magvac::ValidationTolerances tol;

  app.add_option("--b-min", b_min, "scan start, critical-field units")
      ->capture_default_str();
  app.add_option("--b-max", b_max, "scan end, critical-field units")
      ->capture_default_str();
  app.add_option("--points", points, "grid points")->capture_default_str();
  app.add_flag("--log", log_spacing, "log-spaced grid (needs --b-min > 0)");
  app.add_option("--theta", theta, "angle between B and k, radians")
      ->capture_default_str();
  app.add_option("--k-over-m", k_over_m, "photon momentum over electron mass")
      ->capture_default_str();
  app.add_option("--length", length,
                 "propagation length, reduced Compton wavelengths")
      ->capture_default_str();
  app.add_option("--columns", columns, "comma-separated output columns");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--alpha", alpha, "fine-structure constant")
      ->capture_default_str();
  app.add_option("--series-order", series_order,
                 "truncation order for series index columns, 0 = auto")
      ->capture_default_str();

  app.add_option("--tol-three-route", tol.three_route,
                 "closed form vs quadrature tolerance");
  app.add_option("--tol-weak-coefficient", tol.weak_coefficient,
                 "weak-field coefficient tolerance");
  app.add_option("--tol-moment-slope", tol.moment_slope,
                 "moment vs Hamiltonian slope tolerance");
  app.add_option("--tol-ratio", tol.ratio, "growth-ratio tolerance");
  app.add_option("--tol-asymptote-gap", tol.asymptote_gap_max,
                 "asymptote gap upper bound");
  app.add_option("--tol-zeta-dual-route", tol.zeta_dual_route,
                 "zeta derivative dual-route tolerance");
  app.add_option("--tol-zeta-b-derivative", tol.zeta_b_derivative,
                 "zeta derivative identity tolerance");
  app.add_option("--tol-lambert-roundtrip", tol.lambert_roundtrip,
                 "inversion round-trip tolerance");
  app.add_option("--tol-regime-weak", tol.regime_weak,
                 "weak-series regime tolerance");
  app.add_option("--tol-regime-strong", tol.regime_strong,
                 "strong-series regime tolerance");
  app.add_option("--tol-strong-bmin", tol.strong_window_bmin,
                 "start of the strong-series comparison window");
  app.add_option("--tol-figure-band", tol.figure_band,
                 "figure shape second-difference band");

  auto* scan_cmd =
      app.add_subcommand("scan", "emit a grid scan of the observables");
  scan_cmd->fallthrough();
  auto* validate_cmd =
      app.add_subcommand("validate", "run the full validation suite");
  validate_cmd->fallthrough();
  auto* figure_cmd = app.add_subcommand(
      "figure1", "fixed preset: field-energy expectation on [0, 30]");
  figure_cmd->fallthrough();
  auto* invert_cmd = app.add_subcommand(
      "invert", "solve the strong-field moment for the field strength");
  invert_cmd->fallthrough();

  double mu_bohr = 0.0;
  int branch = 0;
  invert_cmd
      ->add_option("--mu-bohr", mu_bohr, "photon moment in Bohr magnetons")
      ->required();
  invert_cmd->add_option("--branch", branch, "Lambert branch, 0 or -1")
      ->check(CLI::IsMember({0, -1}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  magvac::Constants constants = magvac::default_constants();
  constants.alpha = alpha;

  try {
    constants.validate();
    const magvac::PhotonKinematics kin{k_over_m, theta, length};
    const magvac::TableFormat fmt = (format == "json")
                                        ? magvac::TableFormat::Json
                                        : magvac::TableFormat::Csv;

    if (*scan_cmd) {
      magvac::ScanRequest req;
      req.b_min = b_min;
      req.b_max = b_max;
      req.points = points;
      req.spacing =
          log_spacing ? magvac::Spacing::Log : magvac::Spacing::Linear;
      req.kinematics = kin;
      req.columns = split_columns(columns);
      req.format = fmt;
      req.series_order = series_order;
      const magvac::ScanTable table = magvac::run_scan(req, constants);
      if (fmt == magvac::TableFormat::Json)
        magvac::write_json(std::cout, table);
      else
        magvac::write_csv(std::cout, table);
      return 0;
    }

    if (*figure_cmd) {
      const magvac::ScanRequest req = magvac::figure1_request(kin, fmt);
      const magvac::ScanTable table = magvac::run_scan(req, constants);
      if (fmt == magvac::TableFormat::Json)
        magvac::write_json(std::cout, table);
      else
        magvac::write_csv(std::cout, table);
      return 0;
    }

    if (*validate_cmd) {
      const magvac::ValidationReport report =
          magvac::run_validation(tol, constants);
      if (fmt == magvac::TableFormat::Json)
        print_report_json(report);
      else
        print_report_human(report);
      return report.all_passed() ? 0 : 1;
    }

    if (*invert_cmd) {
      const double sin2 = kin.sin2();
      if (!(mu_bohr > 0.0) || !(k_over_m > 0.0) || !(sin2 > 0.0)) {
        std::fprintf(stderr,
                     "invert: needs --mu-bohr > 0, --k-over-m > 0 and "
                     "sin^2(theta) > 0\n");
        return 2;
      }
      const double mu_hat = mu_bohr / (2.0 * k_over_m * sin2);
      try {
        const magvac::FieldPoint fp =
            magvac::invert_b_from_mu(mu_hat, kin, branch, constants);
        const double back =
            magvac::mu_strong(fp, kin, constants).mu_reduced;
        std::printf("b = %.17g\n", fp.b);
        std::printf("roundtrip_residual = %.17g\n",
                    std::fabs(back - mu_hat) / mu_hat);
        if (fp.b < 1.0)
          std::printf("note: b is outside the strong-field formula's "
                      "validity window\n");
        return 0;
      } catch (const std::exception& primary) {
        std::fprintf(stderr, "invert: no solution on branch %d: %s\n", branch,
                     primary.what());
        for (int br : {0, -1}) {
          try {
            const magvac::FieldPoint fp =
                magvac::invert_b_from_mu(mu_hat, kin, br, constants);
            std::fprintf(stderr, "  branch %d: b = %.17g\n", br, fp.b);
          } catch (const std::exception& e) {
            std::fprintf(stderr, "  branch %d: no finite solution (%s)\n", br,
                         e.what());
          }
        }
        std::fprintf(stderr,
                     "  the asymptote (alpha/4pi)(2/3) is approached as "
                     "b -> infinity on branch -1\n");
        return 1;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 2;
}
