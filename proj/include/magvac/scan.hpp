#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "magvac/constants.hpp"
#include "magvac/lagrangian.hpp"
#include "magvac/moment.hpp"
#include "magvac/optics.hpp"

namespace magvac {

enum class Spacing { Linear, Log };
enum class TableFormat { Csv, Json };

// All value columns are in the reduced units of the evaluation modules.
// Flag columns are 1 when the named validity condition holds at that row.
struct ScanRequest {
  double b_min = 0.0;
  double b_max = 30.0;
  int points = 300;
  Spacing spacing = Spacing::Linear;
  PhotonKinematics kinematics{};
  std::vector<std::string> columns;  // empty selects the default column set
  TableFormat format = TableFormat::Csv;
  int series_order = 0;  // truncation for the series index columns; 0 = auto

  void validate() const {
    if (!(b_min >= 0.0) || !(b_min < b_max))
      throw std::invalid_argument("scan: need 0 <= b_min < b_max");
    if (points < 2) throw std::invalid_argument("scan: need points >= 2");
    if (spacing == Spacing::Log && !(b_min > 0.0))
      throw std::invalid_argument("scan: log spacing needs b_min > 0");
    if (series_order < 0)
      throw std::invalid_argument("scan: series_order must be >= 0");
  }
};

struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

namespace detail {

inline const std::vector<std::pair<std::string, std::string>>&
column_catalogue() {
  static const std::vector<std::pair<std::string, std::string>> cat = {
      {"b", "external field strength, critical-field units"},
      {"n_par", "parallel-mode refractive index, dimensionless"},
      {"n_perp", "perpendicular-mode refractive index, dimensionless"},
      {"delta_n", "n_perp - n_par, dimensionless"},
      {"faraday", "polarization rotation angle, radians"},
      {"mu_exact", "reduced photon moment; times 2 (k/m) sin^2(theta) for"
                   " Bohr magnetons"},
      {"mu_weak", "weak-field series for the reduced moment"},
      {"mu_strong", "strong-field series for the reduced moment"},
      {"h_reduced", "per-photon field-energy expectation over |k|"},
      {"v_perp", "perpendicular-mode group velocity, units of c"},
      {"flag_field_domain", "1 when the row evaluated without domain error"},
      {"flag_photon_soft", "1 when the photon is below pair threshold"},
      {"flag_weak_series", "1 when b is inside the weak-series window"},
      {"flag_strong_series", "1 when b is inside the strong-series window"},
      {"flag_npar_domain", "1 when the parallel index is inside its domain"},
      // On-request diagnostics, not part of the default set; truncation is
      // controlled by ScanRequest::series_order.
      {"n_perp_weak", "weak-field series for the perpendicular index"},
      {"n_perp_strong", "strong-field series for the perpendicular index"},
  };
  return cat;
}

constexpr size_t kDefaultColumnCount = 15;

inline std::string column_unit(const std::string& name) {
  for (const auto& [col, unit] : column_catalogue())
    if (col == name) return unit;
  throw std::invalid_argument("scan: unknown column '" + name + "'");
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::vector<std::string> default_scan_columns() {
  const auto& cat = detail::column_catalogue();
  std::vector<std::string> names;
  for (size_t i = 0; i < detail::kDefaultColumnCount; ++i)
    names.push_back(cat[i].first);
  return names;
}

inline ScanTable run_scan(const ScanRequest& req,
                          const Constants& constants = default_constants()) {
  req.validate();
  ScanTable table;
  table.columns = req.columns.empty() ? default_scan_columns() : req.columns;
  for (const auto& name : table.columns) detail::column_unit(name);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double log_ratio =
      (req.spacing == Spacing::Log)
          ? std::log(req.b_max / req.b_min) / (req.points - 1)
          : 0.0;
  const double step = (req.b_max - req.b_min) / (req.points - 1);

  table.rows.reserve(req.points);
  for (int i = 0; i < req.points; ++i) {
    double b = (req.spacing == Spacing::Log)
                   ? req.b_min * std::exp(log_ratio * i)
                   : req.b_min + step * i;
    if (i == req.points - 1) b = req.b_max;

    std::map<std::string, double> point;
    point["b"] = b;
    try {
      const FieldPoint fp(b);
      const RefractionResult npar =
          n_parallel_exact(fp, req.kinematics, constants);
      const RefractionResult nperp =
          n_perp_exact(fp, req.kinematics, constants);
      const MomentResult mw = mu_weak(fp, req.kinematics, constants);
      const MomentResult ms = mu_strong(fp, req.kinematics, constants);
      point["n_par"] = npar.n;
      point["n_perp"] = nperp.n;
      point["delta_n"] = nperp.n - npar.n;
      point["faraday"] = faraday_rotation(fp, req.kinematics, constants);
      point["mu_exact"] = mu_exact(fp, req.kinematics, constants).mu_reduced;
      point["mu_weak"] = mw.mu_reduced;
      point["mu_strong"] = ms.mu_reduced;
      point["h_reduced"] =
          hamiltonian_expectation(fp, req.kinematics, constants).h_reduced;
      point["v_perp"] = v_perp(fp, req.kinematics, constants);
      point["flag_field_domain"] = 1.0;
      point["flag_photon_soft"] = nperp.in_validity_domain ? 1.0 : 0.0;
      point["flag_weak_series"] = mw.in_validity_domain ? 1.0 : 0.0;
      point["flag_strong_series"] = ms.in_validity_domain ? 1.0 : 0.0;
      point["flag_npar_domain"] = npar.in_validity_domain ? 1.0 : 0.0;
      const int order = req.series_order > 0 ? req.series_order : 20;
      point["n_perp_weak"] =
          n_perp_weak_series(fp, req.kinematics, order, constants).n;
      point["n_perp_strong"] =
          (b > 0.0)
              ? n_perp_strong_series(fp, req.kinematics, order, constants).n
              : nan;
    } catch (const std::exception&) {
      for (const auto& [col, unit] : detail::column_catalogue())
        if (col != "b") point[col] = nan;
      point["flag_field_domain"] = 0.0;
    }

    std::vector<double> row;
    row.reserve(table.columns.size());
    for (const auto& name : table.columns) row.push_back(point.at(name));
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Figure preset: the reduced Hamiltonian expectation on a fixed 300-point
// linear grid over [0, 30]. Spacing, range and column are not configurable
// so the emitted series is always comparable across runs.
inline ScanRequest figure1_request(const PhotonKinematics& kin = {},
                                   TableFormat format = TableFormat::Csv) {
  ScanRequest req;
  req.b_min = 0.0;
  req.b_max = 30.0;
  req.points = 300;
  req.spacing = Spacing::Linear;
  req.kinematics = kin;
  req.columns = {"b", "h_reduced"};
  req.format = format;
  return req;
}

inline void write_csv(std::ostream& os, const ScanTable& table) {
  os << "# units:\n";
  for (const auto& name : table.columns)
    os << "#   " << name << ": " << detail::column_unit(name) << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << table.columns[i] << (i + 1 < table.columns.size() ? "," : "\n");
  for (const auto& row : table.rows)
    for (size_t i = 0; i < row.size(); ++i)
      os << detail::format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
}

// JSON form: the same legend as "units" metadata, rows as an array of
// objects keyed by column name. NaN is encoded as null. Numeric strings are
// produced by the same formatter as the CSV path, so the two encodings of a
// scan carry identical values.
inline void write_json(std::ostream& os, const ScanTable& table) {
  os << "{\n  \"units\": {";
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? ", " : "") << "\"" << table.columns[i] << "\": \""
       << detail::column_unit(table.columns[i]) << "\"";
  os << "},\n  \"columns\": [";
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? ", " : "") << "\"" << table.columns[i] << "\"";
  os << "],\n  \"rows\": [\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    os << "    {";
    for (size_t i = 0; i < table.rows[r].size(); ++i) {
      const double v = table.rows[r][i];
      os << (i ? ", " : "") << "\"" << table.columns[i] << "\": ";
      if (std::isnan(v))
        os << "null";
      else
        os << detail::format_double(v);
    }
    os << "}" << (r + 1 < table.rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
}

}  // namespace magvac
