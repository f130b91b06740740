#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "uavwpt/error.hpp"
#include "uavwpt/io/csv.hpp"

namespace uavwpt::io {

/// (dz in mm, k) pairs.
using CouplingSeries = std::vector<std::pair<double, double>>;

struct ComparisonRow {
  double dz_mm;
  double k_analytic;
  double k_measured;
  double abs_dev;  // |k_measured - k_analytic|
  double rel_dev;  // abs_dev / |k_analytic|
};

inline constexpr const char* kComparisonHeader = "dz_mm,k_analytic,k_measured,abs_dev,rel_dev";

/// Joins two coupling series on dz (exact key match) and reports deviations,
/// ordered by increasing dz.
inline std::vector<ComparisonRow> compare_report(CouplingSeries analytic, CouplingSeries measured) {
  auto by_dz = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(analytic.begin(), analytic.end(), by_dz);
  std::sort(measured.begin(), measured.end(), by_dz);

  for (const auto* series : {&analytic, &measured}) {
    if (std::adjacent_find(series->begin(), series->end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }) != series->end()) {
      throw ReportError("compare_report: duplicate dz key");
    }
  }

  std::vector<double> missing_measured;
  std::vector<double> missing_analytic;
  for (const auto& [dz, k] : analytic) {
    if (!std::binary_search(measured.begin(), measured.end(), std::pair{dz, 0.0}, by_dz)) missing_measured.push_back(dz);
  }
  for (const auto& [dz, k] : measured) {
    if (!std::binary_search(analytic.begin(), analytic.end(), std::pair{dz, 0.0}, by_dz)) missing_analytic.push_back(dz);
  }
  if (!missing_measured.empty() || !missing_analytic.empty()) {
    std::string msg = "compare_report: dz keys do not match;";
    if (!missing_measured.empty()) {
      msg += " missing in measured:";
      for (double dz : missing_measured) msg += " " + format_double(dz);
      msg += ";";
    }
    if (!missing_analytic.empty()) {
      msg += " missing in analytic:";
      for (double dz : missing_analytic) msg += " " + format_double(dz);
    }
    throw ReportError(msg);
  }

  std::vector<ComparisonRow> rows;
  rows.reserve(analytic.size());
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    const double ka = analytic[i].second;
    const double km = measured[i].second;
    const double abs_dev = std::abs(km - ka);
    double rel_dev = 0.0;
    if (ka != 0.0) {
      rel_dev = abs_dev / std::abs(ka);
    } else if (abs_dev != 0.0) {
      rel_dev = std::numeric_limits<double>::infinity();
    }
    rows.push_back({analytic[i].first, ka, km, abs_dev, rel_dev});
  }
  return rows;
}

inline void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  os << kComparisonHeader << '\n';
  for (const auto& r : rows) {
    write_csv_row(os, {format_double(r.dz_mm), format_double(r.k_analytic), format_double(r.k_measured),
                       format_double(r.abs_dev), format_double(r.rel_dev)});
  }
}

}  // namespace uavwpt::io
