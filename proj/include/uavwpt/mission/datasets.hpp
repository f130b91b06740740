#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uavwpt/error.hpp"
#include "uavwpt/io/csv.hpp"

// Measured efficiency datasets. The same numbers ship as data/pru_efficiency.csv
// and data/system_efficiency.csv; the tables below are the compiled-in copy.

namespace uavwpt::mission {

namespace detail {

inline void require_increasing(const std::vector<double>& axis, const char* name) {
  if (axis.size() < 2) throw FormatError(std::string(name) + " axis needs at least two samples");
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) throw FormatError(std::string(name) + " axis must be strictly increasing");
  }
}

inline void require_fraction(double eff) {
  if (!(eff > 0.0) || !(eff < 1.0)) throw FormatError("efficiency samples must lie in (0, 1)");
}

// Index i with axis[i] <= x <= axis[i+1] and the fractional position t.
inline std::pair<std::size_t, double> locate(const std::vector<double>& axis, double x) {
  auto it = std::upper_bound(axis.begin(), axis.end(), x);
  std::size_t i = it == axis.begin() ? 0 : static_cast<std::size_t>(it - axis.begin()) - 1;
  i = std::min(i, axis.size() - 2);
  return {i, (x - axis[i]) / (axis[i + 1] - axis[i])};
}

// Exact at the end points and never outside [min(a, b), max(a, b)].
inline double lerp(double a, double b, double t) {
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return std::clamp(a + t * (b - a), std::min(a, b), std::max(a, b));
}

}  // namespace detail

struct PruEfficiency {
  double efficiency;
  bool clamped;  // request fell outside the measured hull and was clamped onto it
};

/// Receiver-unit efficiency over (input voltage, output current).
class PruEfficiencyTable {
 public:
  PruEfficiencyTable(std::vector<double> vin, std::vector<double> iout, std::vector<std::vector<double>> eff)
      : vin_(std::move(vin)), iout_(std::move(iout)), eff_(std::move(eff)) {
    detail::require_increasing(vin_, "vin");
    detail::require_increasing(iout_, "iout");
    if (eff_.size() != vin_.size()) throw FormatError("pru grid row count mismatch");
    for (const auto& row : eff_) {
      if (row.size() != iout_.size()) throw FormatError("pru grid column count mismatch");
      for (double e : row) detail::require_fraction(e);
    }
  }

  /// Parses `vin_V,iout_A,eff` rows that together cover a full rectangular grid.
  static PruEfficiencyTable from_csv(std::string_view text) {
    const auto table = io::parse_numeric_csv(text, {"vin_V", "iout_A", "eff"});
    std::vector<double> vin, iout;
    for (const auto& r : table.rows) {
      vin.push_back(r[0]);
      iout.push_back(r[1]);
    }
    for (auto* axis : {&vin, &iout}) {
      std::sort(axis->begin(), axis->end());
      axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
    }
    if (vin.size() * iout.size() != table.rows.size()) throw FormatError("pru dataset is not a complete grid");
    std::vector<std::vector<double>> eff(vin.size(), std::vector<double>(iout.size(), std::nan("")));
    for (const auto& r : table.rows) {
      const auto i = static_cast<std::size_t>(std::lower_bound(vin.begin(), vin.end(), r[0]) - vin.begin());
      const auto j = static_cast<std::size_t>(std::lower_bound(iout.begin(), iout.end(), r[1]) - iout.begin());
      if (!std::isnan(eff[i][j])) throw FormatError("pru dataset has a duplicate grid point");
      eff[i][j] = r[2];
    }
    return PruEfficiencyTable(std::move(vin), std::move(iout), std::move(eff));
  }

  static const PruEfficiencyTable& builtin();

  /// Bilinear interpolation; outside the hull the point is clamped and flagged.
  PruEfficiency at(double vin, double iout) const {
    const double v = std::clamp(vin, vin_.front(), vin_.back());
    const double c = std::clamp(iout, iout_.front(), iout_.back());
    const bool clamped = v != vin || c != iout;
    const auto [i, tv] = detail::locate(vin_, v);
    const auto [j, tc] = detail::locate(iout_, c);
    const double lo = detail::lerp(eff_[i][j], eff_[i][j + 1], tc);
    const double hi = detail::lerp(eff_[i + 1][j], eff_[i + 1][j + 1], tc);
    return {detail::lerp(lo, hi, tv), clamped};
  }

  const std::vector<double>& vin_axis() const { return vin_; }
  const std::vector<double>& iout_axis() const { return iout_; }
  double sample(std::size_t vin_index, std::size_t iout_index) const { return eff_.at(vin_index).at(iout_index); }

 private:
  std::vector<double> vin_;
  std::vector<double> iout_;
  std::vector<std::vector<double>> eff_;  // [vin][iout]
};

struct SystemEfficiency {
  double efficiency;
  double inverter_voltage;  // V
};

/// End-to-end efficiency and the inverter input voltage needed, versus coil distance.
class SystemEfficiencyTable {
 public:
  SystemEfficiencyTable(std::vector<double> dz_mm, std::vector<double> eff, std::vector<double> vinv)
      : dz_(std::move(dz_mm)), eff_(std::move(eff)), vinv_(std::move(vinv)) {
    detail::require_increasing(dz_, "dz");
    if (eff_.size() != dz_.size() || vinv_.size() != dz_.size()) throw FormatError("system dataset column mismatch");
    for (double e : eff_) detail::require_fraction(e);
  }

  static SystemEfficiencyTable from_csv(std::string_view text) {
    const auto table = io::parse_numeric_csv(text, {"dz_mm", "eff", "vinv_V"});
    std::vector<double> dz, eff, vinv;
    for (const auto& r : table.rows) {
      dz.push_back(r[0]);
      eff.push_back(r[1]);
      vinv.push_back(r[2]);
    }
    return SystemEfficiencyTable(std::move(dz), std::move(eff), std::move(vinv));
  }

  static const SystemEfficiencyTable& builtin();

  /// Linear interpolation; no extrapolation outside the measured distances.
  SystemEfficiency at(double dz_mm) const {
    if (!(dz_mm >= dz_.front()) || !(dz_mm <= dz_.back())) {
      throw RangeError("distance " + io::format_double(dz_mm) + " mm outside the measured range [" +
                       io::format_double(dz_.front()) + ", " + io::format_double(dz_.back()) + "] mm");
    }
    const auto [i, t] = detail::locate(dz_, dz_mm);
    return {detail::lerp(eff_[i], eff_[i + 1], t), detail::lerp(vinv_[i], vinv_[i + 1], t)};
  }

  const std::vector<double>& dz_axis() const { return dz_; }
  const std::vector<double>& efficiencies() const { return eff_; }
  const std::vector<double>& inverter_voltages() const { return vinv_; }

 private:
  std::vector<double> dz_;
  std::vector<double> eff_;
  std::vector<double> vinv_;
};

inline const PruEfficiencyTable& PruEfficiencyTable::builtin() {
  static const PruEfficiencyTable table = [] {
    std::vector<double> vin;
    for (int v = 8; v <= 21; ++v) vin.push_back(v);
    static constexpr double kGrid[14][4] = {
    {0.764010989010989, 0.780113636363636, 0.769602272727273, 0.750561797752809},  // 8 V
    {0.744578313253012, 0.787383512544803, 0.775107296137339, 0.766164874551971},  // 9 V
    {0.731842105263158, 0.779007092198582, 0.781442307692308, 0.771696750902527},  // 10 V
    {0.712163892445583, 0.768111888111888, 0.777703349282297, 0.774212241941326},  // 11 V
    {0.691791044776119, 0.762777777777778, 0.774, 0.774492753623188},  // 12 V
    {0.668509615384615, 0.747719537100068, 0.771794871794872, 0.768368080517613},  // 13 V
    {0.651288056206089, 0.740161725067386, 0.763815789473684, 0.767264895908112},  // 14 V
    {0.628474576271186, 0.717908496732026, 0.7525, 0.758014184397163},  // 15 V
    {0.599353448275862, 0.707731958762887, 0.741514598540146, 0.750561797752809},  // 16 V
    {0.584243697478992, 0.687359198998748, 0.735475113122172, 0.744030630003481},  // 17 V
    {0.551785714285714, 0.678024691358025, 0.716666666666667, 0.733058984910837},  // 18 V
    {0.532248803827751, 0.656937799043062, 0.707003044802088, 0.725840407470289},  // 19 V
    {0.515, 0.646117647058824, 0.694615384615385, 0.717315436241611},  // 20 V
    {0.499730458221024, 0.622675736961451, 0.678947368421052, 0.706878306878307},  // 21 V
    };
    std::vector<std::vector<double>> eff;
    for (const auto& row : kGrid) eff.emplace_back(std::begin(row), std::end(row));
    return PruEfficiencyTable(std::move(vin), {0.2, 0.4, 0.6, 0.8}, std::move(eff));
  }();
  return table;
}

inline const SystemEfficiencyTable& SystemEfficiencyTable::builtin() {
  static const SystemEfficiencyTable table = [] {
    static constexpr double kRows[6][3] = {
    {50.0, 0.391759067761457, 9.91},
    {60.0, 0.324109801263586, 10.9},
    {70.0, 0.27933804332413, 11.87},
    {80.0, 0.216999110659383, 13.89},
    {90.0, 0.171362216542939, 15.84},
    {100.0, 0.132687751107448, 17.85},
    };
    std::vector<double> dz, eff, vinv;
    for (const auto& r : kRows) {
      dz.push_back(r[0]);
      eff.push_back(r[1]);
      vinv.push_back(r[2]);
    }
    return SystemEfficiencyTable(std::move(dz), std::move(eff), std::move(vinv));
  }();
  return table;
}

inline PruEfficiency pru_efficiency(double vin, double iout) { return PruEfficiencyTable::builtin().at(vin, iout); }

inline SystemEfficiency system_efficiency(double dz_mm) { return SystemEfficiencyTable::builtin().at(dz_mm); }

}  // namespace uavwpt::mission
