#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "uavwpt/error.hpp"
#include "uavwpt/numerics/roots.hpp"

// Global-warming-potential bookkeeping in kgCO2eq over years of operation.

namespace uavwpt::sustainability {

/// Production GWP broken down by part. Insertion order is kept for reports.
class GwpInventory {
 public:
  GwpInventory() = default;
  explicit GwpInventory(std::vector<std::pair<std::string, double>> components) : components_(std::move(components)) {
    for (const auto& [label, value] : components_) {
      if (!(value >= 0.0)) throw DomainError("inventory component '" + label + "' must be >= 0");
    }
  }

  const std::vector<std::pair<std::string, double>>& components() const { return components_; }

 private:
  std::vector<std::pair<std::string, double>> components_;
};

inline double inventory_total(const GwpInventory& inv) {
  double total = 0.0;
  for (const auto& [label, value] : inv.components()) total += value;
  return total;
}

/// IoT node additions for UAV charging, low-power build (60 mAh cell).
inline GwpInventory low_power_inventory() {
  return GwpInventory({{"PCB coil", 0.793}, {"ICs", 0.298}, {"Passives", 0.347}, {"PCB", 0.182}, {"Battery", 0.0363}});
}

/// Same node with the larger medium-power cell.
inline GwpInventory medium_power_inventory() {
  return GwpInventory({{"PCB coil", 0.793}, {"ICs", 0.298}, {"Passives", 0.347}, {"PCB", 0.182}, {"Battery", 0.787}});
}

/// Averaged accrual: initial + rate * t.
struct LinearAccrual {
  double initial_gwp;
  double annual_rate;
};

/// Step model: base + per_event * floor(t / period).
struct PeriodicReplacement {
  double base_gwp;
  double replacement_period;
  double per_event_gwp;
};

struct ServicingScenario {
  std::string label;
  std::variant<LinearAccrual, PeriodicReplacement> model;

  void validate() const {
    if (const auto* lin = std::get_if<LinearAccrual>(&model)) {
      if (!std::isfinite(lin->initial_gwp)) throw DomainError(label + ": initial GWP must be finite");
      if (!(lin->annual_rate >= 0.0)) throw DomainError(label + ": annual rate must be >= 0");
    } else {
      const auto& rep = std::get<PeriodicReplacement>(model);
      if (!std::isfinite(rep.base_gwp)) throw DomainError(label + ": base GWP must be finite");
      if (!(rep.replacement_period > 0.0)) throw DomainError(label + ": replacement period must be positive");
      if (!(rep.per_event_gwp >= 0.0)) throw DomainError(label + ": per-event GWP must be >= 0");
    }
  }
};

/// Linear scenario through (0, at_zero) and (horizon, at_horizon).
inline ServicingScenario linear_through(std::string label, double at_zero, double horizon, double at_horizon) {
  return {std::move(label), LinearAccrual{at_zero, (at_horizon - at_zero) / horizon}};
}

inline double cumulative_gwp(const ServicingScenario& sc, double t) {
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
  if (const auto* lin = std::get_if<LinearAccrual>(&sc.model)) return lin->initial_gwp + lin->annual_rate * t;
  const auto& rep = std::get<PeriodicReplacement>(sc.model);
  return rep.base_gwp + rep.per_event_gwp * std::floor(t / rep.replacement_period);
}

namespace detail {

// Replacement instants of `sc` in (0, horizon].
inline void collect_jumps(const ServicingScenario& sc, double horizon, std::vector<double>& out) {
  if (const auto* rep = std::get_if<PeriodicReplacement>(&sc.model)) {
    for (double n = 1.0;; n += 1.0) {
      const double t = n * rep->replacement_period;
      if (t > horizon) break;
      out.push_back(t);
    }
  }
}

// Value on the continuous piece that starts at `start`, extended to t.
inline double piece_value(const ServicingScenario& sc, double start, double t) {
  if (const auto* lin = std::get_if<LinearAccrual>(&sc.model)) return lin->initial_gwp + lin->annual_rate * t;
  return cumulative_gwp(sc, start);
}

}  // namespace detail

struct Breakeven {
  std::optional<double> years;  // empty: no crossing within the horizon

  bool crosses() const { return years.has_value(); }
};

/// Earliest time in (0, horizon] at which scenario a, having started above b,
/// is no longer above it.
inline Breakeven breakeven(const ServicingScenario& a, const ServicingScenario& b, double horizon) {
  a.validate();
  b.validate();
  if (!(horizon > 0.0)) throw DomainError("breakeven horizon must be positive");
  auto gap = [&](double t) { return cumulative_gwp(a, t) - cumulative_gwp(b, t); };
  if (!(gap(0.0) > 0.0)) return {};

  std::vector<double> knots{0.0, horizon};
  detail::collect_jumps(a, horizon, knots);
  detail::collect_jumps(b, horizon, knots);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double p = knots[i];
    const double q = knots[i + 1];
    if (p > 0.0 && gap(p) <= 0.0) return {p};
    // Both curves are affine on [p, q); the gap changes sign at most once there.
    auto piece_gap = [&](double t) { return detail::piece_value(a, p, t) - detail::piece_value(b, p, t); };
    if (piece_gap(q) <= 0.0) return {numerics::find_crossing(piece_gap, p, q)};
  }
  if (gap(horizon) <= 0.0) return {horizon};
  return {};
}

struct ScenarioTable {
  std::vector<std::string> labels;
  std::vector<double> t;                   // years
  std::vector<std::vector<double>> values; // values[row][scenario]
};

/// Cumulative GWP of each scenario at t = 0, step, 2 step, ... <= horizon.
inline ScenarioTable scenario_table(std::span<const ServicingScenario> scenarios, double horizon, double step) {
  if (!(step > 0.0)) throw DomainError("table step must be positive");
  if (!(horizon >= 0.0)) throw DomainError("table horizon must be >= 0");
  ScenarioTable table;
  for (const auto& sc : scenarios) {
    sc.validate();
    table.labels.push_back(sc.label);
  }
  const auto rows = static_cast<std::size_t>(std::floor(horizon / step * (1.0 + 1e-12))) + 1;
  for (std::size_t i = 0; i < rows; ++i) {
    const double t = static_cast<double>(i) * step;
    std::vector<double> row;
    row.reserve(scenarios.size());
    for (const auto& sc : scenarios) row.push_back(cumulative_gwp(sc, t));
    table.t.push_back(t);
    table.values.push_back(std::move(row));
  }
  return table;
}

/// Built-in servicing scenarios over a 15-year horizon: UAV recharging versus
/// primary-cell nodes with battery swaps, device replacement every 5 years, or
/// every year; low (10 J/day) and medium (200 J/day) power nodes.
inline std::vector<ServicingScenario> preset_scenarios() {
  return {
      linear_through("uav-low", 4.696288, 15.0, 6.819628185185185),
      linear_through("battery-low", 3.0, 15.0, 3.7710625),
      linear_through("replace-annual", 3.0, 15.0, 48.7710625),
      linear_through("replace-5yr", 3.0, 15.0, 12.7710625),
      linear_through("uav-medium", 5.44624, 15.0, 7.130013076923077),
      linear_through("battery-medium", 3.0, 15.0, 18.42125),
      linear_through("replace-annual-medium", 3.0, 15.0, 63.42124999999999),
      linear_through("replace-5yr-medium", 3.0, 15.0, 27.42125),
  };
}

inline std::optional<ServicingScenario> preset_scenario(std::string_view name) {
  std::string key(name);
  // "-low" is the default variant
  if (key.size() > 4 && key.ends_with("-low") && key != "uav-low" && key != "battery-low") {
    key.resize(key.size() - 4);
  }
  for (auto& sc : preset_scenarios()) {
    if (sc.label == key) return sc;
  }
  return std::nullopt;
}

}  // namespace uavwpt::sustainability
