#pragma once

#include <cmath>
#include <optional>
#include <span>

#include "uavwpt/error.hpp"
#include "uavwpt/mission/datasets.hpp"
#include "uavwpt/units.hpp"

namespace uavwpt::mission {

struct BatteryCell {
  double capacity_mAh = 60.0;
  double nominal_voltage = 2.4;      // V
  double max_charge_rate = 10.0;     // C
  double charge_done_current_mA = 200.0;
  double charge_done_voltage = 2.6;  // V

  /// Zero capacity is accepted so that degenerate budgets can be expressed.
  void validate() const {
    if (!(capacity_mAh >= 0.0)) throw DomainError("cell capacity must be >= 0");
    if (!(nominal_voltage > 0.0)) throw DomainError("cell nominal voltage must be positive");
    if (!(max_charge_rate > 0.0)) throw DomainError("cell max charge rate must be positive");
  }

  double energy_Wh() const { return capacity_mAh * 1e-3 * nominal_voltage; }
};

/// 60 mAh lithium-titanate node cell, 10 C max.
inline BatteryCell lto_60mAh() { return {}; }

struct Autonomy {
  bool unbounded = false;  // no leakage: the cell never runs flat on its own
  double years = 0.0;

  static Autonomy infinite() { return {true, 0.0}; }
};

/// Shelf autonomy: capacity divided by the standby leakage current.
inline Autonomy autonomy_from_leakage(const BatteryCell& cell, double leakage_uA) {
  cell.validate();
  if (!(leakage_uA >= 0.0)) throw DomainError("leakage current must be >= 0");
  if (leakage_uA == 0.0) return Autonomy::infinite();
  const double hours = cell.capacity_mAh * 1e3 / leakage_uA;
  return {false, hours / kHoursPerYear};
}

/// Constant-current charge duration in minutes at rate_C.
inline double charge_time_minutes(const BatteryCell& cell, double rate_C) {
  cell.validate();
  if (!(rate_C > 0.0)) throw DomainError("charge rate must be positive");
  if (rate_C > cell.max_charge_rate) {
    throw SafetyError("charge rate " + io::format_double(rate_C) + " C exceeds the cell limit of " +
                      io::format_double(cell.max_charge_rate) + " C");
  }
  return 60.0 / rate_C;
}

struct MissionBudget {
  double energy_transferred = 0.0;     // Wh stored in the cell
  double energy_drawn_from_uav = 0.0;  // Wh, link losses and hover included
  double hover_energy = 0.0;           // Wh spent hovering while charging
  double charge_duration = 0.0;        // h
};

/// Energy the UAV spends on one full recharge of `cell` at coil distance dz.
/// Hover power has no default: it is specific to the airframe.
inline MissionBudget mission_energy(const BatteryCell& cell, double dz_mm, double hover_power_W, double rate_C,
                                    const SystemEfficiencyTable& table = SystemEfficiencyTable::builtin()) {
  cell.validate();
  if (!(hover_power_W >= 0.0)) throw DomainError("hover power must be >= 0");
  const double minutes = charge_time_minutes(cell, rate_C);
  const double eta = table.at(dz_mm).efficiency;
  if (cell.capacity_mAh == 0.0) return {};
  MissionBudget b;
  b.energy_transferred = cell.energy_Wh();
  b.charge_duration = minutes / 60.0;
  b.hover_energy = hover_power_W * b.charge_duration;
  b.energy_drawn_from_uav = b.energy_transferred / eta + b.hover_energy;
  return b;
}

struct ChargeSample {
  double time_s;
  double current_mA;
  double voltage_V;
};

/// First time at which the end-of-charge condition (current below the cell's
/// done-current and voltage above its done-voltage) has held for more than
/// `hold_s` seconds. Samples must be in time order.
inline std::optional<double> end_of_charge_time(const BatteryCell& cell, std::span<const ChargeSample> trace,
                                                double hold_s = 10.0) {
  std::optional<double> since;
  double last_t = -INFINITY;
  for (const auto& s : trace) {
    if (!(s.time_s >= last_t)) throw DomainError("charge trace must be ordered in time");
    last_t = s.time_s;
    const bool done = s.current_mA < cell.charge_done_current_mA && s.voltage_V > cell.charge_done_voltage;
    if (!done) {
      since.reset();
      continue;
    }
    if (!since) since = s.time_s;
    if (s.time_s - *since > hold_s) return s.time_s;
  }
  return std::nullopt;
}

inline bool charge_complete(const BatteryCell& cell, std::span<const ChargeSample> trace, double hold_s = 10.0) {
  return end_of_charge_time(cell, trace, hold_s).has_value();
}

inline constexpr double kPowerDownInputVoltage = 1.0;  // V

/// Node drops to power-down once the rectified input falls below 1 V.
inline bool should_power_down(double input_voltage_V) { return input_voltage_V < kPowerDownInputVoltage; }

}  // namespace uavwpt::mission
