#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "uavwpt/coil/coil.hpp"
#include "uavwpt/coupling/coupling.hpp"
#include "uavwpt/link/link.hpp"

namespace uavwpt::link {

/// Series resistances that do not follow from coil geometry.
struct CircuitEsr {
  double r1 = 0.1;  // transmitter coil
  double r2 = 1.0;  // receiver coil
  double rs = 0.0;  // source
};

struct EfficiencyCell {
  double dx;  // m
  double dy;  // m
  double k;   // signed Neumann coupling factor
  double optimal_load;
  double max_efficiency;
};

/// Link efficiency at the optimal load for a tuned pair over lateral offsets
/// at plane separation dz. Cells are ordered dx-major. The efficiency depends
/// on k^2 only, so a cell whose coupling has turned negative uses |k|.
inline std::vector<EfficiencyCell> max_efficiency_map(const coil::PlanarCoil& tx, const coil::PlanarCoil& rx,
                                                      double dz, std::span<const double> dx_list,
                                                      std::span<const double> dy_list, const CircuitEsr& esr,
                                                      const coil::OperatingPoint& op = {},
                                                      const coupling::LoopDiscretization& disc = {}) {
  if (dx_list.empty() || dy_list.empty()) throw DomainError("efficiency map axes must be non-empty");
  const double l1 = coil::coil_self_inductance(tx, op);
  const double l2 = coil::coil_self_inductance(rx, op);
  std::vector<EfficiencyCell> cells;
  cells.reserve(dx_list.size() * dy_list.size());
  for (double dx : dx_list) {
    for (double dy : dy_list) {
      const coupling::Pose pose{dx, dy, dz, 0.0};
      pose.validate_physical();
      const double k = coupling::coupling_factor(l1, l2, coupling::neumann_mutual(tx, rx, pose, disc));
      LinkCircuit link = make_tuned_link(l1, esr.r1, l2, esr.r2, esr.rs, std::abs(k), 1.0, op.frequency_f);
      link.load_RL = optimal_load(link);
      cells.push_back({dx, dy, k, link.load_RL, link_efficiency(link)});
    }
  }
  return cells;
}

}  // namespace uavwpt::link
