#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "uavwpt/coil/coil.hpp"
#include "uavwpt/coupling/neumann.hpp"
#include "uavwpt/coupling/pose.hpp"
#include "uavwpt/error.hpp"

namespace uavwpt::coupling {

/// k = M / sqrt(L1 L2).
inline double coupling_factor(double l1, double l2, double m) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) throw DomainError("self-inductances must be positive");
  const double bound = std::sqrt(l1 * l2);
  if (!(std::abs(m) < bound)) {
    throw PhysicalityError("|M| >= sqrt(L1 L2): coupling factor would not be below 1");
  }
  return m / bound;
}

struct DistancePoint {
  double dz;              // m
  double k;
  double l2_effective;    // H, receiver inductance L2 (1 - k^2)
  double l2_isolated;     // H
};

/// Coaxial coupling sweep over plane separations via the elliptic closed form.
inline std::vector<DistancePoint> coupling_vs_distance(const coil::PlanarCoil& tx, const coil::PlanarCoil& rx,
                                                       std::span<const double> dz_list,
                                                       const coil::OperatingPoint& op = {}) {
  if (dz_list.empty()) throw DomainError("distance list is empty");
  for (double dz : dz_list) {
    if (!(dz > 0.0)) throw DomainError("distances must be strictly positive");
  }
  const double l1 = coil::coil_self_inductance(tx, op);
  const double l2 = coil::coil_self_inductance(rx, op);
  std::vector<DistancePoint> out;
  out.reserve(dz_list.size());
  for (double dz : dz_list) {
    const double m = coil::coaxial_coil_mutual_inductance(tx, rx, dz);
    const double k = coupling_factor(l1, l2, m);
    out.push_back({dz, k, coil::effective_inductance(l2, std::abs(k)), l2});
  }
  return out;
}

/// Coupling factor in a general pose through the Neumann path.
inline double coupling_at(const coil::PlanarCoil& tx, const coil::PlanarCoil& rx, const Pose& pose,
                          const LoopDiscretization& disc = {}, const coil::OperatingPoint& op = {}) {
  const double m = neumann_mutual(tx, rx, pose, disc);
  return coupling_factor(coil::coil_self_inductance(tx, op), coil::coil_self_inductance(rx, op), m);
}

enum class OffsetKind { Lateral, Tilt };

inline std::string to_string(OffsetKind kind) { return kind == OffsetKind::Lateral ? "dx_mm" : "tilt_deg"; }

/// k over (plane separation) x (lateral offset along x, or receiver tilt).
/// values[i][j] belongs to dz_list[i] and offsets[j].
struct MisalignmentGrid {
  OffsetKind kind;
  std::vector<double> dz;        // m
  std::vector<double> offsets;   // m for Lateral, degrees for Tilt
  std::vector<std::vector<double>> k;
};

inline MisalignmentGrid misalignment_grid(const coil::PlanarCoil& tx, const coil::PlanarCoil& rx,
                                          std::span<const double> dz_list, std::span<const double> offsets,
                                          OffsetKind kind, const LoopDiscretization& disc = {},
                                          const coil::OperatingPoint& op = {}) {
  if (dz_list.empty() || offsets.empty()) throw DomainError("misalignment grid axes must be non-empty");
  disc.validate();
  const double l1 = coil::coil_self_inductance(tx, op);
  const double l2 = coil::coil_self_inductance(rx, op);
  MisalignmentGrid grid{kind, {dz_list.begin(), dz_list.end()}, {offsets.begin(), offsets.end()}, {}};
  grid.k.assign(dz_list.size(), std::vector<double>(offsets.size(), 0.0));
  for (std::size_t i = 0; i < dz_list.size(); ++i) {
    for (std::size_t j = 0; j < offsets.size(); ++j) {
      Pose pose{0.0, 0.0, dz_list[i], 0.0};
      if (kind == OffsetKind::Lateral) {
        pose.dx = offsets[j];
      } else {
        pose.tilt_deg = offsets[j];
      }
      pose.validate_physical();
      grid.k[i][j] = coupling_factor(l1, l2, neumann_mutual(tx, rx, pose, disc));
    }
  }
  return grid;
}

}  // namespace uavwpt::coupling
