#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "uavwpt/coil/coil.hpp"
#include "uavwpt/coupling/pose.hpp"
#include "uavwpt/error.hpp"
#include "uavwpt/units.hpp"

namespace uavwpt::coupling {

namespace detail {

// Segment midpoints and tangent element vectors of one circular filament.
struct FilamentSamples {
  std::vector<double> x, y, z;
  std::vector<double> tx, ty, tz;
};

inline FilamentSamples sample_loop(double radius, int segments, const Pose* pose) {
  FilamentSamples out;
  const auto n = static_cast<std::size_t>(segments);
  for (auto* v : {&out.x, &out.y, &out.z, &out.tx, &out.ty, &out.tz}) v->resize(n);
  const double dphi = 2.0 * kPi / segments;
  double c = 1.0, s = 0.0;
  if (pose != nullptr) {
    const double t = units::deg_to_rad(pose->tilt_deg);
    c = std::cos(t);
    s = std::sin(t);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = (static_cast<double>(i) + 0.5) * dphi;
    const double px = radius * std::cos(phi);
    const double py = radius * std::sin(phi);
    const double lx = -radius * std::sin(phi) * dphi;
    const double ly = radius * std::cos(phi) * dphi;
    if (pose == nullptr) {
      out.x[i] = px;
      out.y[i] = py;
      out.z[i] = 0.0;
      out.tx[i] = lx;
      out.ty[i] = ly;
      out.tz[i] = 0.0;
    } else {
      // rotation about x, then translation
      out.x[i] = px + pose->dx;
      out.y[i] = c * py + pose->dy;
      out.z[i] = s * py + pose->dz;
      out.tx[i] = lx;
      out.ty[i] = c * ly;
      out.tz[i] = s * ly;
    }
  }
  return out;
}

}  // namespace detail

/// Mutual inductance between two planar coils in an arbitrary pose, from the
/// Neumann double line integral over every winding pair (segment midpoint rule
/// on the exact circles). The result carries sign: a receiver flipped over
/// (tilt 180 deg) yields the negated value.
inline double neumann_mutual(const coil::PlanarCoil& tx, const coil::PlanarCoil& rx, const Pose& pose,
                             const LoopDiscretization& disc = {}) {
  disc.validate();
  const double guard = std::max(tx.wire().radius_a, rx.wire().radius_a);
  const double guard_sq = guard * guard;

  std::vector<detail::FilamentSamples> tx_loops;
  for (double r : tx.winding_radii()) tx_loops.push_back(detail::sample_loop(r, disc.segments_per_turn, nullptr));

  double total = 0.0;
  double min_dist_sq = std::numeric_limits<double>::infinity();
  for (double r_rx : rx.winding_radii()) {
    const auto b = detail::sample_loop(r_rx, disc.segments_per_turn, &pose);
    for (const auto& a : tx_loops) {
      double pair_sum = 0.0;
      const std::size_t na = a.x.size();
      const std::size_t nb = b.x.size();
      for (std::size_t i = 0; i < na; ++i) {
        const double ax = a.x[i], ay = a.y[i], az = a.z[i];
        const double atx = a.tx[i], aty = a.ty[i], atz = a.tz[i];
        double row = 0.0;
        for (std::size_t j = 0; j < nb; ++j) {
          const double rx_ = ax - b.x[j];
          const double ry_ = ay - b.y[j];
          const double rz_ = az - b.z[j];
          const double d2 = rx_ * rx_ + ry_ * ry_ + rz_ * rz_;
          min_dist_sq = std::min(min_dist_sq, d2);
          row += (atx * b.tx[j] + aty * b.ty[j] + atz * b.tz[j]) / std::sqrt(d2);
        }
        pair_sum += row;
      }
      total += pair_sum;
    }
  }
  if (min_dist_sq < guard_sq) {
    throw SingularityError("filaments closer than the wire radius in this pose");
  }
  return kMu0 / (4.0 * kPi) * total;
}

}  // namespace uavwpt::coupling
