#pragma once

#include <cmath>

#include "uavwpt/error.hpp"
#include "uavwpt/units.hpp"

namespace uavwpt::coupling {

/// Placement of the receiver relative to the transmitter frame (transmitter
/// centred at the origin, normal along +z). The receiver is first tilted about
/// its own x diameter by `tilt_deg`, then its centre is moved to (dx, dy, dz).
struct Pose {
  double dx = 0.0;  // m
  double dy = 0.0;  // m
  double dz = 0.0;  // m
  double tilt_deg = 0.0;

  bool is_coaxial() const { return dx == 0.0 && dy == 0.0 && tilt_deg == 0.0; }

  /// Sweep operations only accept tilts that keep the coils facing each other.
  void validate_physical() const {
    if (!std::isfinite(dx) || !std::isfinite(dy) || !std::isfinite(dz) || !std::isfinite(tilt_deg)) {
      throw DomainError("pose components must be finite");
    }
    if (!(std::abs(tilt_deg) < 90.0)) throw DomainError("pose tilt must satisfy |tilt| < 90 deg");
  }
};

/// Pose of the transmitter seen from the receiver frame.
inline Pose inverse(const Pose& p) {
  const double t = units::deg_to_rad(p.tilt_deg);
  const double c = std::cos(t);
  const double s = std::sin(t);
  // R_x(-t) applied to -(dx, dy, dz)
  return Pose{-p.dx, -(c * p.dy + s * p.dz), -(-s * p.dy + c * p.dz), -p.tilt_deg};
}

struct LoopDiscretization {
  int segments_per_turn = 720;

  void validate() const {
    if (segments_per_turn < 36) throw DomainError("need at least 36 segments per turn");
  }
};

}  // namespace uavwpt::coupling
