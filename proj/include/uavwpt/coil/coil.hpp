#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uavwpt/error.hpp"
#include "uavwpt/numerics/elliptic.hpp"
#include "uavwpt/units.hpp"

// Planar coils are modelled as concentric circular filaments in one plane.
// All lengths are metres, inductances henry, frequencies hertz.

namespace uavwpt::coil {

struct WireSpec {
  double radius_a = 0.0;  // m
  double conductivity_sigma = kCopperConductivity;
  double relative_permeability_mur = 1.0;

  void validate() const {
    if (!(radius_a > 0.0)) throw DomainError("wire radius must be positive");
    if (!(conductivity_sigma > 0.0)) throw DomainError("wire conductivity must be positive");
    if (!(relative_permeability_mur > 0.0)) {
      throw DomainError("relative permeability must be positive");
    }
  }

  double permeability() const { return kMu0 * relative_permeability_mur; }
};

/// Wire radius that reproduces the 1.587 uH self-inductance of the two-turn
/// UAV transmit coil (radii 76.5/74.5 mm, copper, 6.78 MHz). The trace/wire
/// radius behind the published coil tables is not given, so every reproduction
/// of those tables uses this one fitted value.
inline constexpr double kCalibratedWireRadius = 0.7913e-3;  // m

inline WireSpec calibrated_wire() { return WireSpec{kCalibratedWireRadius, kCopperConductivity, 1.0}; }

struct OperatingPoint {
  double frequency_f = 6.78e6;  // Hz

  void validate() const {
    if (!(frequency_f > 0.0)) throw DomainError("operating frequency must be positive");
  }
  double omega() const { return angular_frequency(frequency_f); }
};

inline constexpr double kDefaultFrequency = 6.78e6;

class PlanarCoil {
 public:
  /// Radii may be given in any order; they are stored strictly decreasing.
  PlanarCoil(std::vector<double> winding_radii, WireSpec wire, std::string label = {})
      : radii_(std::move(winding_radii)), wire_(wire), label_(std::move(label)) {
    wire_.validate();
    if (radii_.empty()) throw GeometryError("coil needs at least one winding");
    for (double r : radii_) {
      if (!(r > 0.0) || !std::isfinite(r)) throw GeometryError("winding radii must be positive");
    }
    std::sort(radii_.begin(), radii_.end(), std::greater<>());
    if (std::adjacent_find(radii_.begin(), radii_.end()) != radii_.end()) {
      throw GeometryError("winding radii must be distinct");
    }
  }

  /// `count` windings inward from `outer_radius` at fixed `pitch`.
  static PlanarCoil from_outer_radius(double outer_radius, int count, double pitch, WireSpec wire,
                                      std::string label = {}) {
    if (count < 1) throw GeometryError("winding count must be at least 1");
    if (!(pitch > 0.0)) throw GeometryError("winding pitch must be positive");
    std::vector<double> radii;
    radii.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) radii.push_back(outer_radius - pitch * i);
    return PlanarCoil(std::move(radii), wire, std::move(label));
  }

  std::span<const double> winding_radii() const { return radii_; }
  const WireSpec& wire() const { return wire_; }
  const std::string& label() const { return label_; }
  std::size_t windings() const { return radii_.size(); }

 private:
  std::vector<double> radii_;
  WireSpec wire_;
  std::string label_;
};

/// Internal-inductance correction Y in (0, 1]: 1 for uniform current, towards 0
/// when the current crowds onto the conductor surface.
inline double skin_factor(const WireSpec& wire, const OperatingPoint& op) {
  wire.validate();
  op.validate();
  const double x = wire.radius_a * std::sqrt(wire.permeability() * wire.conductivity_sigma * op.omega() / 8.0);
  return 1.0 / (1.0 + x);
}

/// Self-inductance of one circular filament loop of radius r.
inline double winding_self_inductance(double r, const WireSpec& wire, const OperatingPoint& op) {
  if (!(r > wire.radius_a)) {
    throw GeometryError("winding radius must exceed the wire radius");
  }
  const double y = skin_factor(wire, op);
  return wire.permeability() * r * (std::log(8.0 * r / wire.radius_a) - 2.0 + 0.25 * y);
}

/// Mutual inductance of two coaxial circular filaments with radii r_i, r_j and
/// axial separation d (free space).
inline double coaxial_mutual_inductance(double r_i, double r_j, double d) {
  if (!(r_i > 0.0) || !(r_j > 0.0)) throw GeometryError("filament radii must be positive");
  if (!(d >= 0.0)) throw GeometryError("axial separation must be non-negative");
  const double sum = r_i + r_j;
  const double denom = sum * sum + d * d;
  const double diff = r_i - r_j;
  if (diff == 0.0 && d == 0.0) {
    throw SingularityError("coincident filaments: mutual inductance diverges");
  }
  const double s = std::sqrt(4.0 * r_i * r_j / denom);
  const double scale = kMu0 * std::sqrt(r_i * r_j);
  if (s < 0.5) {
    // Hypergeometric series 2F1(3/2, 3/2; 3; s^2); the closed form cancels catastrophically here.
    const double x = s * s;
    double term = 1.0, series = 1.0;
    for (int n = 0; n < 200 && term > 1e-17 * series; ++n) {
      term *= (1.5 + n) * (1.5 + n) / ((3.0 + n) * (1.0 + n)) * x;
      series += term;
    }
    return scale * kPi * s * s * s / 16.0 * series;
  }
  if (!(s < 1.0)) {
    throw SingularityError("filaments too close: elliptic modulus reached 1");
  }
  const double k = numerics::elliptic_k(s);
  const double e = numerics::elliptic_e(s);
  return scale * ((2.0 / s - s) * k - (2.0 / s) * e);
}

/// Sum of winding self-inductances plus all ordered coplanar mutual pairs.
inline double coil_self_inductance(std::span<const double> radii, const WireSpec& wire,
                                   const OperatingPoint& op) {
  double total = 0.0;
  for (double r : radii) total += winding_self_inductance(r, wire, op);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t j = i + 1; j < radii.size(); ++j) {
      total += 2.0 * coaxial_mutual_inductance(radii[i], radii[j], 0.0);
    }
  }
  return total;
}

inline double coil_self_inductance(const PlanarCoil& coil, const OperatingPoint& op) {
  return coil_self_inductance(coil.winding_radii(), coil.wire(), op);
}

/// Mutual inductance between two coaxial coils with plane separation d.
inline double coaxial_coil_mutual_inductance(const PlanarCoil& a, const PlanarCoil& b, double d) {
  double total = 0.0;
  for (double ri : a.winding_radii()) {
    for (double rj : b.winding_radii()) total += coaxial_mutual_inductance(ri, rj, d);
  }
  return total;
}

/// Apparent inductance L(1 - k^2) of a coil coupled with factor k.
inline double effective_inductance(double l_isolated, double k) {
  if (!(l_isolated > 0.0)) throw DomainError("inductance must be positive");
  if (!(k >= 0.0) || !(k < 1.0)) throw DomainError("coupling factor must lie in [0, 1)");
  return l_isolated * (1.0 - k * k);
}

}  // namespace uavwpt::coil
