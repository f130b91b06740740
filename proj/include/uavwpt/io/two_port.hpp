#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "uavwpt/error.hpp"
#include "uavwpt/io/touchstone.hpp"
#include "uavwpt/units.hpp"

namespace uavwpt::io {

struct ImpedanceMatrix {
  Complex z11, z12, z21, z22;

  /// |z12 - z21| relative to the larger transfer impedance; 0 for a reciprocal network.
  double reciprocity_deviation() const {
    const double scale = std::max(std::abs(z12), std::abs(z21));
    return scale > 0.0 ? std::abs(z12 - z21) / scale : 0.0;
  }
  bool reciprocity_suspect() const { return reciprocity_deviation() > kReciprocityTolerance; }

  static constexpr double kReciprocityTolerance = 0.01;
};

namespace detail {

struct Mat2 {
  Complex a, b, c, d;  // [[a, b], [c, d]]
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 inverse(const Mat2& m, const char* what) {
  const Complex det = m.a * m.d - m.b * m.c;
  const double scale = std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  if (!(std::abs(det) > 1e-12 * scale * scale)) throw ConversionError(what);
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

}  // namespace detail

/// Z = z0 (I + S)(I - S)^-1.
inline ImpedanceMatrix s_to_z(const TwoPortSample& sample) {
  if (!(sample.z0 > 0.0)) throw DomainError("reference impedance must be positive");
  const detail::Mat2 plus{1.0 + sample.s11, sample.s12, sample.s21, 1.0 + sample.s22};
  const detail::Mat2 minus{1.0 - sample.s11, -sample.s12, -sample.s21, 1.0 - sample.s22};
  const auto z = detail::mul(plus, detail::inverse(minus, "s_to_z: (I - S) is singular"));
  return {sample.z0 * z.a, sample.z0 * z.b, sample.z0 * z.c, sample.z0 * z.d};
}

/// S = (Z - z0 I)(Z + z0 I)^-1.
inline TwoPortSample z_to_s(const ImpedanceMatrix& zm, double frequency, double z0 = 50.0) {
  if (!(z0 > 0.0)) throw DomainError("reference impedance must be positive");
  const detail::Mat2 minus{zm.z11 - z0, zm.z12, zm.z21, zm.z22 - z0};
  const detail::Mat2 plus{zm.z11 + z0, zm.z12, zm.z21, zm.z22 + z0};
  const auto s = detail::mul(minus, detail::inverse(plus, "z_to_s: (Z + z0 I) is singular"));
  return {frequency, s.a, s.b, s.c, s.d, z0};
}

/// Impedance matrix of two coupled coils with series resistances.
inline ImpedanceMatrix coupled_coils_z(double l1, double r1, double l2, double r2, double m, double frequency) {
  const double w = angular_frequency(frequency);
  return {{r1, w * l1}, {0.0, w * m}, {0.0, w * m}, {r2, w * l2}};
}

struct CouplingExtraction {
  double k;
  double l1;  // H
  double l2;  // H
  double m;   // H
};

/// Two-port method: L1, L2, M from Im(z11), Im(z22), Im(z12) divided by w.
inline CouplingExtraction coupling_from_z(const ImpedanceMatrix& zm, double frequency) {
  if (!(frequency > 0.0)) throw DomainError("frequency must be positive");
  const double x11 = zm.z11.imag();
  const double x22 = zm.z22.imag();
  const double x12 = zm.z12.imag();
  if (!(x11 > 0.0) || !(x22 > 0.0)) {
    throw ExtractionError("port is not inductive at this frequency (Im(z11) or Im(z22) <= 0)");
  }
  const double k = x12 / std::sqrt(x11 * x22);
  if (!(std::abs(k) < 1.0)) throw ExtractionError("extracted |k| >= 1");
  const double w = angular_frequency(frequency);
  return {k, x11 / w, x22 / w, x12 / w};
}

}  // namespace uavwpt::io
