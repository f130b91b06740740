#pragma once

#include <array>
#include <cmath>

#include "uavwpt/error.hpp"

namespace uavwpt::link {

inline constexpr std::array<double, 12> kE12 = {1.0, 1.2, 1.5, 1.8, 2.2, 2.7, 3.3, 3.9, 4.7, 5.6, 6.8, 8.2};

/// Nearest E12 preferred value (nearest on a logarithmic scale).
inline double snap_to_e12(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError("snap_to_e12: value must be positive");
  const double decade = std::pow(10.0, std::floor(std::log10(value)));
  double best = kE12[0] * decade;
  double best_err = std::abs(std::log(value / best));
  for (int shift = 0; shift <= 1; ++shift) {
    for (double m : kE12) {
      const double candidate = m * decade * (shift == 0 ? 1.0 : 10.0);
      const double err = std::abs(std::log(value / candidate));
      if (err < best_err) {
        best = candidate;
        best_err = err;
      }
    }
  }
  return best;
}

}  // namespace uavwpt::link
