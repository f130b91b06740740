#pragma once

#include <numbers>

namespace uavwpt {

inline constexpr double kPi = std::numbers::pi;
/// Vacuum permeability [H/m], classical value 4*pi*1e-7.
inline constexpr double kMu0 = 4.0e-7 * std::numbers::pi;
inline constexpr double kCopperConductivity = 5.8e7;  // S/m
inline constexpr double kHoursPerYear = 8766.0;       // 365.25 d

inline constexpr double angular_frequency(double frequency_hz) { return 2.0 * kPi * frequency_hz; }

namespace units {
inline constexpr double mm(double v) { return v * 1e-3; }
inline constexpr double to_mm(double m) { return m * 1e3; }
inline constexpr double uH(double v) { return v * 1e-6; }
inline constexpr double to_uH(double h) { return h * 1e6; }
inline constexpr double nH(double v) { return v * 1e-9; }
inline constexpr double to_nH(double h) { return h * 1e9; }
inline constexpr double pF(double v) { return v * 1e-12; }
inline constexpr double to_pF(double f) { return f * 1e12; }
inline constexpr double MHz(double v) { return v * 1e6; }
inline constexpr double kHz(double v) { return v * 1e3; }
inline constexpr double deg_to_rad(double d) { return d * kPi / 180.0; }
}  // namespace units

}  // namespace uavwpt
