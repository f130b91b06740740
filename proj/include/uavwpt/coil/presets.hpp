#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavwpt/coil/coil.hpp"

namespace uavwpt::coil {

/// Two-turn approximation of the rectangular UAV transmit coil.
inline PlanarCoil default_uav_coil() {
  return PlanarCoil({76.5e-3, 74.5e-3}, calibrated_wire(), "default-uav");
}

/// Receive coil of outer diameter `diameter_mm` with `windings` turns at 2 mm
/// pitch; the outermost filament sits 1 mm inside the nominal outline.
inline PlanarCoil receive_coil(int diameter_mm, int windings) {
  const double outer = diameter_mm * 0.5e-3 - 1e-3;
  return PlanarCoil::from_outer_radius(
      outer, windings, 2e-3, calibrated_wire(),
      "d" + std::to_string(diameter_mm) + "w" + std::to_string(windings));
}

inline std::vector<std::string> preset_coil_names() {
  return {"default-uav", "d75w4", "d100w2", "d100w3", "d100w4", "d100w5", "d125w4", "d150w4"};
}

/// Looks up a built-in coil by name; nullopt if unknown.
inline std::optional<PlanarCoil> preset_coil(std::string_view name) {
  if (name == "default-uav") return default_uav_coil();
  if (name.size() >= 4 && name.front() == 'd') {
    const auto w = name.find('w');
    if (w == std::string_view::npos || w == 1 || w + 1 >= name.size()) return std::nullopt;
    try {
      const int diameter = std::stoi(std::string(name.substr(1, w - 1)));
      const int windings = std::stoi(std::string(name.substr(w + 1)));
      const std::string canonical = "d" + std::to_string(diameter) + "w" + std::to_string(windings);
      for (const auto& known : preset_coil_names()) {
        if (known == canonical && canonical == name) return receive_coil(diameter, windings);
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace uavwpt::coil
