// Writes synthetic two-port fixtures built from the published measured
// coupling factors. Usage: make_fixtures <output-dir>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "uavwpt/io/touchstone.hpp"
#include "uavwpt/io/two_port.hpp"
#include "uavwpt/link/link.hpp"

namespace {

using namespace uavwpt;

struct Fixture {
  std::string name;
  const char* setting;
  double dz_mm;
  double k;
  io::DataFormat format;
};

std::vector<io::TwoPortSample> synthesize(double k) {
  const double f0 = 6.78e6;
  const double l1 = link::inductance_from_reactance(84.0, f0);
  const double l2 = link::inductance_from_reactance(143.0, f0);
  const double m = k * std::sqrt(l1 * l2);
  std::vector<io::TwoPortSample> out;
  for (int i = -4; i <= 4; ++i) {
    const double f = f0 + i * 0.05e6;
    out.push_back(io::z_to_s(io::coupled_coils_z(l1, 0.1, l2, 1.0, m, f), f, 50.0));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  const std::vector<Fixture> fixtures = {
      {"openair_dz50.s2p", "open air", 50, 0.107, io::DataFormat::RI},
      {"openair_dz100.s2p", "open air", 100, 0.042, io::DataFormat::RI},
      {"openair_dz150.s2p", "open air", 150, 0.018, io::DataFormat::RI},
      {"openair_dz200.s2p", "open air", 200, 0.010, io::DataFormat::RI},
      {"onuav_dz50.s2p", "on UAV", 50, 0.113, io::DataFormat::MA},
      {"onuav_dz100.s2p", "on UAV", 100, 0.044, io::DataFormat::MA},
      {"onuav_dz150.s2p", "on UAV", 150, 0.018, io::DataFormat::MA},
      {"onuav_dz200.s2p", "on UAV", 200, 0.011, io::DataFormat::DB},
  };
  for (const auto& fx : fixtures) {
    const std::vector<std::string> comments = {
        "synthesized fixture, not a VNA capture",
        "coupled coils: X1 = 84 ohm, X2 = 143 ohm at 6.78 MHz, R1 = 0.1 ohm, R2 = 1 ohm",
        std::string("setting: ") + fx.setting + ", dz_mm = " + io::format_double(fx.dz_mm) +
            ", k = " + io::format_double(fx.k),
    };
    std::ofstream os(dir + "/" + fx.name, std::ios::binary);
    os << io::write_touchstone(synthesize(fx.k), comments, fx.format);
    if (!os) {
      std::cerr << "failed to write " << fx.name << '\n';
      return 1;
    }
  }
  return 0;
}
