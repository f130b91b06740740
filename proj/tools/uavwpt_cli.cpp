// uavwpt command-line front end. Tabular results go to stdout as CSV (or JSON
// with --json); diagnostics go to stderr.
//
// Exit codes: 0 success, 1 domain/physics error, 2 usage error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uavwpt/sustainability/scenario_json.hpp"
#include "uavwpt/uavwpt.hpp"

namespace {

using namespace uavwpt;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void emit(const Table& t, bool as_json, std::ostream& os) {
  if (as_json) {
    json doc;
    doc["columns"] = t.columns;
    doc["rows"] = json::array();
    for (const auto& row : t.rows) {
      json r = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit([&](const auto& v) { r[t.columns[i]] = v; }, row[i]);
      }
      doc["rows"].push_back(r);
    }
    os << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::string> cells(t.columns);
  io::write_csv_row(os, cells);
  for (const auto& row : t.rows) {
    cells.clear();
    for (const auto& c : row) {
      if (const auto* d = std::get_if<double>(&c)) cells.push_back(io::format_double(*d));
      else cells.push_back(std::get<std::string>(c));
    }
    io::write_csv_row(os, cells);
  }
}

// ---- config file -----------------------------------------------------------

struct Config {
  json doc = json::object();

  const json* section(const char* name) const {
    const auto it = doc.find(name);
    return it == doc.end() ? nullptr : &*it;
  }
};

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  try {
    cfg.doc = json::parse(io::read_file(path));
  } catch (const json::exception& e) {
    throw FormatError("config " + path + ": " + e.what());
  }
  if (!cfg.doc.is_object()) throw FormatError("config " + path + ": top level must be an object");
  return cfg;
}

coil::WireSpec wire_from_json(const json& j) {
  coil::WireSpec w = coil::calibrated_wire();
  if (j.contains("wire_radius_mm")) w.radius_a = units::mm(j.at("wire_radius_mm").get<double>());
  if (j.contains("conductivity_S_per_m")) w.conductivity_sigma = j.at("conductivity_S_per_m").get<double>();
  if (j.contains("relative_permeability")) w.relative_permeability_mur = j.at("relative_permeability").get<double>();
  return w;
}

coil::PlanarCoil coil_from_json(const std::string& name, const json& j) {
  try {
    const auto wire = wire_from_json(j);
    if (j.contains("radii_mm")) {
      std::vector<double> radii;
      for (double r : j.at("radii_mm").get<std::vector<double>>()) radii.push_back(units::mm(r));
      return coil::PlanarCoil(radii, wire, name);
    }
    return coil::PlanarCoil::from_outer_radius(units::mm(j.at("outer_radius_mm").get<double>()),
                                               j.at("windings").get<int>(),
                                               units::mm(j.value("pitch_mm", 2.0)), wire, name);
  } catch (const json::exception& e) {
    throw FormatError("coil '" + name + "': " + e.what());
  }
}

coil::PlanarCoil find_coil(const Config& cfg, const std::string& name) {
  if (const json* coils = cfg.section("coils"); coils && coils->contains(name)) {
    return coil_from_json(name, coils->at(name));
  }
  if (auto c = coil::preset_coil(name)) return *c;
  std::string known;
  for (const auto& n : coil::preset_coil_names()) known += " " + n;
  throw UsageError("unknown coil '" + name + "'; presets:" + known);
}

std::vector<sustainability::ServicingScenario> config_scenarios(const Config& cfg) {
  const json* s = cfg.section("scenarios");
  if (!s) return {};
  return sustainability::scenarios_from_json(*s);
}

sustainability::ServicingScenario find_scenario(const Config& cfg, const std::string& name) {
  for (auto& sc : config_scenarios(cfg)) {
    if (sc.label == name) return sc;
  }
  if (auto sc = sustainability::preset_scenario(name)) return *sc;
  std::string known;
  for (const auto& sc : sustainability::preset_scenarios()) known += " " + sc.label;
  throw UsageError("unknown scenario '" + name + "'; presets:" + known);
}

// ---- circuit parameters ----------------------------------------------------

// Reference circuit: 84 ohm / 143 ohm coil reactances at 6.78 MHz,
// 0.1 ohm and 1 ohm coil ESR, ideal source.
struct CircuitArgs {
  std::string name;
  double l1_uh = link::inductance_from_reactance(84.0, 6.78e6) * 1e6;
  double l2_uh = link::inductance_from_reactance(143.0, 6.78e6) * 1e6;
  double r1_ohm = 0.1;
  double r2_ohm = 1.0;
  double rs_ohm = 0.0;
  double rl_ohm = 1.0;
  double k = 0.042;
  double freq_mhz = 6.78;
};

void add_circuit_options(CLI::App* app, CircuitArgs& a) {
  app->add_option("--circuit", a.name, "Named circuit from the config file");
  app->add_option("--l1-uh", a.l1_uh, "Transmit coil inductance [uH]");
  app->add_option("--l2-uh", a.l2_uh, "Receive coil inductance [uH]");
  app->add_option("--r1-ohm", a.r1_ohm, "Transmit ESR [ohm]");
  app->add_option("--r2-ohm", a.r2_ohm, "Receive ESR [ohm]");
  app->add_option("--rs-ohm", a.rs_ohm, "Source resistance [ohm]");
  app->add_option("--rl-ohm", a.rl_ohm, "Load resistance [ohm]");
  app->add_option("--k", a.k, "Coupling factor");
  app->add_option("--freq-mhz", a.freq_mhz, "Operating frequency [MHz]");
}

// Config values fill every option the user did not pass explicitly.
CircuitArgs resolve_circuit(const Config& cfg, const CLI::App* app, CircuitArgs a) {
  if (a.name.empty()) return a;
  const json* circuits = cfg.section("circuits");
  if (!circuits || !circuits->contains(a.name)) throw UsageError("unknown circuit '" + a.name + "'");
  const json& j = circuits->at(a.name);
  const std::pair<const char*, double*> fields[] = {
      {"l1_uh", &a.l1_uh}, {"l2_uh", &a.l2_uh}, {"r1_ohm", &a.r1_ohm}, {"r2_ohm", &a.r2_ohm},
      {"rs_ohm", &a.rs_ohm}, {"rl_ohm", &a.rl_ohm}, {"k", &a.k}, {"freq_mhz", &a.freq_mhz},
  };
  for (const auto& [key, dst] : fields) {
    std::string flag = std::string("--") + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (app->count(flag) == 0 && j.contains(key)) *dst = j.at(key).get<double>();
  }
  return a;
}

link::LinkCircuit build_link(const CircuitArgs& a) {
  return link::make_tuned_link(units::uH(a.l1_uh), a.r1_ohm, units::uH(a.l2_uh), a.r2_ohm, a.rs_ohm, a.k, a.rl_ohm,
                               units::MHz(a.freq_mhz));
}

// ---- subcommands -----------------------------------------------------------

struct CouplingArgs {
  std::string tx = "default-uav";
  std::string rx = "d100w4";
  std::vector<double> dz_mm;
  std::vector<double> dx_mm;
  std::vector<double> tilt_deg;
  double freq_mhz = 6.78;
  int segments = 720;
};

Table run_coupling(const Config& cfg, const CouplingArgs& a) {
  const auto tx = find_coil(cfg, a.tx);
  const auto rx = find_coil(cfg, a.rx);
  const coil::OperatingPoint op{units::MHz(a.freq_mhz)};
  if (!a.dx_mm.empty() && !a.tilt_deg.empty()) throw UsageError("--dx-mm and --tilt-deg are mutually exclusive");
  std::vector<double> dz;
  for (double d : a.dz_mm) dz.push_back(units::mm(d));

  Table t;
  if (a.dx_mm.empty() && a.tilt_deg.empty()) {
    t.columns = {"dz_mm", "k", "l2_effective_uH", "l2_isolated_uH"};
    for (const auto& p : coupling::coupling_vs_distance(tx, rx, dz, op)) {
      t.rows.push_back({units::to_mm(p.dz), p.k, units::to_uH(p.l2_effective), units::to_uH(p.l2_isolated)});
    }
    return t;
  }
  const bool lateral = !a.dx_mm.empty();
  std::vector<double> offsets;
  for (double o : lateral ? a.dx_mm : a.tilt_deg) offsets.push_back(lateral ? units::mm(o) : o);
  const auto kind = lateral ? coupling::OffsetKind::Lateral : coupling::OffsetKind::Tilt;
  const auto grid = coupling::misalignment_grid(tx, rx, dz, offsets, kind, coupling::LoopDiscretization{a.segments}, op);
  t.columns = {"dz_mm", coupling::to_string(kind), "k"};
  for (std::size_t i = 0; i < grid.dz.size(); ++i) {
    for (std::size_t j = 0; j < grid.offsets.size(); ++j) {
      const double off = lateral ? units::to_mm(grid.offsets[j]) : grid.offsets[j];
      t.rows.push_back({units::to_mm(grid.dz[i]), off, grid.k[i][j]});
    }
  }
  return t;
}

Table run_inductance(const Config& cfg, const std::vector<std::string>& names, double freq_mhz) {
  Table t{{"coil", "windings", "L_uH"}, {}};
  const coil::OperatingPoint op{units::MHz(freq_mhz)};
  for (const auto& n : names) {
    const auto c = find_coil(cfg, n);
    t.rows.push_back({c.label(), static_cast<double>(c.windings()), units::to_uH(coil::coil_self_inductance(c, op))});
  }
  return t;
}

struct TuneArgs {
  std::optional<double> l_uh;
  std::optional<double> x_ohm;
  std::string coil;
  double freq_mhz = 6.78;
  bool e12 = false;
};

Table run_tune(const Config& cfg, const TuneArgs& a) {
  const int given = a.l_uh.has_value() + a.x_ohm.has_value() + !a.coil.empty();
  if (given != 1) throw UsageError("tune: give exactly one of --l-uh, --x-ohm, --coil");
  const double f = units::MHz(a.freq_mhz);
  double l = 0.0;
  if (a.l_uh) l = units::uH(*a.l_uh);
  else if (a.x_ohm) l = link::inductance_from_reactance(*a.x_ohm, f);
  else l = coil::coil_self_inductance(find_coil(cfg, a.coil), coil::OperatingPoint{f});
  const double c = link::resonant_capacitor(l, f);
  Table t;
  if (!a.e12) {
    t.columns = {"L_uH", "C_pF"};
    t.rows.push_back({units::to_uH(l), units::to_pF(c)});
    return t;
  }
  const double snapped = link::snap_to_e12(c);
  t.columns = {"L_uH", "C_pF", "C_e12_pF", "f0_e12_MHz"};
  t.rows.push_back({units::to_uH(l), units::to_pF(c), units::to_pF(snapped), link::resonance_frequency(l, snapped) * 1e-6});
  return t;
}

Table run_link_eval(const link::LinkCircuit& lk, double vs) {
  const auto sol = link::solve_link(lk, vs);
  const auto q = link::quality_factors(lk);
  const auto loss = link::dissipated_powers(lk, sol);
  return {{"efficiency_closed_form", "efficiency_mesh", "PS_W", "PL_W", "P_RS_W", "P_R1_W", "P_R2_W", "Q_T", "Q_R"},
          {{link::link_efficiency(lk), sol.efficiency, sol.input_power_PS, sol.load_power_PL, loss[0], loss[1],
            loss[2], q.q_t, q.q_r}}};
}

Table run_link_optimal(const link::LinkCircuit& lk) {
  const double rl = link::optimal_load(lk);
  return {{"k", "RL_opt_ohm", "efficiency_max"}, {{lk.coupling_k, rl, link::link_efficiency(link::with_load(lk, rl))}}};
}

Table run_link_voltage(const link::LinkCircuit& lk, double pl) {
  const double vs = link::required_source_voltage(lk, pl);
  const auto sol = link::solve_link(lk, vs);
  return {{"PL_target_W", "VS_rms_V", "PS_W", "efficiency"}, {{pl, vs, sol.input_power_PS, sol.efficiency}}};
}

Table run_link_detuning(const link::LinkCircuit& lk) {
  const auto r = link::detuning_report(lk);
  return {{"k", "f0_tx_effective_MHz", "f0_rx_effective_MHz", "relative_shift", "efficiency_tuned",
           "efficiency_detuned", "efficiency_penalty"},
          {{lk.coupling_k, r.effective_f0_tx * 1e-6, r.effective_f0_rx * 1e-6, r.relative_shift, r.efficiency_tuned,
            r.efficiency_detuned, r.efficiency_penalty}}};
}

struct MapArgs {
  std::string tx = "default-uav";
  std::string rx = "d100w4";
  double dz_mm = 100.0;
  std::vector<double> dx_mm{0.0};
  std::vector<double> dy_mm{0.0};
  int segments = 720;
};

Table run_link_map(const Config& cfg, const MapArgs& m, const CircuitArgs& c) {
  std::vector<double> dx, dy;
  for (double v : m.dx_mm) dx.push_back(units::mm(v));
  for (double v : m.dy_mm) dy.push_back(units::mm(v));
  const link::CircuitEsr esr{c.r1_ohm, c.r2_ohm, c.rs_ohm};
  const auto cells = link::max_efficiency_map(find_coil(cfg, m.tx), find_coil(cfg, m.rx), units::mm(m.dz_mm), dx, dy,
                                              esr, coil::OperatingPoint{units::MHz(c.freq_mhz)},
                                              coupling::LoopDiscretization{m.segments});
  Table t{{"dx_mm", "dy_mm", "k", "RL_opt_ohm", "efficiency_max"}, {}};
  for (const auto& cell : cells) {
    t.rows.push_back({units::to_mm(cell.dx), units::to_mm(cell.dy), cell.k, cell.optimal_load, cell.max_efficiency});
  }
  return t;
}

struct IngestArgs {
  std::vector<std::string> files;
  std::vector<double> dz_mm;
  double freq_mhz = 6.78;
  std::string compare_tx;
  std::string compare_rx = "d100w4";
};

const io::TwoPortSample& nearest_sample(const std::vector<io::TwoPortSample>& s, double f) {
  if (s.empty()) throw FormatError("file contains no data rows");
  return *std::min_element(s.begin(), s.end(), [f](const auto& a, const auto& b) {
    return std::abs(a.frequency - f) < std::abs(b.frequency - f);
  });
}

Table run_ingest(const Config& cfg, const IngestArgs& a) {
  if (!a.dz_mm.empty() && a.dz_mm.size() != a.files.size()) {
    throw UsageError("ingest: --dz-mm must be given once per file");
  }
  if (!a.compare_tx.empty() && a.dz_mm.empty()) throw UsageError("ingest: --compare-tx needs --dz-mm");
  Table t{{"file", "dz_mm", "frequency_Hz", "k", "L1_uH", "L2_uH", "M_nH", "reciprocity_deviation"}, {}};
  io::CouplingSeries measured;
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    const auto samples = io::parse_touchstone(io::read_file(a.files[i]));
    const auto& s = nearest_sample(samples, units::MHz(a.freq_mhz));
    const auto z = io::s_to_z(s);
    if (z.reciprocity_suspect()) {
      std::cerr << "warning: " << a.files[i] << ": z12 and z21 differ by "
                << io::format_double(z.reciprocity_deviation()) << " (relative)\n";
    }
    const auto ex = io::coupling_from_z(z, s.frequency);
    const double dz = a.dz_mm.empty() ? std::nan("") : a.dz_mm[i];
    t.rows.push_back({a.files[i], dz, s.frequency, ex.k, units::to_uH(ex.l1), units::to_uH(ex.l2), units::to_nH(ex.m),
                      z.reciprocity_deviation()});
    measured.emplace_back(dz, ex.k);
  }
  if (a.compare_tx.empty()) return t;

  const auto tx = find_coil(cfg, a.compare_tx);
  const auto rx = find_coil(cfg, a.compare_rx);
  std::vector<double> dz;
  for (double d : a.dz_mm) dz.push_back(units::mm(d));
  io::CouplingSeries analytic;
  for (const auto& p : coupling::coupling_vs_distance(tx, rx, dz, coil::OperatingPoint{units::MHz(a.freq_mhz)})) {
    analytic.emplace_back(units::to_mm(p.dz), p.k);
  }
  Table cmp{{"dz_mm", "k_analytic", "k_measured", "abs_dev", "rel_dev"}, {}};
  for (const auto& r : io::compare_report(analytic, measured)) {
    cmp.rows.push_back({r.dz_mm, r.k_analytic, r.k_measured, r.abs_dev, r.rel_dev});
  }
  return cmp;
}

struct MissionArgs {
  std::optional<double> hover_w;
  double dz_mm = 50.0;
  double rate_c = 1.0;
  double capacity_mah = 60.0;
  double voltage_v = 2.4;
  double leakage_ua = 1.5;
};

Table run_mission(const MissionArgs& a) {
  if (!a.hover_w) throw UsageError("mission: --hover-w is required (UAV hover power is user-supplied)");
  mission::BatteryCell cell = mission::lto_60mAh();
  cell.capacity_mAh = a.capacity_mah;
  cell.nominal_voltage = a.voltage_v;
  const auto b = mission::mission_energy(cell, a.dz_mm, *a.hover_w, a.rate_c);
  const auto life = mission::autonomy_from_leakage(cell, a.leakage_ua);
  const auto sys = mission::system_efficiency(a.dz_mm);
  const double charge_min = mission::charge_time_minutes(cell, a.rate_c);
  return {{"dz_mm", "hover_power_W_user_supplied", "system_efficiency", "charge_time_min", "energy_transferred_Wh",
           "hover_energy_Wh", "energy_drawn_from_uav_Wh", "autonomy_years"},
          {{a.dz_mm, *a.hover_w, sys.efficiency, charge_min, b.energy_transferred, b.hover_energy, b.energy_drawn_from_uav,
            life.unbounded ? std::numeric_limits<double>::infinity() : life.years}}};
}

Table run_gwp_inventory(const std::string& level) {
  sustainability::GwpInventory inv;
  if (level == "low") inv = sustainability::low_power_inventory();
  else if (level == "medium") inv = sustainability::medium_power_inventory();
  else throw UsageError("gwp inventory: --level must be low or medium");
  Table t{{"component", "gwp_kgCO2eq"}, {}};
  for (const auto& [name, v] : inv.components()) t.rows.push_back({name, v});
  t.rows.push_back({std::string("total"), sustainability::inventory_total(inv)});
  return t;
}

Table run_gwp_curves(const Config& cfg, std::vector<std::string> names, double horizon, double step) {
  std::vector<sustainability::ServicingScenario> scenarios;
  if (names.empty()) names = {"uav-low", "battery-low", "replace-annual", "replace-5yr"};
  for (const auto& n : names) scenarios.push_back(find_scenario(cfg, n));
  const auto table = sustainability::scenario_table(scenarios, horizon, step);
  Table t;
  t.columns.push_back("t_years");
  for (const auto& l : table.labels) t.columns.push_back(l);
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    std::vector<Cell> row{table.t[i]};
    for (double v : table.values[i]) row.emplace_back(v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table run_gwp_breakeven(const Config& cfg, const std::string& a, const std::string& b, double horizon) {
  const auto r = sustainability::breakeven(find_scenario(cfg, a), find_scenario(cfg, b), horizon);
  if (!r.crosses()) std::cerr << "note: " << a << " does not cross " << b << " within " << horizon << " years\n";
  return {{"a", "b", "breakeven_years"},
          {{a, b, r.crosses() ? *r.years : std::numeric_limits<double>::quiet_NaN()}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wireless power link, mission and GWP calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string config_path;
  app.add_flag("--json", as_json, "Emit a JSON document instead of CSV");
  app.add_option("--config", config_path, "JSON file with coils, circuits and scenarios sections");

  CouplingArgs coupling_args;
  auto* coupling_cmd = app.add_subcommand("coupling", "Coupling factor vs distance or misalignment");
  coupling_cmd->add_option("--tx", coupling_args.tx, "Transmit coil name");
  coupling_cmd->add_option("--rx", coupling_args.rx, "Receive coil name");
  coupling_cmd->add_option("--dz-mm", coupling_args.dz_mm, "Coil-to-coil distances [mm]")->required();
  coupling_cmd->add_option("--dx-mm", coupling_args.dx_mm, "Lateral offsets [mm]");
  coupling_cmd->add_option("--tilt-deg", coupling_args.tilt_deg, "Receiver tilt angles [deg]");
  coupling_cmd->add_option("--freq-mhz", coupling_args.freq_mhz, "Frequency [MHz]");
  coupling_cmd->add_option("--segments", coupling_args.segments, "Segments per turn for misalignment");

  std::vector<std::string> inductance_coils;
  double inductance_freq = 6.78;
  auto* inductance_cmd = app.add_subcommand("inductance", "Coil self-inductance");
  inductance_cmd->add_option("--coil", inductance_coils, "Coil names")->required();
  inductance_cmd->add_option("--freq-mhz", inductance_freq, "Frequency [MHz]");

  TuneArgs tune_args;
  auto* tune_cmd = app.add_subcommand("tune", "Series resonant capacitor");
  tune_cmd->add_option("--l-uh", tune_args.l_uh, "Inductance [uH]");
  tune_cmd->add_option("--x-ohm", tune_args.x_ohm, "Coil reactance at the frequency [ohm]");
  tune_cmd->add_option("--coil", tune_args.coil, "Coil name");
  tune_cmd->add_option("--freq-mhz", tune_args.freq_mhz, "Resonance frequency [MHz]");
  tune_cmd->add_flag("--e12", tune_args.e12, "Also snap to the nearest E12 value");

  auto* link_cmd = app.add_subcommand("link", "Two-coil resonant link");
  link_cmd->require_subcommand(1);
  CircuitArgs circuit;
  double vs = 1.0;
  double pl = 1.0;
  MapArgs map_args;
  auto* eval_cmd = link_cmd->add_subcommand("eval", "Efficiency and powers at a source voltage");
  add_circuit_options(eval_cmd, circuit);
  eval_cmd->add_option("--vs-v", vs, "RMS source voltage [V]");
  auto* optimal_cmd = link_cmd->add_subcommand("optimal", "Optimal load and peak efficiency");
  add_circuit_options(optimal_cmd, circuit);
  auto* voltage_cmd = link_cmd->add_subcommand("voltage", "Source voltage for a target load power");
  add_circuit_options(voltage_cmd, circuit);
  voltage_cmd->add_option("--pl-w", pl, "Target load power [W]")->required();
  auto* detuning_cmd = link_cmd->add_subcommand("detuning", "Coupling-induced detuning");
  add_circuit_options(detuning_cmd, circuit);
  auto* map_cmd = link_cmd->add_subcommand("map", "Peak efficiency over lateral offsets");
  add_circuit_options(map_cmd, circuit);
  map_cmd->add_option("--tx", map_args.tx, "Transmit coil name");
  map_cmd->add_option("--rx", map_args.rx, "Receive coil name");
  map_cmd->add_option("--dz-mm", map_args.dz_mm, "Coil-to-coil distance [mm]");
  map_cmd->add_option("--dx-mm", map_args.dx_mm, "Lateral x offsets [mm]");
  map_cmd->add_option("--dy-mm", map_args.dy_mm, "Lateral y offsets [mm]");
  map_cmd->add_option("--segments", map_args.segments, "Segments per turn");

  IngestArgs ingest_args;
  auto* ingest_cmd = app.add_subcommand("ingest", "Coupling factor from Touchstone .s2p files");
  ingest_cmd->add_option("files", ingest_args.files, "Touchstone v1 two-port files")->required();
  ingest_cmd->add_option("--dz-mm", ingest_args.dz_mm, "Distance of each file [mm]");
  ingest_cmd->add_option("--freq-mhz", ingest_args.freq_mhz, "Evaluate at the sample nearest this frequency [MHz]");
  ingest_cmd->add_option("--compare-tx", ingest_args.compare_tx, "Compare against analytic k with this transmit coil");
  ingest_cmd->add_option("--compare-rx", ingest_args.compare_rx, "Receive coil for the comparison");

  MissionArgs mission_args;
  auto* mission_cmd = app.add_subcommand("mission", "Charging energy budget");
  mission_cmd->add_option("--hover-w", mission_args.hover_w, "UAV hover power while charging [W] (user-supplied)");
  mission_cmd->add_option("--dz-mm", mission_args.dz_mm, "Coil-to-coil distance [mm], 50..100");
  mission_cmd->add_option("--rate-c", mission_args.rate_c, "Charge rate [C]");
  mission_cmd->add_option("--capacity-mah", mission_args.capacity_mah, "Cell capacity [mAh]");
  mission_cmd->add_option("--voltage-v", mission_args.voltage_v, "Cell nominal voltage [V]");
  mission_cmd->add_option("--leakage-ua", mission_args.leakage_ua, "Node sleep current [uA]");

  auto* gwp_cmd = app.add_subcommand("gwp", "Global warming potential comparisons");
  gwp_cmd->require_subcommand(1);
  std::string level = "low";
  auto* inventory_cmd = gwp_cmd->add_subcommand("inventory", "Component GWP inventory");
  inventory_cmd->add_option("--level", level, "low or medium power node");
  std::vector<std::string> curve_names;
  double horizon = 15.0;
  double step = 1.0;
  auto* curves_cmd = gwp_cmd->add_subcommand("curves", "Cumulative GWP per scenario");
  curves_cmd->add_option("--scenario", curve_names, "Scenario names");
  curves_cmd->add_option("--horizon-yr", horizon, "Horizon [yr]");
  curves_cmd->add_option("--step-yr", step, "Step [yr]");
  std::string scenario_a, scenario_b;
  auto* breakeven_cmd = gwp_cmd->add_subcommand("breakeven", "Time at which scenario a drops below b");
  breakeven_cmd->add_option("--a", scenario_a, "Scenario that starts higher")->required();
  breakeven_cmd->add_option("--b", scenario_b, "Scenario that starts lower")->required();
  breakeven_cmd->add_option("--horizon-yr", horizon, "Search horizon [yr]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Config cfg = load_config(config_path);
    Table out;
    if (*coupling_cmd) {
      out = run_coupling(cfg, coupling_args);
    } else if (*inductance_cmd) {
      out = run_inductance(cfg, inductance_coils, inductance_freq);
    } else if (*tune_cmd) {
      out = run_tune(cfg, tune_args);
    } else if (*link_cmd) {
      const CLI::App* sub = link_cmd->get_subcommands().front();
      const CircuitArgs c = resolve_circuit(cfg, sub, circuit);
      if (sub == map_cmd) out = run_link_map(cfg, map_args, c);
      else if (sub == eval_cmd) out = run_link_eval(build_link(c), vs);
      else if (sub == optimal_cmd) out = run_link_optimal(build_link(c));
      else if (sub == voltage_cmd) out = run_link_voltage(build_link(c), pl);
      else out = run_link_detuning(build_link(c));
    } else if (*ingest_cmd) {
      out = run_ingest(cfg, ingest_args);
    } else if (*mission_cmd) {
      out = run_mission(mission_args);
    } else if (*inventory_cmd) {
      out = run_gwp_inventory(level);
    } else if (*curves_cmd) {
      out = run_gwp_curves(cfg, curve_names, horizon, step);
    } else if (*breakeven_cmd) {
      out = run_gwp_breakeven(cfg, scenario_a, scenario_b, horizon);
    }
    emit(out, as_json, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
