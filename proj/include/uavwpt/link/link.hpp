#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "uavwpt/error.hpp"
#include "uavwpt/units.hpp"

// Series-series tuned two-coil link. Phasors are RMS; power is |I|^2 R.

namespace uavwpt::link {

using Complex = std::complex<double>;

struct TankCircuit {
  double inductance_L = 0.0;   // H
  double capacitance_C = 0.0;  // F
  double esr_R = 0.0;          // ohm

  void validate() const {
    if (!(inductance_L > 0.0) || !(capacitance_C > 0.0) || !(esr_R > 0.0)) {
      throw DomainError("tank L, C and ESR must all be positive");
    }
  }
};

struct LinkCircuit {
  double source_resistance_RS = 0.0;
  TankCircuit tx;
  TankCircuit rx;
  double coupling_k = 0.0;
  double load_RL = 1.0;
  double frequency_f = 6.78e6;

  void validate() const {
    tx.validate();
    rx.validate();
    if (!(source_resistance_RS >= 0.0)) throw DomainError("source resistance must be >= 0");
    if (!(coupling_k >= 0.0) || !(coupling_k < 1.0)) throw DomainError("coupling factor must lie in [0, 1)");
    if (!(load_RL > 0.0)) throw DomainError("load resistance must be positive");
    if (!(frequency_f > 0.0)) throw DomainError("frequency must be positive");
  }

  double omega() const { return angular_frequency(frequency_f); }
  double mutual_inductance() const { return coupling_k * std::sqrt(tx.inductance_L * rx.inductance_L); }
};

struct LinkSolution {
  Complex primary_current;
  Complex secondary_current;
  double input_power_PS = 0.0;
  double load_power_PL = 0.0;
  double efficiency = 0.0;
};

/// Series capacitor that resonates with L at f0.
inline double resonant_capacitor(double l, double f0) {
  if (!(l > 0.0) || !(f0 > 0.0)) throw DomainError("resonant_capacitor: L and f0 must be positive");
  const double w = angular_frequency(f0);
  return 1.0 / (w * w * l);
}

inline double resonance_frequency(double l, double c) {
  if (!(l > 0.0) || !(c > 0.0)) throw DomainError("resonance_frequency: L and C must be positive");
  return 1.0 / (2.0 * kPi * std::sqrt(l * c));
}

inline double resonance_frequency(const TankCircuit& t) { return resonance_frequency(t.inductance_L, t.capacitance_C); }

/// Inductance presenting reactance x_ohm at frequency f.
inline double inductance_from_reactance(double x_ohm, double f) { return x_ohm / angular_frequency(f); }

/// Link with both tanks tuned exactly to f.
inline LinkCircuit make_tuned_link(double l1, double r1, double l2, double r2, double rs, double k, double rl,
                                   double f) {
  LinkCircuit link{rs, {l1, resonant_capacitor(l1, f), r1}, {l2, resonant_capacitor(l2, f), r2}, k, rl, f};
  link.validate();
  return link;
}

struct QualityFactors {
  double q_t;  // loaded transmitter, w L1 / (RS + R1)
  double q_r;  // loaded receiver,    w L2 / (R2 + RL)
  double q_1;  // coil only
  double q_2;
};

inline QualityFactors quality_factors(const LinkCircuit& link) {
  link.validate();
  const double w = link.omega();
  const double x1 = w * link.tx.inductance_L;
  const double x2 = w * link.rx.inductance_L;
  return {x1 / (link.source_resistance_RS + link.tx.esr_R), x2 / (link.rx.esr_R + link.load_RL),
          x1 / link.tx.esr_R, x2 / link.rx.esr_R};
}

/// Closed-form efficiency P_L / P_S of a link whose tanks are resonant at the
/// operating frequency.
inline double link_efficiency(const LinkCircuit& link) {
  const auto q = quality_factors(link);
  const double kqq = link.coupling_k * link.coupling_k * q.q_t * q.q_r;
  return link.load_RL / (link.rx.esr_R + link.load_RL) * kqq / (1.0 + kqq);
}

/// Load resistance that maximises link_efficiency.
inline double optimal_load(const LinkCircuit& link) {
  const auto q = quality_factors(link);
  const double r1 = link.tx.esr_R;
  const double r2 = link.rx.esr_R;
  const double k2 = link.coupling_k * link.coupling_k;
  return std::sqrt(r2 * r2 * (1.0 + k2 * q.q_1 * q.q_2 * r1 / (link.source_resistance_RS + r1)));
}

inline LinkCircuit with_load(LinkCircuit link, double rl) {
  link.load_RL = rl;
  return link;
}

namespace detail {

inline LinkSolution solve_mesh(const LinkCircuit& link, double source_voltage_vs, double mutual) {
  const double w = link.omega();
  const Complex z1{link.source_resistance_RS + link.tx.esr_R,
                   w * link.tx.inductance_L - 1.0 / (w * link.tx.capacitance_C)};
  const Complex z2{link.rx.esr_R + link.load_RL, w * link.rx.inductance_L - 1.0 / (w * link.rx.capacitance_C)};
  const Complex zm{0.0, w * mutual};
  const Complex det = z1 * z2 - zm * zm;
  if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det))) {
    throw NumericalError("solve_link: singular mesh matrix", 0.0);
  }
  const Complex vs{source_voltage_vs, 0.0};
  LinkSolution sol;
  sol.primary_current = vs * z2 / det;
  sol.secondary_current = -zm * vs / det;
  sol.input_power_PS = (vs * std::conj(sol.primary_current)).real();
  sol.load_power_PL = std::norm(sol.secondary_current) * link.load_RL;
  sol.efficiency = sol.input_power_PS > 0.0 ? sol.load_power_PL / sol.input_power_PS : 0.0;
  return sol;
}

}  // namespace detail

/// Phasor solve of the two-mesh T network:
///   [ Z1   jwM ] [I1]   [VS]
///   [ jwM  Z2  ] [I2] = [ 0]
/// with Z1 = RS + R1 + j(wL1 - 1/wC1), Z2 = R2 + RL + j(wL2 - 1/wC2).
inline LinkSolution solve_link(const LinkCircuit& link, double source_voltage_vs) {
  link.validate();
  if (!(source_voltage_vs >= 0.0)) throw DomainError("source voltage must be >= 0");
  return detail::solve_mesh(link, source_voltage_vs, link.mutual_inductance());
}

/// Ohmic losses of a solution in RS, R1 and R2 (in that order).
inline std::array<double, 3> dissipated_powers(const LinkCircuit& link, const LinkSolution& sol) {
  const double i1 = std::norm(sol.primary_current);
  const double i2 = std::norm(sol.secondary_current);
  return {i1 * link.source_resistance_RS, i1 * link.tx.esr_R, i2 * link.rx.esr_R};
}

/// RMS source voltage that delivers target_pl watts into the load.
inline double required_source_voltage(const LinkCircuit& link, double target_pl) {
  link.validate();
  if (!(target_pl >= 0.0)) throw DomainError("target load power must be >= 0");
  if (target_pl == 0.0) return 0.0;
  if (link.coupling_k == 0.0) throw InfeasibleError("no power reaches the load without coupling");
  const double pl_unit = solve_link(link, 1.0).load_power_PL;
  if (!(pl_unit > 0.0)) throw InfeasibleError("link delivers no load power");
  return std::sqrt(target_pl / pl_unit);
}

struct DetuningReport {
  double effective_f0_tx;       // Hz, resonance of C1 with L1 (1 - k^2)
  double effective_f0_rx;       // Hz
  double relative_shift;        // f_eff / f_isolated - 1
  double efficiency_tuned;
  double efficiency_detuned;
  double efficiency_penalty;    // 1 - detuned / tuned
};

/// Effect of the coupling-induced inductance drop L(1 - k^2) on tanks whose
/// capacitors were chosen for the isolated inductances.
inline DetuningReport detuning_report(const LinkCircuit& link) {
  link.validate();
  const double k = link.coupling_k;
  const double shrink = 1.0 - k * k;
  DetuningReport rep{};
  rep.effective_f0_tx = resonance_frequency(link.tx.inductance_L * shrink, link.tx.capacitance_C);
  rep.effective_f0_rx = resonance_frequency(link.rx.inductance_L * shrink, link.rx.capacitance_C);
  rep.relative_shift = rep.effective_f0_tx / resonance_frequency(link.tx) - 1.0;
  rep.efficiency_tuned = link_efficiency(link);

  LinkCircuit detuned = link;
  detuned.tx.inductance_L *= shrink;
  detuned.rx.inductance_L *= shrink;
  // tank self-reactances use L (1 - k^2); the mutual term keeps the isolated value
  rep.efficiency_detuned = detail::solve_mesh(detuned, 1.0, link.mutual_inductance()).efficiency;
  rep.efficiency_penalty = rep.efficiency_tuned > 0.0 ? 1.0 - rep.efficiency_detuned / rep.efficiency_tuned : 0.0;
  return rep;
}

}  // namespace uavwpt::link
