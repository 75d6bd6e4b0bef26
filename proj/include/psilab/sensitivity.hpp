#pragma once

#include <string>

#include "psilab/config.hpp"

namespace psi {

// Shot-noise-limited measurement uncertainties. The per-sqrt(Hz) figures are
// amplitude spectral densities: delta(tau) = per_sqrt_hz / sqrt(tau).
struct sensitivity_report {
  double delta_a_per_shot = 0;         // m/s^2
  double delta_a_per_sqrt_hz = 0;      // m/s^2 / sqrt(Hz)
  double delta_a_at_tau = 0;           // m/s^2 at the requested tau
  double delta_omega_per_shot = 0;     // rad/s
  double delta_omega_per_sqrt_hz = 0;  // rad/s / sqrt(Hz)
  double delta_omega_at_tau = 0;       // rad/s at the requested tau
  // echoed parameters
  double k_t = 0;
  double big_t = 0;
  double contrast = 0;
  long long atom_number = 0;
  double cycle_time = 0;
  double sigma_f = 0;
  double tau = 0;

  std::string to_json() const;
};

// delta_a = [k_t T^2 c sqrt(N tau / 2 tau0)]^-1,
// delta_omega = [k_t T c sigma_f sqrt(N tau / 2 tau0)]^-1.
sensitivity_report sensitivity(const experiment_config& cfg, double tau);

struct lmt_optimum {
  int n_star = 0;
  double enhancement = 1.0;        // (n*+1) * eta^(4 n*)
  double contrast_at_n_star = 0;   // c0 * eta^(4 n*)
};

// Contrast model c(n) = c0 * eta^(4n): each of the 4n extra pi pulses keeps
// a fraction eta of the fringe amplitude. Enhancement (n+1) c(n)/c0 is
// maximized over n in [0, n_max]; ties break toward smaller n.
lmt_optimum lmt_optimize(double eta_per_pulse, double c0, int n_max);

// Maximum measurement bandwidth of the sequential 3-axis unit,
// 1 / (3 (tau_MOT + overhead)).
double imu_bandwidth(double tau_mot, double overhead = 0.0);

}  // namespace psi
