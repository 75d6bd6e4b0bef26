#include "psilab/sensitivity.hpp"

#include <cmath>

#include <json.hpp>

#include "psilab/constants.hpp"
#include "psilab/errors.hpp"

namespace psi {

sensitivity_report sensitivity(const experiment_config& cfg, double tau) {
  if (!(tau > 0)) throw config_error("sensitivity: tau must be positive");
  sensitivity_report r;
  r.k_t = momentum_transfer_wavenumber(cfg);
  r.big_t = cfg.big_t;
  r.contrast = cfg.contrast;
  r.atom_number = cfg.atom_number;
  r.cycle_time = cfg.cycle_time;
  r.sigma_f = sigma_f(cfg);
  r.tau = tau;

  const double per_shot_scale = std::sqrt(static_cast<double>(cfg.atom_number) / 2.0);
  const double a_gain = r.k_t * r.big_t * r.big_t * r.contrast;
  const double omega_gain = r.k_t * r.big_t * r.contrast * r.sigma_f;

  r.delta_a_per_shot = 1.0 / (a_gain * per_shot_scale);
  r.delta_omega_per_shot = 1.0 / (omega_gain * per_shot_scale);
  r.delta_a_per_sqrt_hz = r.delta_a_per_shot * std::sqrt(cfg.cycle_time);
  r.delta_omega_per_sqrt_hz = r.delta_omega_per_shot * std::sqrt(cfg.cycle_time);
  r.delta_a_at_tau = r.delta_a_per_sqrt_hz / std::sqrt(tau);
  r.delta_omega_at_tau = r.delta_omega_per_sqrt_hz / std::sqrt(tau);
  return r;
}

std::string sensitivity_report::to_json() const {
  nlohmann::json j;
  j["delta_a_per_shot_m_s2"] = delta_a_per_shot;
  j["delta_a_per_sqrt_hz_m_s2"] = delta_a_per_sqrt_hz;
  j["delta_a_per_sqrt_hz_g"] = delta_a_per_sqrt_hz / constants::standard_gravity;
  j["delta_a_at_tau_m_s2"] = delta_a_at_tau;
  j["delta_omega_per_shot_rad_s"] = delta_omega_per_shot;
  j["delta_omega_per_sqrt_hz_rad_s"] = delta_omega_per_sqrt_hz;
  j["delta_omega_at_tau_rad_s"] = delta_omega_at_tau;
  j["parameters"] = {{"k_t_rad_per_m", k_t},
                     {"big_t_s", big_t},
                     {"contrast", contrast},
                     {"atom_number", atom_number},
                     {"cycle_time_s", cycle_time},
                     {"sigma_f_m", sigma_f},
                     {"tau_s", tau}};
  return j.dump(2);
}

lmt_optimum lmt_optimize(double eta_per_pulse, double c0, int n_max) {
  if (!(eta_per_pulse > 0) || eta_per_pulse > 1) {
    throw config_error("lmt_optimize: eta must lie in (0, 1]");
  }
  if (n_max < 0) throw config_error("lmt_optimize: n_max must be >= 0");
  lmt_optimum best;
  best.n_star = 0;
  best.enhancement = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    const double e = (n + 1) * std::pow(eta_per_pulse, 4.0 * n);
    if (e > best.enhancement) {
      best.n_star = n;
      best.enhancement = e;
    }
  }
  best.contrast_at_n_star = c0 * std::pow(eta_per_pulse, 4.0 * best.n_star);
  return best;
}

double imu_bandwidth(double tau_mot, double overhead) {
  if (!(tau_mot > 0)) throw config_error("imu_bandwidth: tau_MOT must be positive");
  if (overhead < 0) throw config_error("imu_bandwidth: overhead must be non-negative");
  return 1.0 / (3.0 * (tau_mot + overhead));
}

}  // namespace psi
