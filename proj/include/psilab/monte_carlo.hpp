#pragma once

#include <cstdint>
#include <string>

#include "psilab/config.hpp"

namespace psi {

struct mc_options {
  // Truth fringe parameters. A non-positive k_omega selects the
  // well-separated benchmark k_omega = 20 / sigma_f.
  double k_omega = -1.0;  // rad/m
  double phi_a = 0.5;     // rad
  int threads = 0;        // 0 = hardware concurrency (capped by PSI_LAB_THREADS)
};

// Empirical estimator spread over repeated simulate -> wls_fit trials,
// against both variance predictions. Reproducible bit-for-bit from
// (cfg, trials, seed): per-trial seeds are derived streams and the
// reduction uses fixed-order pairwise summation.
struct mc_report {
  long long trials = 0;
  uint64_t seed = 0;
  double k_omega_truth = 0;
  double phi_a_truth = 0;

  double empirical_std_phi = 0;
  double empirical_std_k = 0;
  double predicted_std_phi_closed = 0;
  double predicted_std_k_closed = 0;
  double predicted_std_phi_numeric = 0;
  double predicted_std_k_numeric = 0;
  double ratio_phi = 0;          // empirical / closed form
  double ratio_k = 0;
  double sampling_band_rel = 0;  // +-1 sigma of a std estimate, sqrt(1/(2 trials))
  double mean_phi_error = 0;     // bias diagnostic
  long long fit_failures = 0;
  bool failure_rate_flagged = false;  // failures exceed 1 %

  std::string to_json() const;
};

mc_report monte_carlo_validate(const experiment_config& cfg, long long trials,
                               uint64_t seed, const mc_options& opts = {});

// Worker count: explicit request, else PSI_LAB_THREADS, else hardware.
int effective_thread_count(int requested);

}  // namespace psi
