#include "psilab/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include <json.hpp>

#include "psilab/errors.hpp"
#include "psilab/estimate.hpp"
#include "psilab/rng.hpp"
#include "psilab/synth.hpp"
#include "psilab/variance.hpp"

namespace psi {

namespace {

// Fixed-order pairwise sum: the result does not depend on how trials were
// distributed over threads.
double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : pairwise_sum(v, 0, v.size()) / static_cast<double>(v.size());
}

double pairwise_std(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mean = pairwise_mean(v);
  std::vector<double> sq(v.size());
  for (size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
  return std::sqrt(pairwise_sum(sq, 0, sq.size()) / static_cast<double>(v.size() - 1));
}

}  // namespace

int effective_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PSI_LAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

mc_report monte_carlo_validate(const experiment_config& cfg, long long trials,
                               uint64_t seed, const mc_options& opts) {
  if (trials < 100) throw config_error("monte_carlo_validate: trials must be >= 100");

  const double sf = sigma_f(cfg);
  pixel_grid grid{cfg.grid_size[0], 1, cfg.pixel_pitch};
  grid.validate();

  mc_report rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.k_omega_truth = opts.k_omega > 0 ? opts.k_omega : 20.0 / sf;
  rep.phi_a_truth = opts.phi_a;

  const std::vector<double> f = cloud_profile_1d(cfg.atom_number, sf, grid);
  const std::vector<double> x = grid.x_coords();

  const variance_prediction closed = closed_form_variances(
      static_cast<double>(cfg.atom_number), cfg.contrast, sf);
  const variance_prediction numeric =
      numeric_variances(f, x, rep.k_omega_truth, rep.phi_a_truth, cfg.contrast);
  rep.predicted_std_phi_closed = std::sqrt(closed.var_phi_a);
  rep.predicted_std_k_closed = std::sqrt(closed.var_k_omega);
  rep.predicted_std_phi_numeric = std::sqrt(numeric.var_phi_a);
  rep.predicted_std_k_numeric = std::sqrt(numeric.var_k_omega);

  std::vector<double> phi_hat(trials, 0.0), k_hat(trials, 0.0);
  std::vector<char> failed(trials, 0);

  const int n_threads = effective_thread_count(opts.threads);
  std::atomic<long long> next{0};
  auto worker = [&]() {
    while (true) {
      const long long t = next.fetch_add(1);
      if (t >= trials) break;
      const uint64_t trial_seed = derive_seed(seed, static_cast<uint64_t>(t));
      const fringe_image img = sample_image(f, grid, rep.k_omega_truth,
                                            rep.phi_a_truth, cfg.contrast,
                                            cfg.atom_number, trial_seed);
      try {
        const fringe_estimate init = fourier_estimate(img.profile_1d, grid);
        const fringe_estimate est = wls_fit(img.profile_1d, f, grid, init);
        if (!est.converged) {
          failed[t] = 1;
        } else {
          phi_hat[t] = est.phi_a_hat;
          k_hat[t] = est.k_omega_hat;
        }
      } catch (const estimation_error&) {
        failed[t] = 1;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<double> phi_ok, k_ok, phi_err;
  phi_ok.reserve(trials);
  k_ok.reserve(trials);
  for (long long t = 0; t < trials; ++t) {
    if (failed[t]) {
      ++rep.fit_failures;
      continue;
    }
    phi_ok.push_back(phi_hat[t]);
    k_ok.push_back(k_hat[t]);
    phi_err.push_back(wrap_phase(phi_hat[t] - rep.phi_a_truth));
  }

  rep.empirical_std_phi = pairwise_std(phi_ok);
  rep.empirical_std_k = pairwise_std(k_ok);
  rep.mean_phi_error = pairwise_mean(phi_err);
  rep.ratio_phi = rep.empirical_std_phi / rep.predicted_std_phi_closed;
  rep.ratio_k = rep.empirical_std_k / rep.predicted_std_k_closed;
  rep.sampling_band_rel = std::sqrt(1.0 / (2.0 * static_cast<double>(trials)));
  rep.failure_rate_flagged =
      rep.fit_failures > 0 &&
      static_cast<double>(rep.fit_failures) > 0.01 * static_cast<double>(trials);
  return rep;
}

std::string mc_report::to_json() const {
  nlohmann::json j;
  j["trials"] = trials;
  j["seed"] = seed;
  j["truth"] = {{"k_omega_rad_per_m", k_omega_truth}, {"phi_a_rad", phi_a_truth}};
  j["empirical_std"] = {{"phi_a_rad", empirical_std_phi}, {"k_omega_rad_per_m", empirical_std_k}};
  j["predicted_std_closed_form"] = {{"phi_a_rad", predicted_std_phi_closed},
                                    {"k_omega_rad_per_m", predicted_std_k_closed}};
  j["predicted_std_numeric"] = {{"phi_a_rad", predicted_std_phi_numeric},
                                {"k_omega_rad_per_m", predicted_std_k_numeric}};
  j["ratio_empirical_over_closed"] = {{"phi_a", ratio_phi}, {"k_omega", ratio_k}};
  j["sampling_band_rel_1sigma"] = sampling_band_rel;
  j["mean_phi_error_rad"] = mean_phi_error;
  j["fit_failures"] = fit_failures;
  j["failure_rate_flagged"] = failure_rate_flagged;
  return j.dump(2);
}

}  // namespace psi
