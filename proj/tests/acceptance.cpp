// Acceptance suite: one pass/fail line per criterion, non-zero exit when
// any criterion fails. Runs against the library exactly as shipped.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "psilab/cloud.hpp"
#include "psilab/config.hpp"
#include "psilab/errors.hpp"
#include "psilab/constants.hpp"
#include "psilab/estimate.hpp"
#include "psilab/monte_carlo.hpp"
#include "psilab/phases.hpp"
#include "psilab/rng.hpp"
#include "psilab/sensitivity.hpp"
#include "psilab/sequencer.hpp"
#include "psilab/synth.hpp"
#include "psilab/variance.hpp"
#include "psilab/zeeman.hpp"

using namespace psi;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", num,
              name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

experiment_config benchmark_config(long long atoms, int lmt_order) {
  experiment_config cfg;
  cfg.species = rb87();
  cfg.lmt_order = lmt_order;
  cfg.big_t = 0.02;
  for (int j = 1; j <= lmt_order; ++j) {
    cfg.extra_intervals.push_back(0.02 * (1.0 - static_cast<double>(j) / (lmt_order + 1)));
  }
  cfg.contrast = 0.5;
  cfg.atom_number = atoms;
  cfg.sigma_0 = 0.2e-3;
  cfg.temperature = 6e-6;
  cfg.bias_velocity = 1.0;
  cfg.expansion_time = 40.896e-3;  // sigma_f = 1.000 mm
  cfg.cycle_time = 1.0;
  cfg.mot_load_time = 1.0;
  cfg.pixel_pitch = 8 * 1e-3 / 256;
  cfg.grid_size = {256, 1};
  cfg.validate();
  return cfg;
}

double rel(double value, double reference) {
  return std::abs(value / reference - 1.0);
}

// --------------------------------------------------------------------------

void criterion_1_sensitivity() {
  const auto t0 = std::chrono::steady_clock::now();
  const experiment_config cfg = benchmark_config(1000000, 9);  // k_t = 10 k_eff
  const sensitivity_report r = sensitivity(cfg, 1.0);
  const double d_omega = r.delta_omega_per_sqrt_hz;                       // rad/s/sqrt(Hz)
  const double d_a_g = r.delta_a_per_sqrt_hz / constants::standard_gravity;
  const double dt = seconds_since(t0);

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "dOmega=%.4g urad/s/rtHz (ref 0.88, dev %.2f%%), da=%.4g ng/rtHz "
                "(ref 4.5, dev %.2f%%), %.3f s",
                d_omega * 1e6, rel(d_omega, 0.88e-6) * 100, d_a_g * 1e9,
                rel(d_a_g, 4.5e-9) * 100, dt);
  report(1, "reference sensitivity figures",
         rel(d_omega, 0.88e-6) < 0.02 && rel(d_a_g, 4.5e-9) < 0.02 && dt < 1.0, buf);
}

void criterion_2_zeeman() {
  const auto t0 = std::chrono::steady_clock::now();
  const species_data sp = rb87();
  const zeeman_scenario scn{3e-4, 3.01e-4, 1e-2, 0.02};  // 3 G -> 3.01 G, 1 G/cm
  const double shift = differential_clock_shift(scn.b_second_half, sp) -
                       differential_clock_shift(scn.b_first_half, sp);
  const double phase = zeeman_phase_error(scn, sp);
  const zeeman_force_result force = zeeman_force(scn.b_first_half, scn.gradient, sp);
  const double dt = seconds_since(t0);

  const bool pass = rel(shift, 35.0) < 0.05 &&
                    rel(phase, 1.4 * constants::pi) < 0.05 &&
                    rel(force.force_dyn, 1.1e-23) < 0.10 &&
                    rel(force.acceleration_g, 81e-6) < 0.05 && dt < 1.0;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "shift=%.4g Hz (ref 35), phase=%.4g pi (ref 1.4), force=%.4g dyn "
                "(ref 1.1e-23), accel=%.4g ug (ref 81), %.3f s",
                shift, phase / constants::pi, force.force_dyn,
                force.acceleration_g * 1e6, dt);
  report(2, "second-order Zeeman systematics", pass, buf);
}

void criterion_3_cloud() {
  const species_data sp = rb87();

  // 6 uK expansion from a point source reaches 2.4 mm at 100 ms
  const double s100 = sigma_f_at(0.0, sp, 6e-6, 0.1);

  // time for 0.2 mm -> 1 mm, found by bisection on the forward model
  double lo = 0.0, hi = 0.2;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sigma_f_at(0.2e-3, sp, 6e-6, mid) < 1e-3 ? lo : hi) = mid;
  }
  const double t_needed = 0.5 * (lo + hi);

  const flight_result fl = flight_kinematics(1.0, 0.04, 9.8);

  const bool pass = rel(s100, 2.4e-3) < 0.03 &&
                    t_needed > 38e-3 && t_needed < 42e-3 &&
                    fl.sag >= 7.8e-3 && fl.sag <= 8.0e-3 &&
                    rel(fl.travel, 0.04) < 1e-12;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "sigma(100ms)=%.4g mm (ref 2.4), t(1mm)=%.4g ms (ref 40+-2), "
                "sag=%.4g mm (ref 7.8-8.0), travel=%.4g cm (ref 4)",
                s100 * 1e3, t_needed * 1e3, fl.sag * 1e3, fl.travel * 1e2);
  report(3, "cloud kinematics", pass, buf);
}

void criterion_4_monte_carlo() {
  const auto t0 = std::chrono::steady_clock::now();
  const experiment_config cfg = benchmark_config(10000, 0);
  mc_options opts;
  opts.k_omega = 20.0 / 1e-3;  // k_omega * sigma_f = 20
  opts.phi_a = 0.5;
  opts.threads = 1;  // single-threaded runtime target
  const mc_report rep = monte_carlo_validate(cfg, 2000, 424242, opts);
  const double dt = seconds_since(t0);

  const double ref_phi = std::sqrt((4 - 0.25) / (2 * 1e4 * 0.25));  // 0.027386
  const double ref_k = ref_phi / 1e-3;
  const bool pass = rel(rep.empirical_std_phi, ref_phi) < 0.10 &&
                    rel(rep.empirical_std_k, ref_k) < 0.10 &&
                    !rep.failure_rate_flagged && dt < 300.0;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "std(phi)=%.5f (ref %.5f, dev %.2f%%), std(k)=%.4g (ref %.4g, dev "
                "%.2f%%), failures=%lld, %.1f s",
                rep.empirical_std_phi, ref_phi, rel(rep.empirical_std_phi, ref_phi) * 100,
                rep.empirical_std_k, ref_k, rel(rep.empirical_std_k, ref_k) * 100,
                rep.fit_failures, dt);
  report(4, "Monte Carlo vs closed form (2000 trials)", pass, buf);
}

// Worst-case deviation of the numeric propagation from the closed form over
// a phase grid, for one k*sigma_f and pixel count.
double numeric_closed_deviation(double k_sigma, int nx) {
  const double sf = 1e-3;
  const pixel_grid g{nx, 1, 8 * sf / nx};
  const std::vector<double> f = cloud_profile_1d(10000, sf, g);
  const std::vector<double> x = g.x_coords();
  const variance_prediction cf = closed_form_variances(10000, 0.5, sf);
  double worst = 0;
  for (int i = 0; i <= 24; ++i) {
    const double phi = constants::pi * i / 24.0;
    const variance_prediction nv = numeric_variances(f, x, k_sigma / sf, phi, 0.5);
    worst = std::max(worst, std::abs(std::sqrt(nv.var_phi_a / cf.var_phi_a) - 1));
    worst = std::max(worst, std::abs(std::sqrt(nv.var_k_omega / cf.var_k_omega) - 1));
  }
  return worst;
}

void criterion_5_convergence() {
  const double dev20 = numeric_closed_deviation(20.0, 256);
  const double dev50 = numeric_closed_deviation(50.0, 512);
  const double dev2 = numeric_closed_deviation(2.0, 256);
  // where the overlap regime actually appears for this Gaussian model
  const double dev_one_fringe = numeric_closed_deviation(constants::pi / 4.0, 256);

  const bool pass = dev20 < 0.02 && dev50 < 0.005 && dev2 > 0.10;
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "dev@20=%.3f%% (<2%%), dev@50=%.3f%% (<0.5%%), dev@2=%.3f%% "
                "(required >10%%; every coefficient sum carries exp(-2(k*sigma)^2) "
                "corrections, ~3e-4 at k*sigma=2, so the stated threshold is "
                "unreachable there; one fringe across the cloud, k*sigma=0.785, "
                "gives %.1f%%)",
                dev20 * 100, dev50 * 100, dev2 * 100, dev_one_fringe * 100);
  report(5, "numeric-to-closed-form convergence", pass, buf);
}

void criterion_6_phase_oracle() {
  // The phase identities are scale-free, so the oracle runs in natural
  // units (k_eff = 1, T = 1): summing the laboratory-scale 1e7 rad/m wavenumber
  // against centimeter offsets cancels ~1e5 rad intermediates and buries a
  // 1e-10 relative comparison in rounding noise.
  const double ke = 1.0;
  const vec3 kz{0, 0, ke};
  philox_stream rng(616, 0);
  double worst = 0;

  auto weight = [](const pulse& p) {
    if (p.index == 0) return p.family == 'B' ? -2.0 : 1.0;
    return (p.family == 'A' || p.family == 'C') ? 2.0 : -2.0;
  };

  for (int n = 0; n <= 5; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> tj(n);
      for (double& t : tj) t = 0.05 + 0.9 * rng.next_double();
      const pulse_sequence seq = build_sequence(n, 1.0, tj);

      // acceleration: per-pulse sum over k_eff * x(t)
      const double a = -2 + 4 * rng.next_double();
      const double x0 = rng.next_double() - 0.5;
      const double v0 = 2.0 * (rng.next_double() - 0.5);
      double acc_oracle = 0;
      for (const pulse& p : seq.pulses) {
        acc_oracle += weight(p) * ke * (x0 + v0 * p.time + 0.5 * a * p.time * p.time);
      }
      worst = std::max(worst, rel(acc_oracle, acceleration_phase(seq, a, ke)));

      // rotation: per-pulse sum over the turning wavevector
      const vec3 omg{0.05 * (rng.next_double() - 0.5),
                     0.05 * (rng.next_double() - 0.5),
                     0.05 * (rng.next_double() - 0.5)};
      const vec3 r0{rng.next_double() - 0.5, rng.next_double() - 0.5,
                    rng.next_double() - 0.5};
      const vec3 v{rng.next_double() - 0.5, rng.next_double() - 0.5,
                   rng.next_double() - 0.5};
      const vec3 dk = cross(kz, omg);
      double rot_oracle = 0;
      for (const pulse& p : seq.pulses) {
        rot_oracle += weight(p) * dot(kz + dk * p.time, r0 + v * p.time);
      }
      const double rot_closed = rotation_phase(seq, omg, v * (2 * seq.big_t), kz);
      if (std::abs(rot_closed) > 1e-12) {
        worst = std::max(worst, rel(rot_oracle, rot_closed));
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "worst relative disagreement %.2e (limit 1e-10)", worst);
  report(6, "LMT phase formulas vs per-pulse oracle (n = 0..5)", worst < 1e-10, buf);
}

void criterion_7_bandwidth() {
  const double bw = imu_bandwidth(1.0, 0.0);
  // the quoted 0.33 Hz is 1/3 Hz printed to two figures
  const bool rounds_ok = std::abs(std::round(bw * 100) / 100 - 0.33) < 1e-12;
  const bool pass = rel(bw, 1.0 / 3.0) < 0.01 && rounds_ok;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "bandwidth=%.6f Hz (reference 1/3 Hz, prints as %.2f)", bw, bw);
  report(7, "3-axis bandwidth at tau_MOT = 1 s", pass, buf);
}

void criterion_8_sequencer() {
  const experiment_config cfg = benchmark_config(1000000, 2);
  const frequency_plan plan = default_frequency_plan();
  const timeline t = build_imu_cycle(cfg, plan);
  const std::vector<std::string> violations = validate_timeline(t, plan, cfg);

  const bool tables_ok =
      launch_plan(psi_axis::psi1).to_json() ==
          R"({"axis":"PSI-1","reduced_beams":["MOT 2'","MOT 3'"]})" &&
      launch_plan(psi_axis::psi2).to_json() ==
          R"({"axis":"PSI-2","reduced_beams":["MOT 1'","MOT 2'","MOT 3"]})" &&
      launch_plan(psi_axis::psi3).to_json() ==
          R"({"axis":"PSI-3","reduced_beams":["MOT 1","MOT 2'","MOT 3"]})";
  const bool detunings_exact =
      plan.mot_detuning() == -12e6 && plan.molasses_detuning() == -92e6;

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "violations=%zu, beam tables %s, detunings %s (%zu events)",
                violations.size(), tables_ok ? "exact" : "WRONG",
                detunings_exact ? "exact" : "WRONG", t.events.size());
  report(8, "sequencer round trip (n = 2)",
         violations.empty() && tables_ok && detunings_exact, buf);
}

void criterion_9_estimator_properties() {
  const double sf = 1e-3;
  const pixel_grid g{256, 1, 8 * sf / 256};
  const long long atoms = 10000;
  const double c = 0.5;
  const double k_truth = 20.0 / sf;
  const double phi_truth = 0.5;
  const std::vector<double> f = cloud_profile_1d(atoms, sf, g);

  // unbiasedness over 500 seeded simulate -> fit runs
  const int runs = 500;
  double sum_dphi = 0, sum_dk = 0;
  int failures = 0;
  for (int i = 0; i < runs; ++i) {
    const uint64_t seed = derive_seed(909090, static_cast<uint64_t>(i));
    const fringe_image img = sample_image(f, g, k_truth, phi_truth, c, atoms, seed);
    try {
      const fringe_estimate est =
          wls_fit(img.profile_1d, f, g, fourier_estimate(img.profile_1d, g));
      sum_dphi += wrap_phase(est.phi_a_hat - phi_truth);
      sum_dk += est.k_omega_hat - k_truth;
    } catch (const estimation_error&) {
      ++failures;
    }
  }
  const double sigma_pred = std::sqrt((4 - c * c) / (2 * atoms * c * c));
  const double bias_phi = std::abs(sum_dphi / (runs - failures));
  const double bias_k = std::abs(sum_dk / (runs - failures));
  const double bound_phi = 5 * sigma_pred / std::sqrt(static_cast<double>(runs));
  const double bound_k = 5 * (sigma_pred / sf) / std::sqrt(static_cast<double>(runs));

  // Fourier/WLS agreement on noiseless data
  bool agreement = true;
  for (double ksf : {12.0, 20.0, 35.0}) {
    const std::vector<double> p =
        expected_counts(f, g, ksf / sf, 1.1, c).mean;
    const fringe_estimate fe = fourier_estimate(p, g);
    const fringe_estimate we = wls_fit(p, f, g, fe);
    if (std::abs(we.k_omega_hat - fe.k_omega_hat) / we.k_omega_hat >= 1e-3 ||
        std::abs(wrap_phase(we.phi_a_hat - fe.phi_a_hat)) >= 1e-3) {
      agreement = false;
    }
  }

  const bool pass =
      failures == 0 && bias_phi < bound_phi && bias_k < bound_k && agreement;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "bias(phi)=%.2e (bound %.2e), bias(k)=%.3g (bound %.3g), "
                "failures=%d, fourier/wls agreement %s",
                bias_phi, bound_phi, bias_k, bound_k, failures,
                agreement ? "ok" : "BROKEN");
  report(9, "estimator unbiasedness and method agreement (500 runs)", pass, buf);
}

}  // namespace

int main() {
  criterion_1_sensitivity();
  criterion_2_zeeman();
  criterion_3_cloud();
  criterion_4_monte_carlo();
  criterion_5_convergence();
  criterion_6_phase_oracle();
  criterion_7_bandwidth();
  criterion_8_sequencer();
  criterion_9_estimator_properties();

  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
