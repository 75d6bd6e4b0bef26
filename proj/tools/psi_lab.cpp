// psi-lab: simulate point-source interferometer images, extract fringe
// parameters, and compile sensitivity/systematics/timeline reports.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psilab/cloud.hpp"
#include "psilab/config.hpp"
#include "psilab/constants.hpp"
#include "psilab/errors.hpp"
#include "psilab/estimate.hpp"
#include "psilab/io.hpp"
#include "psilab/manifest.hpp"
#include "psilab/monte_carlo.hpp"
#include "psilab/phases.hpp"
#include "psilab/resonance.hpp"
#include "psilab/sensitivity.hpp"
#include "psilab/sequencer.hpp"
#include "psilab/synth.hpp"
#include "psilab/units.hpp"
#include "psilab/variance.hpp"
#include "psilab/zeeman.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitEstimation = 3;
constexpr int kExitValidation = 4;

struct scenario {
  double k_omega = 0;  // rad/m
  double phi_a = 0;    // rad
};

double json_quantity(const json& v, psi::dimension dim, const std::string& name) {
  if (v.is_number()) return v.get<double>();
  return psi::parse_quantity(v.get<std::string>(), dim, name);
}

// Truth fringe parameters for simulation. Direct k_omega/phi_a win;
// otherwise they are derived from rotation/acceleration vectors through the
// pulse sequence (k_omega uses the (T + sum T_j) normalization so that
// simulate -> fit round trips are self-consistent).
scenario load_scenario(const std::string& config_text,
                       const psi::experiment_config& cfg) {
  scenario sc;
  sc.k_omega = 20.0 / psi::sigma_f(cfg);  // benchmark default
  sc.phi_a = 0.5;
  json j = json::parse(config_text);
  if (!j.contains("scenario")) return sc;
  const json& s = j.at("scenario");
  const psi::pulse_sequence seq =
      psi::build_sequence(cfg.lmt_order, cfg.big_t, cfg.extra_intervals);
  if (s.contains("omega")) {
    psi::vec3 omega{json_quantity(s["omega"][0], psi::dimension::angular_rate, "omega"),
                    json_quantity(s["omega"][1], psi::dimension::angular_rate, "omega"),
                    json_quantity(s["omega"][2], psi::dimension::angular_rate, "omega")};
    // Raman axis along z: the fringe wavevector lies in the x-y plane and
    // the 1D estimator sees its magnitude.
    const psi::vec3 k_eff_vec = psi::vec3{0, 0, 1} * psi::k_eff(cfg.species);
    sc.k_omega = psi::norm(psi::fringe_wavevector(seq, omega, k_eff_vec).k_omega);
  }
  if (s.contains("acceleration")) {
    const double a =
        json_quantity(s["acceleration"], psi::dimension::acceleration, "acceleration");
    sc.phi_a = psi::wrap_phase(
        psi::acceleration_phase(seq, a, psi::k_eff(cfg.species)));
  }
  if (s.contains("k_omega")) {
    sc.k_omega = json_quantity(s["k_omega"], psi::dimension::wavenumber, "k_omega");
  }
  if (s.contains("phi_a")) {
    sc.phi_a = json_quantity(s["phi_a"], psi::dimension::angle, "phi_a");
  }
  return sc;
}

json estimate_to_json(const psi::fringe_estimate& est) {
  return {{"k_omega_hat_rad_per_m", est.k_omega_hat},
          {"phi_a_hat_rad", est.phi_a_hat},
          {"contrast_hat", est.contrast_hat},
          {"method", est.method == psi::fit_method::fourier ? "fourier" : "wls"},
          {"converged", est.converged},
          {"iterations", est.iterations}};
}

int cmd_simulate(const std::string& config_path, uint64_t seed,
                 const std::string& out_dir) {
  const std::string config_text = psi::read_file(config_path);
  const psi::experiment_config cfg = psi::load_config(config_text);
  const scenario sc = load_scenario(config_text, cfg);
  const psi::run_manifest manifest = psi::make_manifest(config_text, seed, "simulate");

  psi::pixel_grid grid{cfg.grid_size[0], cfg.grid_size[1], cfg.pixel_pitch};
  std::string warning;
  const std::vector<double> f =
      psi::cloud_profile(cfg.atom_number, psi::sigma_f(cfg), grid, &warning);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";

  const psi::fringe_image img = psi::sample_image(
      f, grid, sc.k_omega, sc.phi_a, cfg.contrast, cfg.atom_number, seed);

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  psi::atomic_write_file((fs::path(out_dir) / "image.csv").string(), img.to_csv());

  json sidecar = json::parse(img.sidecar_json());
  sidecar["manifest"] = json::parse(manifest.to_json());
  psi::atomic_write_file((fs::path(out_dir) / "image.json").string(), sidecar.dump(2) + "\n");
  psi::atomic_write_file((fs::path(out_dir) / "manifest.json").string(),
                         manifest.to_json() + "\n");
  std::cout << "wrote " << (fs::path(out_dir) / "image.csv").string() << " ("
            << grid.nx << "x" << grid.ny << ", " << img.total() << " counts)\n";
  return kExitOk;
}

psi::fringe_estimate fit_one(const psi::fringe_image& img, const std::string& method,
                             psi::fringe_estimate* fourier_out) {
  const psi::fringe_estimate fourier = psi::fourier_estimate(img.profile_1d, img.grid);
  if (fourier_out) *fourier_out = fourier;
  if (method == "fourier") return fourier;
  // Weights need the expected cloud profile; reconstruct it from the truth
  // metadata when present, otherwise from the measured total and a moment
  // estimate of the cloud width.
  long long n_atoms = img.truth ? img.truth->atom_number : img.total() * 2;
  std::vector<long long> p = img.profile_1d;
  double tot = 0, m1 = 0, m2 = 0;
  for (int i = 0; i < img.grid.nx; ++i) {
    tot += p[i];
    m1 += p[i] * img.grid.x(i);
    m2 += p[i] * img.grid.x(i) * img.grid.x(i);
  }
  const double mean = m1 / tot;
  const double sf = std::sqrt(std::max(m2 / tot - mean * mean, 1e-300));
  const std::vector<double> f = psi::cloud_profile_1d(n_atoms, sf, img.grid);
  return psi::wls_fit(img.profile_1d, f, img.grid, fourier);
}

int cmd_fit(const std::vector<std::string>& images, const std::string& out_path,
            const std::string& method, uint64_t seed) {
  namespace fs = std::filesystem;
  if (images.size() == 1) {
    const std::string csv = psi::read_file(images[0]);
    const fs::path sidecar_path = fs::path(images[0]).replace_extension(".json");
    const auto sidecar = psi::read_file_if_exists(sidecar_path.string());
    const psi::fringe_image img = psi::image_from_csv(csv, sidecar);

    psi::fringe_estimate fourier;
    const psi::fringe_estimate best = fit_one(img, method, &fourier);
    json out;
    out["image"] = images[0];
    if (method == "both") {
      out["fourier"] = estimate_to_json(fourier);
      out["wls"] = estimate_to_json(best);
    } else {
      out[method] = estimate_to_json(best);
    }
    if (img.truth) {
      out["truth"] = {{"k_omega_rad_per_m", img.truth->k_omega},
                      {"phi_a_rad", img.truth->phi_a}};
    }
    out["manifest"] = json::parse(psi::make_manifest(csv, seed, "fit").to_json());
    const std::string text = out.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      psi::atomic_write_file(out_path, text);
    }
    return kExitOk;
  }

  // Batch mode: one CSV row per image.
  std::ostringstream os;
  os << "image,method,k_omega_hat_rad_per_m,phi_a_hat_rad,contrast_hat,converged,iterations\n";
  os.precision(12);
  for (const std::string& path : images) {
    const std::string csv = psi::read_file(path);
    const auto sidecar =
        psi::read_file_if_exists(fs::path(path).replace_extension(".json").string());
    const psi::fringe_image img = psi::image_from_csv(csv, sidecar);
    const psi::fringe_estimate est = fit_one(img, method == "both" ? "wls" : method, nullptr);
    os << path << ',' << (est.method == psi::fit_method::fourier ? "fourier" : "wls")
       << ',' << est.k_omega_hat << ',' << est.phi_a_hat << ',' << est.contrast_hat
       << ',' << (est.converged ? 1 : 0) << ',' << est.iterations << '\n';
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    psi::atomic_write_file(out_path, os.str());
    psi::atomic_write_file(out_path + ".manifest.json",
                           psi::make_manifest(os.str(), seed, "fit").to_json() + "\n");
  }
  return kExitOk;
}

struct sweep_spec {
  std::string param;
  double start = 0, stop = 0;
  int steps = 0;
};

std::optional<sweep_spec> parse_sweep(const std::string& text) {
  if (text.empty()) return std::nullopt;
  sweep_spec sw;
  const auto eq = text.find('=');
  const auto c1 = text.find(':', eq + 1);
  const auto c2 = text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos) {
    throw psi::config_error("--sweep expects PARAM=START:STOP:STEPS");
  }
  sw.param = text.substr(0, eq);
  sw.start = std::stod(text.substr(eq + 1, c1 - eq - 1));
  sw.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  sw.steps = std::stoi(text.substr(c2 + 1));
  if (sw.steps < 2) throw psi::config_error("--sweep needs at least 2 steps");
  return sw;
}

void apply_sweep_value(psi::experiment_config& cfg, const std::string& param,
                       double value) {
  if (param == "big_t" || param == "T") {
    cfg.big_t = value;
  } else if (param == "atom_number" || param == "N") {
    cfg.atom_number = static_cast<long long>(value);
  } else if (param == "contrast" || param == "c") {
    cfg.contrast = value;
  } else if (param == "lmt_order" || param == "n") {
    cfg.lmt_order = static_cast<int>(value);
    cfg.extra_intervals.assign(cfg.lmt_order, cfg.big_t / 2.0);
  } else if (param == "temperature") {
    cfg.temperature = value;
  } else {
    throw psi::config_error("unsupported sweep parameter '" + param + "'");
  }
}

int cmd_report(const std::string& config_path, const std::string& kind,
               const std::string& out_path, const std::string& sweep_text,
               const std::string& scenario_path, double tau, uint64_t seed) {
  const std::string config_text = psi::read_file(config_path);
  psi::experiment_config cfg = psi::load_config(config_text);
  const psi::run_manifest manifest =
      psi::make_manifest(config_text, seed, "report:" + kind);
  const auto sweep = parse_sweep(sweep_text);

  // JSON outputs embed the manifest; bare CSV tables get a sidecar.
  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      psi::atomic_write_file(out_path, text);
      if (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv") {
        psi::atomic_write_file(out_path + ".manifest.json", manifest.to_json() + "\n");
      }
    }
  };

  if (kind == "sensitivity") {
    if (sweep) {
      std::ostringstream os;
      os << sweep->param
         << ",delta_a_per_sqrt_hz_m_s2,delta_a_per_sqrt_hz_g,delta_omega_per_sqrt_hz_rad_s\n";
      os.precision(12);
      for (int i = 0; i < sweep->steps; ++i) {
        const double v =
            sweep->start + (sweep->stop - sweep->start) * i / (sweep->steps - 1);
        psi::experiment_config c = cfg;
        apply_sweep_value(c, sweep->param, v);
        c.validate();
        const psi::sensitivity_report r = psi::sensitivity(c, tau);
        os << v << ',' << r.delta_a_per_sqrt_hz << ','
           << r.delta_a_per_sqrt_hz / psi::constants::standard_gravity << ','
           << r.delta_omega_per_sqrt_hz << '\n';
      }
      emit(os.str());
      return kExitOk;
    }
    json j = json::parse(psi::sensitivity(cfg, tau).to_json());
    j["manifest"] = json::parse(manifest.to_json());
    emit(j.dump(2) + "\n");
    return kExitOk;
  }

  if (kind == "systematics") {
    psi::zeeman_scenario scn;
    scn.b_first_half = 3e-4;   // 3 G
    scn.b_second_half = 3.01e-4;
    scn.gradient = 1e-2;       // 1 G/cm
    scn.big_t = cfg.big_t;
    double budget = -1;
    if (!scenario_path.empty()) {
      json s = json::parse(psi::read_file(scenario_path));
      scn.b_first_half =
          json_quantity(s.at("b_first_half"), psi::dimension::magnetic_field, "b_first_half");
      scn.b_second_half =
          json_quantity(s.at("b_second_half"), psi::dimension::magnetic_field, "b_second_half");
      scn.gradient =
          json_quantity(s.at("gradient"), psi::dimension::field_gradient, "gradient");
      if (s.contains("big_t")) {
        scn.big_t = json_quantity(s.at("big_t"), psi::dimension::time, "big_t");
      }
      if (s.contains("phase_error_budget")) {
        budget = json_quantity(s.at("phase_error_budget"), psi::dimension::angle,
                               "phase_error_budget");
      }
    }
    const double shift_diff =
        psi::differential_clock_shift(scn.b_second_half, cfg.species) -
        psi::differential_clock_shift(scn.b_first_half, cfg.species);
    const double phase = psi::zeeman_phase_error(scn, cfg.species);
    const psi::zeeman_force_result force =
        psi::zeeman_force(scn.b_first_half, scn.gradient, cfg.species);
    json j;
    j["differential_clock_shift_hz"] = shift_diff;
    j["phase_error_rad"] = phase;
    j["phase_error_pi"] = phase / psi::constants::pi;
    j["force_n"] = force.force;
    j["force_dyn"] = force.force_dyn;
    j["acceleration_m_s2"] = force.acceleration;
    j["acceleration_g"] = force.acceleration_g;
    if (budget > 0) {
      j["phase_error_budget_rad"] = budget;
      j["within_budget"] = std::abs(phase) <= budget;
    }
    j["scenario"] = {{"b_first_half_t", scn.b_first_half},
                     {"b_second_half_t", scn.b_second_half},
                     {"gradient_t_per_m", scn.gradient},
                     {"big_t_s", scn.big_t}};
    j["manifest"] = json::parse(manifest.to_json());
    emit(j.dump(2) + "\n");
    return kExitOk;
  }

  if (kind == "bandwidth") {
    json j;
    j["bandwidth_hz"] = psi::imu_bandwidth(cfg.mot_load_time);
    j["tau_mot_s"] = cfg.mot_load_time;
    j["manifest"] = json::parse(manifest.to_json());
    emit(j.dump(2) + "\n");
    return kExitOk;
  }

  if (kind == "lmt") {
    double eta = 0.9;
    int n_max = 20;
    if (!scenario_path.empty()) {
      json s = json::parse(psi::read_file(scenario_path));
      eta = s.value("eta_per_pulse", eta);
      n_max = s.value("n_max", n_max);
    }
    const psi::lmt_optimum opt = psi::lmt_optimize(eta, cfg.contrast, n_max);
    json j;
    j["eta_per_pulse"] = eta;
    j["n_star"] = opt.n_star;
    j["enhancement"] = opt.enhancement;
    j["contrast_at_n_star"] = opt.contrast_at_n_star;
    j["manifest"] = json::parse(manifest.to_json());
    emit(j.dump(2) + "\n");
    return kExitOk;
  }

  if (kind == "broadening") {
    // Fig-3-style table: ratio vs T for this config's cloud, with k_omega
    // driven by a reference rotation rate (Earth rate by default).
    double omega_ref = 7.292115e-5;  // rad/s
    if (!scenario_path.empty()) {
      json s = json::parse(psi::read_file(scenario_path));
      if (s.contains("omega_ref")) {
        omega_ref = json_quantity(s.at("omega_ref"), psi::dimension::angular_rate, "omega_ref");
      }
    }
    const double ke = psi::k_eff(cfg.species);
    auto k_of_t = [&](double t) { return ke * omega_ref * t; };
    std::vector<double> ts;
    const int steps = sweep ? sweep->steps : 81;
    const double t0 = sweep ? sweep->start : 1e-3;
    const double t1 = sweep ? sweep->stop : 40e-3;
    for (int i = 0; i < steps; ++i) {
      ts.push_back(t0 + (t1 - t0) * i / (steps - 1));
    }
    const auto curve = psi::sensitivity_ratio_curve(
        {cfg.sigma_0, cfg.temperature, cfg.bias_velocity}, cfg.species, k_of_t, ts);
    emit(psi::ratio_curve_csv(curve));
    return kExitOk;
  }

  throw psi::config_error("unknown report kind '" + kind + "'");
}

int cmd_sequence(const std::string& config_path, const std::string& out_dir,
                 uint64_t seed) {
  const std::string config_text = psi::read_file(config_path);
  const psi::experiment_config cfg = psi::load_config(config_text);
  const psi::sequencer_options opts = psi::load_sequencer_options(config_text);
  const psi::frequency_plan plan = psi::default_frequency_plan();
  const psi::timeline t = psi::build_imu_cycle(cfg, plan, opts);
  const std::vector<std::string> violations = psi::validate_timeline(t, plan, cfg);
  const psi::pulse_sequence seq =
      psi::build_sequence(cfg.lmt_order, cfg.big_t, cfg.extra_intervals);
  const psi::separation_check sep = psi::resonance_separation_ok(
      cfg.bias_velocity, cfg.temperature, cfg.species);

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const psi::run_manifest manifest = psi::make_manifest(config_text, seed, "sequence");
  json j = json::parse(t.to_json());
  j["manifest"] = json::parse(manifest.to_json());
  j["violations"] = violations;
  j["resonance_separation"] = {
      {"ok", sep.ok}, {"ratio", sep.ratio}, {"margin", sep.margin}};
  psi::atomic_write_file((fs::path(out_dir) / "timeline.json").string(), j.dump(2) + "\n");
  psi::atomic_write_file((fs::path(out_dir) / "timeline.csv").string(), t.to_csv());
  psi::atomic_write_file((fs::path(out_dir) / "timeline.csv.manifest.json").string(),
                         manifest.to_json() + "\n");
  psi::atomic_write_file((fs::path(out_dir) / "pulses.json").string(),
                         seq.to_json() + "\n");
  psi::atomic_write_file((fs::path(out_dir) / "summary.txt").string(), t.summary());
  if (!sep.ok) {
    std::cerr << "warning: Raman resonance separation ratio " << sep.ratio
              << " is below the margin " << sep.margin << "\n";
  }
  std::cout << t.summary();
  if (!violations.empty()) {
    std::cerr << "timeline validation failed:\n";
    for (const std::string& v : violations) std::cerr << "  - " << v << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_validate(const std::string& config_path, long long trials, uint64_t seed,
                 const std::string& out_path, double k_omega_sigma, double phi_a) {
  const std::string config_text = psi::read_file(config_path);
  const psi::experiment_config cfg = psi::load_config(config_text);
  psi::mc_options opts;
  opts.k_omega = k_omega_sigma > 0 ? k_omega_sigma / psi::sigma_f(cfg) : -1.0;
  opts.phi_a = phi_a;
  const psi::mc_report rep = psi::monte_carlo_validate(cfg, trials, seed, opts);
  json j = json::parse(rep.to_json());
  j["manifest"] =
      json::parse(psi::make_manifest(config_text, seed, "validate").to_json());
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    psi::atomic_write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_demo(const std::string& out_dir, uint64_t seed);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-source interferometer IMU toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_path, method = "both", sweep, scenario_path;
  std::vector<std::string> images;
  uint64_t seed = 1;
  long long trials = 2000;
  double tau = 1.0, k_omega_sigma = -1.0, phi_a = 0.5;
  std::string kind;

  auto* sim = app.add_subcommand("simulate", "synthesize a fringe image");
  sim->add_option("--config", config_path, "experiment config JSON")->required();
  sim->add_option("--seed", seed, "RNG seed");
  sim->add_option("--out", out_path, "output directory")->required();

  auto* fit = app.add_subcommand("fit", "extract fringe parameters from image CSVs");
  fit->add_option("images", images, "image CSV paths")->required();
  fit->add_option("--out", out_path, "output file (JSON for one image, CSV for many)");
  fit->add_option("--method", method, "fourier | wls | both")
      ->check(CLI::IsMember({"fourier", "wls", "both"}));
  fit->add_option("--seed", seed, "RNG seed (manifest only)");

  auto* rep = app.add_subcommand("report", "sensitivity / systematics / bandwidth / lmt / broadening");
  rep->add_option("--config", config_path, "experiment config JSON")->required();
  rep->add_option("--kind", kind, "report kind")
      ->required()
      ->check(CLI::IsMember({"sensitivity", "systematics", "bandwidth", "lmt", "broadening"}));
  rep->add_option("--out", out_path, "output file");
  rep->add_option("--sweep", sweep, "PARAM=START:STOP:STEPS (emits CSV)");
  rep->add_option("--scenario", scenario_path, "scenario JSON (systematics/lmt/broadening)");
  rep->add_option("--tau", tau, "integration time, s");
  rep->add_option("--seed", seed, "RNG seed (manifest only)");

  auto* seq = app.add_subcommand("sequence", "compile the 3-axis hardware timeline");
  seq->add_option("--config", config_path, "experiment config JSON")->required();
  seq->add_option("--out", out_path, "output directory")->required();
  seq->add_option("--seed", seed, "RNG seed (manifest only)");

  auto* val = app.add_subcommand("validate", "Monte Carlo check of the variance predictions");
  val->add_option("--config", config_path, "experiment config JSON")->required();
  val->add_option("--trials", trials, "number of trials");
  val->add_option("--seed", seed, "RNG seed");
  val->add_option("--out", out_path, "output file");
  val->add_option("--k-omega-sigma", k_omega_sigma, "truth k_omega * sigma_f");
  val->add_option("--phi-a", phi_a, "truth phi_a, rad");

  auto* demo = app.add_subcommand("demo", "run the full pipeline on the bundled parameters");
  demo->add_option("--out", out_path, "output directory")->required();
  demo->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(config_path, seed, out_path);
    if (fit->parsed()) return cmd_fit(images, out_path, method, seed);
    if (rep->parsed())
      return cmd_report(config_path, kind, out_path, sweep, scenario_path, tau, seed);
    if (seq->parsed()) return cmd_sequence(config_path, out_path, seed);
    if (val->parsed())
      return cmd_validate(config_path, trials, seed, out_path, k_omega_sigma, phi_a);
    if (demo->parsed()) return cmd_demo(out_path, seed);
  } catch (const psi::estimation_error& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return kExitEstimation;
  } catch (const psi::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

namespace {

// End-to-end pipeline on the benchmark parameters; doubles as living
// documentation of every subcommand.
int cmd_demo(const std::string& out_dir, uint64_t seed) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  const std::string config_text = R"({
  "species": "Rb87",
  "lmt_order": 9,
  "big_t": "20 ms",
  "extra_intervals": ["18 ms", "16 ms", "14 ms", "12 ms", "10 ms",
                      "8 ms", "6 ms", "4 ms", "2 ms"],
  "contrast": 0.5,
  "atom_number": 1000000,
  "sigma_0": "0.2 mm",
  "temperature": "6 uK",
  "bias_velocity": "1 m/s",
  "expansion_time": "40.9 ms",
  "cycle_time": "1 s",
  "mot_load_time": "1 s",
  "pixel_pitch": "31.25 um",
  "grid_size": [256, 1],
  "scenario": { "k_omega": "20 rad/mm", "phi_a": 0.5 }
})";
  const std::string config_path = (fs::path(out_dir) / "demo_config.json").string();
  psi::atomic_write_file(config_path, config_text);

  std::cout << "== sensitivity ==\n";
  cmd_report(config_path, "sensitivity", "", "", "", 1.0, seed);
  std::cout << "== systematics (3 G -> 3.01 G step) ==\n";
  cmd_report(config_path, "systematics", "", "", "", 1.0, seed);
  std::cout << "== bandwidth ==\n";
  cmd_report(config_path, "bandwidth", "", "", "", 1.0, seed);
  std::cout << "== lmt optimum (eta = 0.9) ==\n";
  cmd_report(config_path, "lmt", "", "", "", 1.0, seed);
  std::cout << "== broadening curve -> " << out_dir << "/broadening.csv ==\n";
  cmd_report(config_path, "broadening",
             (fs::path(out_dir) / "broadening.csv").string(), "", "", 1.0, seed);
  std::cout << "== simulate -> fit round trip ==\n";
  cmd_simulate(config_path, seed, out_dir);
  cmd_fit({(fs::path(out_dir) / "image.csv").string()}, "", "both", seed);
  std::cout << "== timeline ==\n";
  const int rc = cmd_sequence(config_path, out_dir, seed);
  if (rc != kExitOk) return rc;
  std::cout << "== monte carlo (400 desk-scale trials, N = 10^4) ==\n";
  const std::string mc_config = R"({
  "species": "Rb87",
  "lmt_order": 0,
  "big_t": "20 ms",
  "contrast": 0.5,
  "atom_number": 10000,
  "sigma_0": "0.2 mm",
  "temperature": "6 uK",
  "bias_velocity": "1 m/s",
  "expansion_time": "40.9 ms",
  "cycle_time": "1 s",
  "mot_load_time": "1 s",
  "pixel_pitch": "31.25 um",
  "grid_size": [256, 1]
})";
  const std::string mc_path = (fs::path(out_dir) / "demo_mc_config.json").string();
  psi::atomic_write_file(mc_path, mc_config);
  return cmd_validate(mc_path, 400, seed, "", 20.0, 0.5);
}

}  // namespace
