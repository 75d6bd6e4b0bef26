#include "psilab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "psilab/constants.hpp"
#include "psilab/errors.hpp"
#include "psilab/units.hpp"

namespace psi {

namespace {

using nlohmann::json;

double get_quantity(const json& j, const std::string& key, dimension dim) {
  if (!j.contains(key)) throw config_error("missing config field '" + key + "'");
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_quantity(v.get<std::string>(), dim, key);
  throw config_error("config field '" + key + "' must be a number or a unit-suffixed string");
}

species_data parse_species(const json& j) {
  if (!j.contains("species")) return rb87();
  const json& s = j.at("species");
  if (s.is_string()) {
    std::string name = s.get<std::string>();
    if (name == "Rb87" || name == "87Rb" || name == "rb87") return rb87();
    throw config_error("unknown built-in species '" + name + "'");
  }
  species_data sp;
  sp.mass = get_quantity(s, "mass", dimension::mass);
  sp.wavelength = get_quantity(s, "wavelength", dimension::length);
  sp.hyperfine_splitting = get_quantity(s, "hyperfine_splitting", dimension::frequency);
  sp.saturation_intensity = get_quantity(s, "saturation_intensity", dimension::intensity);
  sp.electron_g_factor = get_quantity(s, "electron_g_factor", dimension::dimensionless);
  // Accepts Hz/T (bare) or MHz/G via an explicit string suffix.
  if (s.at("bohr_magneton_over_h").is_string()) {
    std::string text = s.at("bohr_magneton_over_h").get<std::string>();
    auto pos = text.find("MHz/G");
    if (pos != std::string::npos) {
      sp.bohr_magneton_over_h = std::strtod(text.c_str(), nullptr) * 1e6 / constants::gauss_to_tesla;
    } else {
      sp.bohr_magneton_over_h = std::strtod(text.c_str(), nullptr);
    }
  } else {
    sp.bohr_magneton_over_h = s.at("bohr_magneton_over_h").get<double>();
  }
  return sp;
}

}  // namespace

void experiment_config::validate() const {
  species.validate();
  auto positive = [](double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw config_error(std::string(name) + " must be strictly positive and finite");
    }
  };
  if (lmt_order < 0) throw config_error("lmt_order must be >= 0");
  positive(big_t, "big_t");
  if (static_cast<int>(extra_intervals.size()) != lmt_order) {
    throw config_error("extra_intervals must have exactly lmt_order entries (" +
                       std::to_string(extra_intervals.size()) + " given, " +
                       std::to_string(lmt_order) + " required)");
  }
  for (double t : extra_intervals) positive(t, "extra_intervals entry");
  if (!(contrast > 0) || contrast > 1.0) throw config_error("contrast must lie in (0, 1]");
  if (atom_number < 1) throw config_error("atom_number must be >= 1");
  if (sigma_0 < 0 || !std::isfinite(sigma_0)) throw config_error("sigma_0 must be non-negative");
  positive(temperature, "temperature");
  if (bias_velocity < 0) throw config_error("bias_velocity must be non-negative");
  positive(expansion_time, "expansion_time");
  positive(cycle_time, "cycle_time");
  positive(mot_load_time, "mot_load_time");
  positive(pixel_pitch, "pixel_pitch");
  if (grid_size[0] < 1 || grid_size[1] < 1) throw config_error("grid_size entries must be >= 1");
  if (!(sigma_0 < sigma_f(*this))) {
    throw config_error("sigma_0 must be smaller than the derived final size sigma_f");
  }
}

experiment_config load_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  experiment_config cfg;
  cfg.species = parse_species(j);
  cfg.lmt_order = j.value("lmt_order", 0);
  cfg.big_t = get_quantity(j, "big_t", dimension::time);
  if (j.contains("extra_intervals")) {
    for (const auto& v : j.at("extra_intervals")) {
      if (v.is_number()) {
        cfg.extra_intervals.push_back(v.get<double>());
      } else {
        cfg.extra_intervals.push_back(
            parse_quantity(v.get<std::string>(), dimension::time, "extra_intervals"));
      }
    }
  }
  cfg.contrast = get_quantity(j, "contrast", dimension::dimensionless);
  if (!j.contains("atom_number")) throw config_error("missing config field 'atom_number'");
  cfg.atom_number = j.at("atom_number").get<long long>();
  cfg.sigma_0 = get_quantity(j, "sigma_0", dimension::length);
  cfg.temperature = get_quantity(j, "temperature", dimension::temperature);
  cfg.bias_velocity = get_quantity(j, "bias_velocity", dimension::velocity);
  cfg.expansion_time = get_quantity(j, "expansion_time", dimension::time);
  cfg.cycle_time = get_quantity(j, "cycle_time", dimension::time);
  cfg.mot_load_time = get_quantity(j, "mot_load_time", dimension::time);
  cfg.pixel_pitch = get_quantity(j, "pixel_pitch", dimension::length);
  if (j.contains("grid_size")) {
    cfg.grid_size = {j.at("grid_size").at(0).get<int>(), j.at("grid_size").at(1).get<int>()};
  }
  cfg.validate();
  return cfg;
}

experiment_config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str());
}

double momentum_transfer_wavenumber(const experiment_config& cfg) {
  return (cfg.lmt_order + 1) * k_eff(cfg.species);
}

double sigma_f_at(double sigma_0, const species_data& sp, double temperature,
                  double expansion_time) {
  const double v = thermal_velocity(sp, temperature);
  return std::sqrt(sigma_0 * sigma_0 + v * v * expansion_time * expansion_time);
}

double sigma_f(const experiment_config& cfg) {
  return sigma_f_at(cfg.sigma_0, cfg.species, cfg.temperature, cfg.expansion_time);
}

}  // namespace psi
