#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psilab/species.hpp"

namespace psi {

// Shared experiment configuration. All values SI after ingestion.
struct experiment_config {
  species_data species;
  int lmt_order = 0;                    // n >= 0
  double big_t = 0;                     // T, s
  std::vector<double> extra_intervals;  // T_j, s, exactly lmt_order entries
  double contrast = 0;                  // c in (0, 1]
  long long atom_number = 0;            // N
  double sigma_0 = 0;                   // m
  double temperature = 0;               // K
  double bias_velocity = 0;             // m/s
  double expansion_time = 0;            // s
  double cycle_time = 0;                // tau_0, s
  double mot_load_time = 0;             // tau_MOT, s
  double pixel_pitch = 0;               // m
  std::array<int, 2> grid_size = {0, 0};

  void validate() const;  // throws config_error naming the offending field
};

// Loads a config from a JSON document with unit-suffixed scalar fields
// (e.g. "big_t": "20 ms"). "species" is either the string "Rb87" or an
// object of unit-suffixed fields. Validates before returning.
experiment_config load_config(const std::string& json_text);
experiment_config load_config_file(const std::string& path);

// Momentum transfer divided by hbar for LMT order n: (n + 1) * k_eff.
double momentum_transfer_wavenumber(const experiment_config& cfg);

// Final cloud size sqrt(sigma_0^2 + (kB*T/m) * t_exp^2), m.
double sigma_f(const experiment_config& cfg);
double sigma_f_at(double sigma_0, const species_data& sp, double temperature,
                  double expansion_time);

}  // namespace psi
