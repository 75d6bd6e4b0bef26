#pragma once

#include <string>

namespace psi {

// Atom species record. All values SI; magnetic quantities per tesla.
struct species_data {
  double mass = 0;                 // kg
  double wavelength = 0;           // m, D2 line
  double hyperfine_splitting = 0;  // Hz
  double saturation_intensity = 0; // W/m^2
  double electron_g_factor = 0;    // dimensionless
  double bohr_magneton_over_h = 0; // Hz/T

  // Throws config_error naming the offending field.
  void validate() const;
};

// Built-in 87Rb record (D2 line).
species_data rb87();

// Single-photon wavenumber 2*pi/lambda, rad/m.
double wavenumber(const species_data& sp);

// Effective two-photon wavenumber of a counter-propagating Raman pair,
// magnitude 2k, rad/m.
double k_eff(const species_data& sp);

// Thermal rms velocity sqrt(kB*T/m) along one axis, m/s.
double thermal_velocity(const species_data& sp, double temperature);

}  // namespace psi
