#include "psilab/species.hpp"

#include <cmath>

#include "psilab/constants.hpp"
#include "psilab/errors.hpp"

namespace psi {

void species_data::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw config_error(std::string("species.") + name +
                         " must be strictly positive and finite");
    }
  };
  positive(mass, "mass");
  positive(wavelength, "wavelength");
  positive(hyperfine_splitting, "hyperfine_splitting");
  positive(saturation_intensity, "saturation_intensity");
  positive(electron_g_factor, "electron_g_factor");
  positive(bohr_magneton_over_h, "bohr_magneton_over_h");
}

species_data rb87() {
  species_data sp;
  sp.mass = 1.44316e-25;               // kg
  sp.wavelength = 780.241e-9;          // m
  sp.hyperfine_splitting = 6.8347e9;   // Hz
  sp.saturation_intensity = 50.1;      // W/m^2 (5.01 mW/cm^2)
  sp.electron_g_factor = 2.0;
  sp.bohr_magneton_over_h = 1.3996e10; // Hz/T (1.3996 MHz/G)
  return sp;
}

double wavenumber(const species_data& sp) {
  return constants::two_pi / sp.wavelength;
}

double k_eff(const species_data& sp) { return 2.0 * wavenumber(sp); }

double thermal_velocity(const species_data& sp, double temperature) {
  return std::sqrt(constants::boltzmann * temperature / sp.mass);
}

}  // namespace psi
