#pragma once

#include <utility>
#include <vector>

#include "psilab/sequence.hpp"
#include "psilab/species.hpp"

namespace psi {

// The three Raman resonance frequencies seen by atoms moving at bias
// velocity v in a retroreflected beam pair: co-propagating (no Doppler
// shift) and the two counter-propagating directions, shifted by
// +-(k_eff*v + recoil).
struct raman_lines {
  double f_co = 0;    // Hz, = hyperfine splitting
  double f_up = 0;    // Hz, effective direction +1
  double f_down = 0;  // Hz, effective direction -1
};

raman_lines raman_resonances(double v, const species_data& sp);

// Two-photon recoil frequency hbar*k_eff^2/(2m) / 2pi, Hz.
double recoil_frequency(const species_data& sp);

struct separation_check {
  bool ok = false;
  double ratio = 0;   // Doppler splitting over thermal width, = v / v_rms
  double margin = 0;  // required ratio
};

// The launch velocity must beat the thermal Doppler width by a healthy
// margin or the three lines blur together. Default margin 10.
separation_check resonance_separation_ok(double v, double temperature,
                                         const species_data& sp,
                                         double margin = 10.0);

// VCO frequency at each pulse of the sequence: f_up for direction +1,
// f_down for -1, constant between pulses.
std::vector<std::pair<double, double>> vco_schedule(const pulse_sequence& seq,
                                                    double v,
                                                    const species_data& sp);

}  // namespace psi
