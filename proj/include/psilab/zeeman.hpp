#pragma once

#include <string>

#include "psilab/species.hpp"

namespace psi {

// Magnetic-field scenario for the quadratic Zeeman systematic: the atoms see
// b_first_half during [0, T) of the pulse sequence and b_second_half during
// [T, 2T). SI units (tesla, tesla/m).
struct zeeman_scenario {
  double b_first_half = 0;   // T
  double b_second_half = 0;  // T
  double gradient = 0;       // T/m
  double big_t = 0;          // s

  void validate() const;
};

// Second-order Zeeman shift of one m_F = 0 clock state,
// (g_S * (mu_B/h) * B)^2 / (4 * Delta_HFS), Hz. The two clock states shift
// oppositely, so the clock transition moves by twice this.
// Quadratic expansion only; valid for B << h*Delta_HFS/(g_S*mu_B) (~0.24 T
// for 87Rb), far above any field considered here.
double second_order_shift(double b_field, const species_data& sp);

double differential_clock_shift(double b_field, const species_data& sp);  // 2 * Delta_Z

// Interferometer phase error from the clock-shift step at mid-sequence:
// 2*pi * [2 Dz(B2) - 2 Dz(B1)] * T, rad.
double zeeman_phase_error(const zeeman_scenario& scn, const species_data& sp);

struct zeeman_force_result {
  double force = 0;           // N
  double force_dyn = 0;       // CGS display value
  double acceleration = 0;    // m/s^2
  double acceleration_g = 0;  // in units of standard gravity
};

// Gradient force h * dDz/dB * dB/dz on one clock state.
zeeman_force_result zeeman_force(double b_field, double db_dz,
                                 const species_data& sp);

}  // namespace psi
