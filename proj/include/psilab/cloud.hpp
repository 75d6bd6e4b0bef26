#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "psilab/species.hpp"

namespace psi {

// Fringe degradation caused by the finite initial cloud size. The exponent
// of the contrast loss needs a length scale to be dimensionally meaningful;
// length_scale records the one used (sigma_0 by default) so every emitted
// result carries the convention.
struct broadening_result {
  double b = 0;                  // 1 - sigma_0^2 / sigma_f^2
  double k_omega_observed = 0;   // b * k_omega, rad/m
  double contrast_observed = 0;  // c * exp[-(k_omega*L)^2 b(1-b)]
  double sensitivity_ratio = 0;  // b * exp[-(k_omega*L)^2 b(1-b)]
  double length_scale = 0;       // L, m
};

broadening_result broadening(double sigma_0, double sigma_f, double k_omega,
                             double contrast, double length_scale = -1.0);

struct ratio_curve_params {
  double sigma_0 = 0;      // m
  double temperature = 0;  // K
  double v_bias = 0;       // m/s (scenario record; not used by the ratio)
};

// Sensitivity ratio vs T. For each T the cloud expands for the full
// sequence span 2T measured from launch release.
std::vector<std::pair<double, double>> sensitivity_ratio_curve(
    const ratio_curve_params& params, const species_data& sp,
    const std::function<double(double)>& k_omega_of_t,
    const std::vector<double>& t_values);

// CSV with header "T_s,ratio".
std::string ratio_curve_csv(const std::vector<std::pair<double, double>>& curve);

struct flight_result {
  double travel = 0;  // m, along the launch axis
  double sag = 0;     // m, transverse drop
};

flight_result flight_kinematics(double v_bias, double sequence_span,
                                double transverse_g);

}  // namespace psi
