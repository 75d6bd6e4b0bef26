#pragma once

#include <vector>

namespace psi {

enum class variance_regime { general_numeric, separated_closed_form };

struct variance_prediction {
  double var_k_omega = 0;  // rad^2/m^2
  double var_phi_a = 0;    // rad^2
  variance_regime regime = variance_regime::general_numeric;
};

// Exact shot-noise propagation through the weighted-least-squares estimator:
// assembles the alpha/beta/gamma coefficients over the actual pixel phases
// (no phase averaging), solves the per-pixel 2x2 sensitivity system, and
// accumulates the per-pixel binomial variances.
//
// Throws unidentifiable when alpha*gamma - beta^2 collapses (below 1e-12 of
// alpha*gamma), e.g. when every pixel sits on a fringe extremum.
variance_prediction numeric_variances(const std::vector<double>& f,
                                      const std::vector<double>& x,
                                      double k_omega, double phi_a,
                                      double contrast);

// Closed-form limit valid when the fringe count is large:
// var(phi_a) = (4 - c^2)/(2 N c^2), var(k_omega) = same / sigma_f^2.
variance_prediction closed_form_variances(double atom_number, double contrast,
                                          double sigma_f);

}  // namespace psi
