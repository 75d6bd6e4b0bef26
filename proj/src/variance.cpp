#include "psilab/variance.hpp"

#include <cmath>

#include "psilab/errors.hpp"

namespace psi {

variance_prediction numeric_variances(const std::vector<double>& f,
                                      const std::vector<double>& x,
                                      double k_omega, double phi_a,
                                      double contrast) {
  if (f.size() != x.size() || f.empty()) {
    throw estimation_error("numeric_variances: f and x must be equal-sized and non-empty");
  }
  const double c = contrast;
  const size_t n = f.size();

  double alpha = 0, beta = 0, gamma = 0, gamma_scale = 0;
  for (size_t l = 0; l < n; ++l) {
    if (!(f[l] > 0)) continue;
    const double s = std::sin(k_omega * x[l] + phi_a);
    const double w = 0.25 * c * c * f[l] * s * s;
    alpha += w * x[l] * x[l];
    beta += w * x[l];
    gamma += w;
    gamma_scale += 0.25 * c * c * f[l];  // sin^2 = 1 bound
  }
  // The gamma floor catches the every-pixel-on-an-extremum geometry, where
  // all three coefficients collapse to rounding noise and the relative
  // determinant test alone cannot fire.
  const double det = alpha * gamma - beta * beta;
  if (!(det > 1e-12 * alpha * gamma) || !(gamma > 1e-12 * gamma_scale)) {
    throw unidentifiable("numeric_variances: unidentifiable geometry (alpha*gamma - beta^2 ~ 0)");
  }

  variance_prediction out;
  out.regime = variance_regime::general_numeric;
  for (size_t l = 0; l < n; ++l) {
    if (!(f[l] > 0)) continue;
    const double ph = k_omega * x[l] + phi_a;
    const double s = std::sin(ph);
    const double co = std::cos(ph);
    // rhs of the per-pixel linear system, already divided by f(x_l)
    const double rk = -0.5 * c * x[l] * s;
    const double rp = -0.5 * c * s;
    const double dk_dp = (gamma * rk - beta * rp) / det;
    const double dphi_dp = (-beta * rk + alpha * rp) / det;
    const double var_p = 0.25 * (1.0 - c * c * co * co) * f[l];
    out.var_k_omega += dk_dp * dk_dp * var_p;
    out.var_phi_a += dphi_dp * dphi_dp * var_p;
  }
  return out;
}

variance_prediction closed_form_variances(double atom_number, double contrast,
                                          double sigma_f) {
  if (!(atom_number >= 1)) throw config_error("closed_form_variances: N must be >= 1");
  if (!(contrast > 0) || contrast > 1) {
    throw config_error("closed_form_variances: contrast must lie in (0, 1]");
  }
  if (!(sigma_f > 0)) throw config_error("closed_form_variances: sigma_f must be positive");
  variance_prediction out;
  out.regime = variance_regime::separated_closed_form;
  out.var_phi_a = (4.0 - contrast * contrast) /
                  (2.0 * atom_number * contrast * contrast);
  out.var_k_omega = out.var_phi_a / (sigma_f * sigma_f);
  return out;
}

}  // namespace psi
