#include "psilab/cloud.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "psilab/config.hpp"

namespace psi {

broadening_result broadening(double sigma_0, double sigma_f, double k_omega,
                             double contrast, double length_scale) {
  if (sigma_0 < 0 || !(sigma_f > 0) || sigma_0 > sigma_f) {
    throw std::domain_error("broadening requires 0 <= sigma_0 <= sigma_f");
  }
  broadening_result out;
  out.length_scale = length_scale < 0 ? sigma_0 : length_scale;
  const double r2 = (sigma_0 / sigma_f) * (sigma_0 / sigma_f);
  out.b = 1.0 - r2;
  out.k_omega_observed = out.b * k_omega;
  const double arg = k_omega * out.length_scale;
  const double damping = std::exp(-arg * arg * out.b * (1.0 - out.b));
  out.contrast_observed = contrast * damping;
  out.sensitivity_ratio = out.b * damping;
  return out;
}

std::vector<std::pair<double, double>> sensitivity_ratio_curve(
    const ratio_curve_params& params, const species_data& sp,
    const std::function<double(double)>& k_omega_of_t,
    const std::vector<double>& t_values) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(t_values.size());
  for (double t : t_values) {
    const double sf = sigma_f_at(params.sigma_0, sp, params.temperature, 2.0 * t);
    const double k = k_omega_of_t(t);
    curve.emplace_back(t, broadening(params.sigma_0, sf, k, 1.0).sensitivity_ratio);
  }
  return curve;
}

std::string ratio_curve_csv(const std::vector<std::pair<double, double>>& curve) {
  std::ostringstream os;
  os << "T_s,ratio\n";
  os.precision(12);
  for (const auto& [t, r] : curve) os << t << "," << r << "\n";
  return os.str();
}

flight_result flight_kinematics(double v_bias, double sequence_span,
                                double transverse_g) {
  if (v_bias < 0 || sequence_span < 0 || transverse_g < 0) {
    throw std::domain_error("flight_kinematics requires non-negative inputs");
  }
  return {v_bias * sequence_span,
          0.5 * transverse_g * sequence_span * sequence_span};
}

}  // namespace psi
