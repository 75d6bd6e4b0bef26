#include "psilab/zeeman.hpp"

#include <cmath>

#include "psilab/constants.hpp"
#include "psilab/errors.hpp"

namespace psi {

void zeeman_scenario::validate() const {
  if (b_first_half < 0 || b_second_half < 0 || gradient < 0) {
    throw config_error("zeeman_scenario: fields and gradient must be non-negative");
  }
  if (!(big_t > 0)) throw config_error("zeeman_scenario: T must be positive");
}

double second_order_shift(double b_field, const species_data& sp) {
  if (b_field < 0) throw config_error("second_order_shift: B must be >= 0");
  const double gain = sp.electron_g_factor * sp.bohr_magneton_over_h * b_field;
  return gain * gain / (4.0 * sp.hyperfine_splitting);
}

double differential_clock_shift(double b_field, const species_data& sp) {
  return 2.0 * second_order_shift(b_field, sp);
}

double zeeman_phase_error(const zeeman_scenario& scn, const species_data& sp) {
  scn.validate();
  const double df = differential_clock_shift(scn.b_second_half, sp) -
                    differential_clock_shift(scn.b_first_half, sp);
  return constants::two_pi * df * scn.big_t;
}

zeeman_force_result zeeman_force(double b_field, double db_dz,
                                 const species_data& sp) {
  if (b_field < 0 || db_dz < 0) {
    throw config_error("zeeman_force: inputs must be non-negative");
  }
  const double mu = sp.electron_g_factor * sp.bohr_magneton_over_h;  // Hz/T
  const double dshift_db = mu * mu * b_field / (2.0 * sp.hyperfine_splitting);  // Hz/T
  zeeman_force_result out;
  out.force = constants::planck * dshift_db * db_dz;
  out.force_dyn = out.force * constants::newton_to_dyn;
  out.acceleration = out.force / sp.mass;
  out.acceleration_g = out.acceleration / constants::standard_gravity;
  return out;
}

}  // namespace psi
