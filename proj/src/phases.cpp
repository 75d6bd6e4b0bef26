#include "psilab/phases.hpp"

#include <cmath>

namespace psi {

double norm(const vec3& a) { return std::sqrt(dot(a, a)); }

namespace {

int a0_direction(const pulse_sequence& seq) {
  for (const pulse& p : seq.pulses) {
    if (p.family == 'A' && p.index == 0) return p.direction;
  }
  return +1;
}

}  // namespace

double acceleration_phase(const pulse_sequence& seq, double a, double k_eff) {
  const double t = seq.big_t;
  return a0_direction(seq) * k_eff * a * t * (t + 2.0 * seq.interval_sum());
}

double rotation_phase(const pulse_sequence& seq, const vec3& omega,
                      const vec3& r, const vec3& k_eff_vec,
                      std::string* warning) {
  if (warning && norm(omega) * seq.big_t > 0.1) {
    *warning = "rotation_phase: |Omega|*T = " +
               std::to_string(norm(omega) * seq.big_t) +
               " exceeds 0.1; the linearized phase formula degrades";
  }
  return dot(cross(k_eff_vec, omega), r) *
         (seq.big_t + 2.0 * seq.interval_sum());
}

fringe_wavevectors fringe_wavevector(const pulse_sequence& seq,
                                     const vec3& omega, const vec3& k_eff_vec) {
  const vec3 base = cross(k_eff_vec, omega);
  fringe_wavevectors out;
  out.k_omega = base * (seq.big_t + seq.interval_sum());
  out.k_omega_appendix = base * (seq.big_t + 2.0 * seq.interval_sum());
  return out;
}

}  // namespace psi
