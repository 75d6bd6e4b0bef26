#pragma once

#include <string>

#include "psilab/sequence.hpp"

namespace psi {

struct vec3 {
  double x = 0, y = 0, z = 0;

  vec3 operator+(const vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  vec3 operator-(const vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const vec3& a, const vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline vec3 cross(const vec3& a, const vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const vec3& a);

// Rotation-fringe wavevector in its two normalization conventions. They
// differ in whether the extra-interval sum enters once or twice; both are
// reported so downstream consumers can pick explicitly. Simulation uses
// k_omega so that simulate -> fit round trips stay self-consistent.
struct fringe_wavevectors {
  vec3 k_omega;           // k_eff x Omega * (T + sum T_j)
  vec3 k_omega_appendix;  // k_eff x Omega * (T + 2 sum T_j)
};

struct phase_observables {
  double phi_a = 0;  // rad
  fringe_wavevectors k;
};

// Acceleration phase k_eff * a * T * (T + 2 sum T_j), signed by the
// effective direction of A0. `a` is the component along the Raman axis.
double acceleration_phase(const pulse_sequence& seq, double a, double k_eff);

// Rotation phase (k_eff x Omega) . r * (T + 2 sum T_j). Valid in the
// |Omega| * T << 1 linearization; above 0.1 a warning is emitted.
double rotation_phase(const pulse_sequence& seq, const vec3& omega,
                      const vec3& r, const vec3& k_eff_vec,
                      std::string* warning = nullptr);

fringe_wavevectors fringe_wavevector(const pulse_sequence& seq,
                                     const vec3& omega, const vec3& k_eff_vec);

}  // namespace psi
