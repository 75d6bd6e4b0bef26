#pragma once

#include <string>
#include <vector>

#include "psilab/phases.hpp"

namespace psi {

enum class psi_axis { psi1, psi2, psi3 };

enum class mot_beam { mot1, mot1p, mot2, mot2p, mot3, mot3p };

std::string axis_name(psi_axis a);      // "PSI-1", ...
std::string beam_name(mot_beam b);      // "MOT 1", "MOT 1'", ...
psi_axis axis_from_name(const std::string& name);

// Moving-molasses launch recipe for one interferometer axis: the MOT beams
// whose frequencies are reduced to set the molasses in motion.
struct launch_plan_t {
  psi_axis axis = psi_axis::psi1;
  std::vector<mot_beam> reduced_beams;

  std::string to_json() const;
};

launch_plan_t launch_plan(psi_axis axis);

// Chamber geometry: MOT pair 1 along x, pairs 2 and 3 at 45 degrees in the
// y-z plane. Launch axes are PSI-1 = z, PSI-2/3 in the x-y plane.
vec3 beam_direction(mot_beam b);
vec3 axis_direction(psi_axis a);

// Optical frequency reduction for one reduced beam so the molasses moves at
// v along the axis: 2 * v * |b_hat . d_hat| / lambda, Hz.
double launch_frequency_reduction(mot_beam b, psi_axis axis, double v,
                                  double wavelength);

}  // namespace psi
