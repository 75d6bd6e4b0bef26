#include "psilab/launch.hpp"

#include <cmath>

#include <json.hpp>

#include "psilab/errors.hpp"

namespace psi {

std::string axis_name(psi_axis a) {
  switch (a) {
    case psi_axis::psi1: return "PSI-1";
    case psi_axis::psi2: return "PSI-2";
    case psi_axis::psi3: return "PSI-3";
  }
  return "?";
}

psi_axis axis_from_name(const std::string& name) {
  if (name == "PSI-1" || name == "psi1" || name == "1") return psi_axis::psi1;
  if (name == "PSI-2" || name == "psi2" || name == "2") return psi_axis::psi2;
  if (name == "PSI-3" || name == "psi3" || name == "3") return psi_axis::psi3;
  throw config_error("unknown PSI axis '" + name + "'");
}

std::string beam_name(mot_beam b) {
  switch (b) {
    case mot_beam::mot1: return "MOT 1";
    case mot_beam::mot1p: return "MOT 1'";
    case mot_beam::mot2: return "MOT 2";
    case mot_beam::mot2p: return "MOT 2'";
    case mot_beam::mot3: return "MOT 3";
    case mot_beam::mot3p: return "MOT 3'";
  }
  return "?";
}

launch_plan_t launch_plan(psi_axis axis) {
  launch_plan_t plan;
  plan.axis = axis;
  switch (axis) {
    case psi_axis::psi1:
      plan.reduced_beams = {mot_beam::mot2p, mot_beam::mot3p};
      break;
    case psi_axis::psi2:
      plan.reduced_beams = {mot_beam::mot1p, mot_beam::mot2p, mot_beam::mot3};
      break;
    case psi_axis::psi3:
      plan.reduced_beams = {mot_beam::mot1, mot_beam::mot2p, mot_beam::mot3};
      break;
  }
  return plan;
}

std::string launch_plan_t::to_json() const {
  nlohmann::json j;
  j["axis"] = axis_name(axis);
  j["reduced_beams"] = nlohmann::json::array();
  for (mot_beam b : reduced_beams) j["reduced_beams"].push_back(beam_name(b));
  return j.dump();
}

vec3 beam_direction(mot_beam b) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (b) {
    case mot_beam::mot1: return {1, 0, 0};
    case mot_beam::mot1p: return {-1, 0, 0};
    case mot_beam::mot2: return {0, s, s};
    case mot_beam::mot2p: return {0, -s, -s};
    case mot_beam::mot3: return {0, -s, s};
    case mot_beam::mot3p: return {0, s, -s};
  }
  return {0, 0, 0};
}

vec3 axis_direction(psi_axis a) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (a) {
    case psi_axis::psi1: return {0, 0, 1};
    case psi_axis::psi2: return {s, s, 0};
    case psi_axis::psi3: return {-s, s, 0};
  }
  return {0, 0, 0};
}

double launch_frequency_reduction(mot_beam b, psi_axis axis, double v,
                                  double wavelength) {
  const double proj = std::abs(dot(beam_direction(b), axis_direction(axis)));
  return 2.0 * v * proj / wavelength;
}

}  // namespace psi
