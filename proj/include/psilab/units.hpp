#pragma once

#include <string>

#include "psilab/errors.hpp"

namespace psi {

// Physical dimension of a config scalar. Drives which unit suffixes are
// accepted and the conversion to SI base units.
enum class dimension {
  time,            // s, ms, us/μs, ns
  length,          // m, cm, mm, um/μm, nm
  temperature,     // K, mK, uK/μK, nK
  velocity,        // m/s, cm/s, mm/s
  acceleration,    // m/s^2, g, ug/μg, ng
  frequency,       // Hz, kHz, MHz, GHz
  magnetic_field,  // T, mT, uT, G, mG
  field_gradient,  // T/m, G/cm
  mass,            // kg, u (atomic mass unit)
  angular_rate,    // rad/s, mrad/s, urad/s, deg/s
  intensity,       // W/m^2, mW/cm^2
  wavenumber,      // rad/m, 1/m, rad/mm
  angle,           // rad, mrad, deg
  dimensionless,
};

// Parses "20 ms", "0.2mm", "6 uK", "1 G/cm", ... into SI base units.
// A bare number string is taken to be already in SI.
double parse_quantity(const std::string& text, dimension dim,
                      const std::string& field_name);

// SI scale factor for one unit token, e.g. ("ms", time) -> 1e-3.
// Throws config_error for a token that does not match the dimension.
double unit_scale(const std::string& unit, dimension dim,
                  const std::string& field_name);

}  // namespace psi
