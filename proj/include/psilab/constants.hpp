#pragma once

#include <numbers>

namespace psi::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

// CODATA 2018 exact / recommended values, SI.
inline constexpr double boltzmann = 1.380649e-23;       // J/K
inline constexpr double planck = 6.62607015e-34;        // J s
inline constexpr double hbar = planck / two_pi;         // J s
inline constexpr double standard_gravity = 9.80665;     // m/s^2

// Unit conversions used at the I/O boundary only.
inline constexpr double gauss_to_tesla = 1e-4;
inline constexpr double newton_to_dyn = 1e5;

}  // namespace psi::constants
