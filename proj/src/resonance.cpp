#include "psilab/resonance.hpp"

#include <cmath>
#include <limits>

#include "psilab/constants.hpp"
#include "psilab/errors.hpp"

namespace psi {

double recoil_frequency(const species_data& sp) {
  const double ke = k_eff(sp);
  return constants::hbar * ke * ke / (2.0 * sp.mass) / constants::two_pi;
}

raman_lines raman_resonances(double v, const species_data& sp) {
  if (v < 0) throw config_error("raman_resonances: bias velocity must be >= 0");
  const double doppler_hz = k_eff(sp) * v / constants::two_pi;
  const double shift = doppler_hz + recoil_frequency(sp);
  raman_lines out;
  out.f_co = sp.hyperfine_splitting;
  out.f_up = sp.hyperfine_splitting + shift;
  out.f_down = sp.hyperfine_splitting - shift;
  return out;
}

separation_check resonance_separation_ok(double v, double temperature,
                                         const species_data& sp,
                                         double margin) {
  separation_check out;
  out.margin = margin;
  const double v_rms = thermal_velocity(sp, temperature);
  if (v_rms <= 0) {
    out.ratio = v > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    out.ok = v > 0;
    return out;
  }
  out.ratio = v / v_rms;
  out.ok = out.ratio >= margin;
  return out;
}

std::vector<std::pair<double, double>> vco_schedule(const pulse_sequence& seq,
                                                    double v,
                                                    const species_data& sp) {
  const raman_lines lines = raman_resonances(v, sp);
  std::vector<std::pair<double, double>> out;
  out.reserve(seq.pulses.size());
  for (const pulse& p : seq.pulses) {
    out.emplace_back(p.time, p.direction > 0 ? lines.f_up : lines.f_down);
  }
  return out;
}

}  // namespace psi
