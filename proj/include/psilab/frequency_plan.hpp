#pragma once

#include <string>
#include <vector>

namespace psi {

// Laser frequency plan relative to the lock point (the F=2 -> F'=3
// crossover lock sits 212 MHz red of that transition). AOM fields are drive
// frequencies; MOT/molasses AOMs run double-pass, so the optical shift is
// twice the drive.
struct frequency_plan {
  double lock_offset = -212e6;     // Hz, laser relative to F=2 -> F'=3
  double mot_aom = 100e6;          // Hz drive, double-pass upshift
  double molasses_aom = 60e6;      // Hz drive
  double repump_eom = 6.623e9;     // Hz, +1 sideband reaches F=1 -> F'=2
  double raman_aom = -500e6;       // Hz optical offset (drive is |value|)
  double raman_eom_nominal = 6.835e9;  // Hz; actual values come from the
                                       // Raman resonance calculation
  double imaging_offset = 212e6;   // Hz, blue shift back to resonance

  double mot_detuning() const { return lock_offset + 2.0 * mot_aom; }
  double molasses_detuning() const { return lock_offset + 2.0 * molasses_aom; }

  // Verifies the -12 MHz MOT and -92 MHz molasses detuning identities.
  std::vector<std::string> check_identities() const;

  std::string to_json() const;
};

frequency_plan default_frequency_plan();

}  // namespace psi
