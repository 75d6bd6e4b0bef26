#include "psilab/frequency_plan.hpp"

#include <cmath>

#include <json.hpp>

namespace psi {

frequency_plan default_frequency_plan() { return frequency_plan{}; }

std::vector<std::string> frequency_plan::check_identities() const {
  std::vector<std::string> violations;
  if (mot_detuning() != -12e6) {
    violations.push_back("MOT detuning identity broken: lock_offset + 2*mot_aom = " +
                         std::to_string(mot_detuning() / 1e6) + " MHz, expected -12 MHz");
  }
  if (molasses_detuning() != -92e6) {
    violations.push_back("molasses detuning identity broken: lock_offset + 2*molasses_aom = " +
                         std::to_string(molasses_detuning() / 1e6) + " MHz, expected -92 MHz");
  }
  return violations;
}

std::string frequency_plan::to_json() const {
  nlohmann::json j;
  j["lock_offset_hz"] = lock_offset;
  j["mot_aom_hz"] = mot_aom;
  j["molasses_aom_hz"] = molasses_aom;
  j["repump_eom_hz"] = repump_eom;
  j["raman_aom_hz"] = raman_aom;
  j["raman_eom_nominal_hz"] = raman_eom_nominal;
  j["imaging_offset_hz"] = imaging_offset;
  j["mot_detuning_hz"] = mot_detuning();
  j["molasses_detuning_hz"] = molasses_detuning();
  return j.dump(2);
}

}  // namespace psi
