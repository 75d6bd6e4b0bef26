#pragma once

#include <string>
#include <vector>

#include "psilab/config.hpp"
#include "psilab/frequency_plan.hpp"
#include "psilab/sequence.hpp"
#include "psilab/timeline.hpp"

namespace psi {

// Hardware phase durations. Only mot_load comes from the experiment config;
// the rest default to the values below and are overridable (the compiled
// timeline lists which ones were left at their defaults).
struct sequencer_options {
  double molasses = 10e-3;         // s
  double launch = 1e-3;            // s
  double state_selection = 100e-6; // s
  double blow_away = 50e-6;        // s
  double imaging = 100e-6;         // s
  double pi_pulse = 10e-6;         // s, Raman gate width
  double half_pi_pulse = 5e-6;     // s
  double inter_axis_dead_time = 0; // s
  // Fields customized by the user (excluded from the assumed-defaults list).
  std::vector<std::string> overridden;
};

// Parses an optional "sequencer" object with unit-suffixed durations.
sequencer_options load_sequencer_options(const std::string& json_text);

// Compiles one axis measurement: MOT load, molasses, launch (Table-driven
// beam set), release, state selection, blow-away, LMT Raman train with the
// VCO schedule, imaging. Events are appended starting at t0; returns the
// segment bounds.
//
// Throws config_error when the free flight cannot contain the pulse train:
// state_selection + blow_away + 2T must not exceed expansion_time.
axis_segment build_axis_cycle(psi_axis axis, const experiment_config& cfg,
                              const pulse_sequence& seq,
                              const frequency_plan& plan,
                              const sequencer_options& opts, double t0,
                              std::vector<event>& out);

// Three axis segments back to back (PSI-1, PSI-2, PSI-3 by default).
timeline build_imu_cycle(const experiment_config& cfg,
                         const frequency_plan& plan,
                         const sequencer_options& opts = {},
                         const std::vector<psi_axis>& axis_order = {
                             psi_axis::psi1, psi_axis::psi2, psi_axis::psi3});

// Structural and physical consistency checks; violations are data, an empty
// list means the timeline is valid.
std::vector<std::string> validate_timeline(const timeline& t,
                                           const frequency_plan& plan,
                                           const experiment_config& cfg);

}  // namespace psi
