#include "psilab/sequencer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "psilab/errors.hpp"
#include "psilab/resonance.hpp"
#include "psilab/units.hpp"

namespace psi {

namespace {

constexpr mot_beam kAllBeams[] = {mot_beam::mot1, mot_beam::mot1p,
                                  mot_beam::mot2, mot_beam::mot2p,
                                  mot_beam::mot3, mot_beam::mot3p};

// Variable retarder routing: VR1/VR2 steer the Raman beam, VR3/VR4 the
// imaging beam. State "0" selects axis 1 at the first splitter; "1" passes
// to the second splitter which picks axis 2 ("0") or axis 3 ("1").
std::pair<std::string, std::string> vr_states(psi_axis a) {
  switch (a) {
    case psi_axis::psi1: return {"0", "0"};
    case psi_axis::psi2: return {"1", "0"};
    case psi_axis::psi3: return {"1", "1"};
  }
  return {"0", "0"};
}

}  // namespace

sequencer_options load_sequencer_options(const std::string& json_text) {
  sequencer_options opts;
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.contains("sequencer")) return opts;
  const nlohmann::json& s = j.at("sequencer");
  auto take = [&](const char* key, double& field) {
    if (!s.contains(key)) return;
    const auto& v = s.at(key);
    field = v.is_number() ? v.get<double>()
                          : parse_quantity(v.get<std::string>(), dimension::time, key);
    opts.overridden.push_back(key);
  };
  take("molasses", opts.molasses);
  take("launch", opts.launch);
  take("state_selection", opts.state_selection);
  take("blow_away", opts.blow_away);
  take("imaging", opts.imaging);
  take("pi_pulse", opts.pi_pulse);
  take("half_pi_pulse", opts.half_pi_pulse);
  take("inter_axis_dead_time", opts.inter_axis_dead_time);
  return opts;
}

axis_segment build_axis_cycle(psi_axis axis, const experiment_config& cfg,
                              const pulse_sequence& seq,
                              const frequency_plan& plan,
                              const sequencer_options& opts, double t0,
                              std::vector<event>& out) {
  if (!(cfg.bias_velocity > 0)) {
    throw config_error("axis cycle for " + axis_name(axis) +
                       ": the launch phase requires a positive bias_velocity");
  }
  const double flight_needed = opts.state_selection + opts.blow_away + seq.span();
  if (flight_needed > cfg.expansion_time) {
    throw config_error(
        "axis cycle for " + axis_name(axis) +
        ": state_selection + blow_away + 2T = " + std::to_string(flight_needed) +
        " s exceeds the free-flight budget expansion_time = " +
        std::to_string(cfg.expansion_time) + " s");
  }

  const raman_lines lines = raman_resonances(cfg.bias_velocity, cfg.species);
  const auto [vr_first, vr_second] = vr_states(axis);

  // Beam routing for the whole segment: VR1/VR2 steer the Raman beam,
  // VR3/VR4 the imaging beam.
  out.push_back({t0, 0, channel::vr_1, action::set_state, 0, vr_first});
  out.push_back({t0, 0, channel::vr_2, action::set_state, 0, vr_second});
  out.push_back({t0, 0, channel::vr_3, action::set_state, 0, vr_first});
  out.push_back({t0, 0, channel::vr_4, action::set_state, 0, vr_second});

  // MOT load.
  out.push_back({t0, cfg.mot_load_time, channel::mot_coils, action::gate_on, 0, ""});
  for (mot_beam b : kAllBeams) {
    out.push_back({t0, 0, mot_aom_channel(b), action::set_frequency, plan.mot_aom, ""});
    out.push_back({t0, cfg.mot_load_time + opts.molasses + opts.launch,
                   mot_aom_channel(b), action::gate_on, 0, ""});
  }
  out.push_back({t0, 0, channel::repump_eom, action::set_frequency, plan.repump_eom, ""});

  // Molasses: coils off, AOMs ramp to 60 MHz. The repump sideband rides the
  // carrier, so re-asserting the EOM frequency here marks the 80 MHz
  // detuning ramp without changing the drive value.
  const double t_molasses = t0 + cfg.mot_load_time;
  out.push_back({t_molasses, 0, channel::mot_coils, action::gate_off, 0, ""});
  for (mot_beam b : kAllBeams) {
    out.push_back({t_molasses, 0, mot_aom_channel(b), action::set_frequency,
                   plan.molasses_aom, ""});
  }
  out.push_back({t_molasses, 0, channel::repump_eom, action::set_frequency,
                 plan.repump_eom, ""});

  // Launch: reduce the Table-driven beam set. Double-pass AOMs shift the
  // optical frequency by twice the drive change.
  const double t_launch = t_molasses + opts.molasses;
  const launch_plan_t lp = launch_plan(axis);
  for (mot_beam b : lp.reduced_beams) {
    const double optical_reduction = launch_frequency_reduction(
        b, axis, cfg.bias_velocity, cfg.species.wavelength);
    out.push_back({t_launch, 0, mot_aom_channel(b), action::set_frequency,
                   plan.molasses_aom - optical_reduction / 2.0, ""});
  }

  // Release: all light off, bias field on for the Raman phase.
  const double t_release = t_launch + opts.launch;
  for (mot_beam b : kAllBeams) {
    out.push_back({t_release, 0, mot_aom_channel(b), action::gate_off, 0, ""});
  }
  out.push_back({t_release, cfg.expansion_time, channel::bias_coil, action::gate_on, 0, ""});

  // State selection: velocity-selective counter-propagating pi pulse in the
  // +direction, then the imaging beam blows away the leftovers.
  out.push_back({t_release, 0, channel::raman_aom, action::set_frequency,
                 std::abs(plan.raman_aom), ""});
  out.push_back({t_release, 0, channel::raman_eom, action::set_frequency, lines.f_up, ""});
  out.push_back({t_release, opts.state_selection, channel::raman_aom, action::gate_on, 0, ""});
  const double t_blow = t_release + opts.state_selection;
  out.push_back({t_blow, 0, channel::imaging_aom, action::set_frequency,
                 plan.imaging_offset, ""});
  out.push_back({t_blow, opts.blow_away, channel::imaging_aom, action::gate_on, 0, ""});

  // LMT Raman train.
  const double t_raman = t_blow + opts.blow_away;
  for (const pulse& p : seq.pulses) {
    const double t_pulse = t_raman + p.time;
    const double width =
        p.kind == pulse_kind::half_pi ? opts.half_pi_pulse : opts.pi_pulse;
    out.push_back({t_pulse, 0, channel::raman_eom, action::set_frequency,
                   p.direction > 0 ? lines.f_up : lines.f_down, ""});
    out.push_back({t_pulse, width, channel::raman_aom, action::gate_on, 0, ""});
  }

  // Imaging at the end of the free flight.
  const double t_image = t_release + cfg.expansion_time;
  out.push_back({t_image, 0, channel::bias_coil, action::gate_off, 0, ""});
  out.push_back({t_image, opts.imaging, channel::imaging_aom, action::gate_on, 0, ""});
  out.push_back({t_image, opts.imaging, channel::camera, action::gate_on, 0, ""});

  axis_segment seg;
  seg.axis = axis;
  seg.t_start = t0;
  seg.t_end = t_image + opts.imaging + opts.inter_axis_dead_time;
  seg.raman_start = t_raman;
  return seg;
}

timeline build_imu_cycle(const experiment_config& cfg,
                         const frequency_plan& plan,
                         const sequencer_options& opts,
                         const std::vector<psi_axis>& axis_order) {
  const pulse_sequence seq =
      build_sequence(cfg.lmt_order, cfg.big_t, cfg.extra_intervals);

  timeline t;
  t.axis_order = axis_order;
  double cursor = 0;
  for (psi_axis axis : axis_order) {
    const axis_segment seg =
        build_axis_cycle(axis, cfg, seq, plan, opts, cursor, t.events);
    t.segments.push_back(seg);
    cursor = seg.t_end;
  }
  std::stable_sort(t.events.begin(), t.events.end(), event_order);
  const event& last = t.events.back();
  t.total_duration = std::max(cursor, last.t_start + last.duration);
  t.implied_bandwidth = 1.0 / t.total_duration;

  static const std::pair<const char*, double sequencer_options::*> kDefaults[] = {
      {"molasses", &sequencer_options::molasses},
      {"launch", &sequencer_options::launch},
      {"state_selection", &sequencer_options::state_selection},
      {"blow_away", &sequencer_options::blow_away},
      {"imaging", &sequencer_options::imaging},
      {"pi_pulse", &sequencer_options::pi_pulse},
      {"half_pi_pulse", &sequencer_options::half_pi_pulse},
      {"inter_axis_dead_time", &sequencer_options::inter_axis_dead_time},
  };
  for (const auto& [name, member] : kDefaults) {
    if (std::find(opts.overridden.begin(), opts.overridden.end(), name) ==
        opts.overridden.end()) {
      t.assumed_defaults.push_back(std::string(name) + " = " +
                                   std::to_string(opts.*member) + " s (assumption)");
    }
  }
  return t;
}

std::vector<std::string> validate_timeline(const timeline& t,
                                           const frequency_plan& plan,
                                           const experiment_config& cfg) {
  std::vector<std::string> v = plan.check_identities();

  if (t.events.empty()) {
    v.push_back("timeline has no events");
    return v;
  }

  // Ordering, durations, frequency positivity.
  for (size_t i = 0; i < t.events.size(); ++i) {
    const event& e = t.events[i];
    if (e.duration < 0) {
      v.push_back("event " + std::to_string(i) + " has negative duration");
    }
    if (e.act == action::set_frequency && !(e.value_hz > 0)) {
      v.push_back("event " + std::to_string(i) + " (" + channel_name(e.ch) +
                  ") has a non-positive frequency");
    }
    if (i > 0 && event_order(e, t.events[i - 1])) {
      v.push_back("events " + std::to_string(i - 1) + " and " + std::to_string(i) +
                  " are out of order");
    }
  }

  const event& last = t.events.back();
  if (std::abs(t.total_duration - std::max(last.t_start + last.duration,
                                           t.segments.empty() ? 0.0 : t.segments.back().t_end)) >
      1e-9 * std::max(1.0, t.total_duration)) {
    v.push_back("total_duration does not match the last event");
  }

  const raman_lines lines = raman_resonances(cfg.bias_velocity, cfg.species);
  auto is_resonance = [&](double f) {
    auto close = [](double a, double b) {
      return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
    };
    return close(f, lines.f_up) || close(f, lines.f_down) || close(f, lines.f_co);
  };

  for (const axis_segment& seg : t.segments) {
    auto in_segment = [&](const event& e) {
      return e.t_start >= seg.t_start - 1e-12 && e.t_start < seg.t_end + 1e-12;
    };

    // Exactly one imaging window per segment.
    int cameras = 0;
    for (const event& e : t.events) {
      if (in_segment(e) && e.ch == channel::camera) ++cameras;
    }
    if (cameras != 1) {
      v.push_back(axis_name(seg.axis) + ": expected exactly 1 camera window, found " +
                  std::to_string(cameras));
    }

    // MOT field must be off before the first molasses frequency setting.
    double coils_off = -1, first_molasses = -1;
    for (const event& e : t.events) {
      if (!in_segment(e)) continue;
      if (e.ch == channel::mot_coils && e.act == action::gate_off && coils_off < 0) {
        coils_off = e.t_start;
      }
      if (e.act == action::set_frequency && e.value_hz == plan.molasses_aom &&
          e.ch >= channel::mot_aom_1 && e.ch <= channel::mot_aom_6 &&
          first_molasses < 0) {
        first_molasses = e.t_start;
      }
    }
    if (first_molasses >= 0 && (coils_off < 0 || coils_off > first_molasses)) {
      v.push_back(axis_name(seg.axis) + ": MOT coils not off before the molasses phase");
    }

    // Launch events must hit exactly the Table beam set for this axis.
    std::set<channel> reduced_expected;
    for (mot_beam b : launch_plan(seg.axis).reduced_beams) {
      reduced_expected.insert(mot_aom_channel(b));
    }
    std::set<channel> reduced_seen;
    for (const event& e : t.events) {
      if (in_segment(e) && e.act == action::set_frequency &&
          e.ch >= channel::mot_aom_1 && e.ch <= channel::mot_aom_6 &&
          e.value_hz != plan.mot_aom && e.value_hz != plan.molasses_aom) {
        reduced_seen.insert(e.ch);
      }
    }
    if (reduced_seen != reduced_expected) {
      v.push_back(axis_name(seg.axis) + ": launch beam set does not match the launch plan");
    }

    // Every Raman EOM frequency must be one of the three resonances.
    for (const event& e : t.events) {
      if (in_segment(e) && e.ch == channel::raman_eom &&
          e.act == action::set_frequency && !is_resonance(e.value_hz)) {
        v.push_back(axis_name(seg.axis) + ": RAMAN_EOM frequency " +
                    std::to_string(e.value_hz) + " is not a Raman resonance");
      }
    }
  }

  return v;
}

}  // namespace psi
