#pragma once

#include <string>
#include <vector>

#include "psilab/launch.hpp"

namespace psi {

enum class channel {
  mot_aom_1, mot_aom_2, mot_aom_3, mot_aom_4, mot_aom_5, mot_aom_6,
  repump_eom,
  raman_aom,
  raman_eom,
  imaging_aom,
  vr_1, vr_2, vr_3, vr_4,
  mot_coils,
  bias_coil,
  camera,
};

enum class action { set_frequency, gate_on, gate_off, set_state };

std::string channel_name(channel c);
std::string action_name(action a);

// MOT AOM channel for one beam: beams 1, 1', 2, 2', 3, 3' map to AOMs 1..6.
channel mot_aom_channel(mot_beam b);

// One hardware event. gate_on events carry the gate width in `duration`;
// set_frequency events carry `value_hz`; set_state events carry `state`.
struct event {
  double t_start = 0;   // s
  double duration = 0;  // s
  channel ch = channel::camera;
  action act = action::gate_on;
  double value_hz = 0;
  std::string state;
};

struct axis_segment {
  psi_axis axis = psi_axis::psi1;
  double t_start = 0;
  double t_end = 0;
  double raman_start = 0;  // time of pulse A0 within the cycle
};

// Ordered hardware events for one full IMU cycle. Events sharing a time
// stamp are ordered by (channel, action) so serialization is deterministic.
struct timeline {
  std::vector<event> events;
  std::vector<psi_axis> axis_order;
  std::vector<axis_segment> segments;
  double total_duration = 0;
  double implied_bandwidth = 0;  // 1 / total_duration
  // Phase durations that came from built-in assumptions rather than config.
  std::vector<std::string> assumed_defaults;

  std::string to_json() const;
  std::string to_csv() const;  // t_start_s,duration_s,channel,action,value
  std::string summary() const;
};

// Stable ordering key used everywhere events are sorted.
bool event_order(const event& a, const event& b);

}  // namespace psi
