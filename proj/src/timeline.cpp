#include "psilab/timeline.hpp"

#include <sstream>

#include <json.hpp>

namespace psi {

std::string channel_name(channel c) {
  switch (c) {
    case channel::mot_aom_1: return "MOT_AOM_1";
    case channel::mot_aom_2: return "MOT_AOM_2";
    case channel::mot_aom_3: return "MOT_AOM_3";
    case channel::mot_aom_4: return "MOT_AOM_4";
    case channel::mot_aom_5: return "MOT_AOM_5";
    case channel::mot_aom_6: return "MOT_AOM_6";
    case channel::repump_eom: return "REPUMP_EOM";
    case channel::raman_aom: return "RAMAN_AOM";
    case channel::raman_eom: return "RAMAN_EOM";
    case channel::imaging_aom: return "IMAGING_AOM";
    case channel::vr_1: return "VR_1";
    case channel::vr_2: return "VR_2";
    case channel::vr_3: return "VR_3";
    case channel::vr_4: return "VR_4";
    case channel::mot_coils: return "MOT_COILS";
    case channel::bias_coil: return "BIAS_COIL";
    case channel::camera: return "CAMERA";
  }
  return "?";
}

std::string action_name(action a) {
  switch (a) {
    case action::set_frequency: return "set_frequency";
    case action::gate_on: return "gate_on";
    case action::gate_off: return "gate_off";
    case action::set_state: return "set_state";
  }
  return "?";
}

channel mot_aom_channel(mot_beam b) {
  switch (b) {
    case mot_beam::mot1: return channel::mot_aom_1;
    case mot_beam::mot1p: return channel::mot_aom_2;
    case mot_beam::mot2: return channel::mot_aom_3;
    case mot_beam::mot2p: return channel::mot_aom_4;
    case mot_beam::mot3: return channel::mot_aom_5;
    case mot_beam::mot3p: return channel::mot_aom_6;
  }
  return channel::mot_aom_1;
}

bool event_order(const event& a, const event& b) {
  if (a.t_start != b.t_start) return a.t_start < b.t_start;
  if (a.ch != b.ch) return static_cast<int>(a.ch) < static_cast<int>(b.ch);
  return static_cast<int>(a.act) < static_cast<int>(b.act);
}

std::string timeline::to_json() const {
  nlohmann::json j;
  j["total_duration_s"] = total_duration;
  j["implied_bandwidth_hz"] = implied_bandwidth;
  j["axis_order"] = nlohmann::json::array();
  for (psi_axis a : axis_order) j["axis_order"].push_back(axis_name(a));
  j["segments"] = nlohmann::json::array();
  for (const axis_segment& s : segments) {
    j["segments"].push_back({{"axis", axis_name(s.axis)},
                             {"t_start_s", s.t_start},
                             {"t_end_s", s.t_end},
                             {"raman_start_s", s.raman_start}});
  }
  j["assumed_defaults"] = assumed_defaults;
  j["events"] = nlohmann::json::array();
  for (const event& e : events) {
    nlohmann::json je = {{"t_start_s", e.t_start},
                         {"duration_s", e.duration},
                         {"channel", channel_name(e.ch)},
                         {"action", action_name(e.act)}};
    if (e.act == action::set_frequency) je["value_hz"] = e.value_hz;
    if (e.act == action::set_state) je["state"] = e.state;
    j["events"].push_back(je);
  }
  return j.dump(2);
}

std::string timeline::to_csv() const {
  std::ostringstream os;
  os << "t_start_s,duration_s,channel,action,value\n";
  os.precision(12);
  for (const event& e : events) {
    os << e.t_start << ',' << e.duration << ',' << channel_name(e.ch) << ','
       << action_name(e.act) << ',';
    if (e.act == action::set_frequency) {
      os << e.value_hz;
    } else if (e.act == action::set_state) {
      os << e.state;
    }
    os << '\n';
  }
  return os.str();
}

std::string timeline::summary() const {
  std::ostringstream os;
  os.precision(6);
  os << "IMU cycle: " << events.size() << " events over " << total_duration
     << " s (implied bandwidth " << implied_bandwidth << " Hz)\n";
  for (const axis_segment& s : segments) {
    os << "  " << axis_name(s.axis) << ": [" << s.t_start << ", " << s.t_end
       << "] s, Raman train at " << s.raman_start << " s\n";
  }
  if (!assumed_defaults.empty()) {
    os << "assumed defaults:\n";
    for (const std::string& a : assumed_defaults) os << "  - " << a << "\n";
  }
  return os.str();
}

}  // namespace psi
