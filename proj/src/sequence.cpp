#include "psilab/sequence.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "psilab/errors.hpp"

namespace psi {

std::string pulse::label() const {
  return family + std::to_string(index);
}

double pulse_sequence::interval_sum() const {
  double s = 0;
  for (double t : extra_intervals) s += t;
  return s;
}

void pulse_sequence::validate() const {
  const size_t expected = 4 * static_cast<size_t>(order) + 3;
  if (pulses.size() != expected) {
    throw config_error("pulse_sequence: expected " + std::to_string(expected) +
                       " pulses, have " + std::to_string(pulses.size()));
  }
  const double tol = 1e-12 * std::max(big_t, 1.0);

  for (const pulse& p : pulses) {
    const bool base_half_pi = (p.index == 0 && (p.family == 'A' || p.family == 'C'));
    if (base_half_pi != (p.kind == pulse_kind::half_pi)) {
      throw config_error("pulse_sequence: " + p.label() +
                         " has the wrong pulse kind (A0/C0 are half_pi, all others pi)");
    }
    if (p.time < -tol || p.time > span() + tol) {
      throw config_error("pulse_sequence: " + p.label() + " lies outside [0, 2T]");
    }
  }

  // Mirror symmetry about B0: every pulse at t has a partner at 2T - t with
  // the same direction.
  for (const pulse& p : pulses) {
    const double mirror_t = span() - p.time;
    bool found = false;
    for (const pulse& q : pulses) {
      if (std::abs(q.time - mirror_t) <= tol && q.direction == p.direction) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw config_error("pulse_sequence: no mirror partner for " + p.label());
    }
  }

  // Alternation along the extra pulses of each family.
  for (const pulse& p : pulses) {
    const int j = std::abs(p.index);
    int want = 0;
    if (p.index == 0) {
      want = +1;
    } else if (p.family == 'A' || p.family == 'C') {
      want = (j % 2 == 0) ? +1 : -1;
    } else {
      want = (j % 2 == 0) ? -1 : +1;
    }
    if (p.direction != want) {
      throw config_error("pulse_sequence: " + p.label() + " direction " +
                         std::to_string(p.direction) + " breaks the alternation pattern");
    }
  }
}

pulse_sequence build_sequence(int n, double big_t,
                              const std::vector<double>& intervals) {
  if (n < 0) throw config_error("build_sequence: order must be >= 0");
  if (!(big_t > 0)) throw config_error("build_sequence: T must be positive");
  if (static_cast<int>(intervals.size()) != n) {
    throw config_error("build_sequence: expected " + std::to_string(n) +
                       " extra intervals, got " + std::to_string(intervals.size()));
  }
  for (int j = 0; j < n; ++j) {
    if (!(intervals[j] > 0)) {
      throw config_error("build_sequence: T_" + std::to_string(j + 1) +
                         " must be positive");
    }
    if (intervals[j] > big_t) {
      throw config_error("build_sequence: T_" + std::to_string(j + 1) +
                         " exceeds T; pulse times must be increasing within [0, 2T]");
    }
  }

  pulse_sequence seq;
  seq.order = n;
  seq.big_t = big_t;
  seq.extra_intervals = intervals;

  auto dir_a = [](int j) { return (j % 2 == 0) ? +1 : -1; };

  seq.pulses.push_back({'A', 0, 0.0, pulse_kind::half_pi, +1});
  seq.pulses.push_back({'B', 0, big_t, pulse_kind::pi, +1});
  seq.pulses.push_back({'C', 0, 2.0 * big_t, pulse_kind::half_pi, +1});
  for (int j = 1; j <= n; ++j) {
    const double tj = intervals[j - 1];
    const double t_a = 0.5 * (big_t - tj);
    const double t_b = 0.5 * (big_t + tj);
    seq.pulses.push_back({'A', j, t_a, pulse_kind::pi, dir_a(j)});
    seq.pulses.push_back({'B', j, t_b, pulse_kind::pi, -dir_a(j)});
    seq.pulses.push_back({'B', -j, 2.0 * big_t - t_b, pulse_kind::pi, -dir_a(j)});
    seq.pulses.push_back({'C', -j, 2.0 * big_t - t_a, pulse_kind::pi, dir_a(j)});
  }

  std::stable_sort(seq.pulses.begin(), seq.pulses.end(),
                   [](const pulse& a, const pulse& b) { return a.time < b.time; });

  for (size_t i = 1; i < seq.pulses.size(); ++i) {
    if (!(seq.pulses[i].time > seq.pulses[i - 1].time)) {
      seq.warnings.push_back("coincident pulses " + seq.pulses[i - 1].label() +
                             " and " + seq.pulses[i].label() +
                             " (intervals produce a degenerate layout)");
    }
  }

  seq.validate();
  return seq;
}

std::string pulse_sequence::to_json() const {
  nlohmann::json j;
  j["order"] = order;
  j["big_t_s"] = big_t;
  j["extra_intervals_s"] = extra_intervals;
  j["pulses"] = nlohmann::json::array();
  for (const pulse& p : pulses) {
    j["pulses"].push_back({{"label", p.label()},
                           {"time_s", p.time},
                           {"kind", p.kind == pulse_kind::half_pi ? "half_pi" : "pi"},
                           {"direction", p.direction}});
  }
  if (!warnings.empty()) j["warnings"] = warnings;
  return j.dump(2);
}

}  // namespace psi
