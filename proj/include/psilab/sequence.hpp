#pragma once

#include <string>
#include <vector>

namespace psi {

enum class pulse_kind { half_pi, pi };

// One Raman pulse. Labels follow the A/B/C families: the base pulses are
// A0, B0, C0; LMT order n adds A_j and B_j (j = 1..n) in the first half and
// their mirror images B_-j and C_-j in the second half.
struct pulse {
  char family = 'A';   // 'A', 'B' or 'C'
  int index = 0;       // 0 for base pulses, +-j for the extra pi pulses
  double time = 0;     // s, measured from A0
  pulse_kind kind = pulse_kind::pi;
  int direction = +1;  // effective propagation direction of the Raman pair

  std::string label() const;  // "A0", "A1", "B-2", "C-1", ...
};

// LMT-augmented Raman pulse timeline: 4n + 3 pulses spanning [0, 2T],
// time-symmetric about B0.
struct pulse_sequence {
  int order = 0;
  double big_t = 0;                     // T, s
  std::vector<double> extra_intervals;  // T_j, s
  std::vector<pulse> pulses;            // sorted by time
  std::vector<std::string> warnings;    // non-fatal layout oddities

  double span() const { return 2.0 * big_t; }
  double interval_sum() const;  // sum of T_j

  // Re-checks every structural invariant; throws config_error on violation.
  void validate() const;

  std::string to_json() const;
};

// Builds the order-n sequence. The pair (A_j, B_j) is centered on T/2 with
// separation T_j; the second half mirrors the first about B0 at T. Effective
// directions alternate along the extra pulses: A_j carries (-1)^j, B_j
// carries (-1)^(j+1), and the mirror images repeat their partners. The base
// pulses all carry +1 so an n = 0 sequence never swaps direction.
//
// Throws config_error when len(intervals) != n or an interval falls outside
// (0, T]. Interval lists that scramble or collide the pulse ordering are
// accepted with a warning recorded on the sequence.
pulse_sequence build_sequence(int n, double big_t,
                              const std::vector<double>& intervals);

}  // namespace psi
