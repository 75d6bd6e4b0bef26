#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "psilab/errors.hpp"
#include "psilab/phases.hpp"
#include "psilab/rng.hpp"
#include "psilab/sequence.hpp"
#include "psilab/species.hpp"

using namespace psi;

namespace {

// Independent oracle: the interferometer phase as a weighted sum of the
// Raman-pair phase sampled at each pulse time. The weights come from the
// standard path-difference bookkeeping: +1/-2/+1 for the base pulses and
// +2/-2/-2/+2 for each (A_j, B_j, B_-j, C_-j) quadruple.
double pulse_weight(const pulse& p) {
  if (p.index == 0) return p.family == 'B' ? -2.0 : 1.0;
  if (p.family == 'A' || p.family == 'C') return 2.0;
  return -2.0;
}

// Acceleration: atom at x(t) = x0 + v0 t + a t^2 / 2, pair phase k_eff x(t).
double acceleration_phase_oracle(const pulse_sequence& seq, double a,
                                 double k_eff, double x0, double v0) {
  double phi = 0;
  for (const pulse& p : seq.pulses) {
    const double x = x0 + v0 * p.time + 0.5 * a * p.time * p.time;
    phi += pulse_weight(p) * k_eff * x;
  }
  return phi;
}

// Rotation: the pair wavevector turns as k(t) = k_eff + (k_eff x Omega) t
// while the atom drifts at constant velocity.
double rotation_phase_oracle(const pulse_sequence& seq, const vec3& omega,
                             const vec3& k_eff_vec, const vec3& x0,
                             const vec3& v) {
  const vec3 dk = cross(k_eff_vec, omega);
  double phi = 0;
  for (const pulse& p : seq.pulses) {
    const vec3 k = k_eff_vec + dk * p.time;
    const vec3 x = x0 + v * p.time;
    phi += pulse_weight(p) * dot(k, x);
  }
  return phi;
}

std::vector<double> random_intervals(int n, double big_t, philox_stream& rng) {
  std::vector<double> tj(n);
  for (double& t : tj) t = big_t * (0.05 + 0.9 * rng.next_double());
  return tj;
}

}  // namespace

TEST_CASE("n = 0 sequence is the conventional pi/2 - pi - pi/2") {
  const pulse_sequence seq = build_sequence(0, 0.02, {});
  REQUIRE(seq.pulses.size() == 3);
  CHECK(seq.pulses[0].label() == "A0");
  CHECK(seq.pulses[0].time == doctest::Approx(0.0));
  CHECK(seq.pulses[0].kind == pulse_kind::half_pi);
  CHECK(seq.pulses[1].label() == "B0");
  CHECK(seq.pulses[1].time == doctest::Approx(0.02));
  CHECK(seq.pulses[1].kind == pulse_kind::pi);
  CHECK(seq.pulses[2].label() == "C0");
  CHECK(seq.pulses[2].time == doctest::Approx(0.04));
  for (const pulse& p : seq.pulses) CHECK(p.direction == +1);
}

TEST_CASE("n = 2 sequence structure") {
  const double T = 0.02;
  const pulse_sequence seq = build_sequence(2, T, {10e-3, 5e-3});
  REQUIRE(seq.pulses.size() == 11);
  CHECK(seq.warnings.empty());

  std::map<std::string, const pulse*> by_label;
  for (const pulse& p : seq.pulses) by_label[p.label()] = &p;

  // pair (A_j, B_j) centered on T/2 with separation T_j, mirrored about B0
  CHECK(by_label["A1"]->time == doctest::Approx(0.5 * (T - 10e-3)));
  CHECK(by_label["B1"]->time == doctest::Approx(0.5 * (T + 10e-3)));
  CHECK(by_label["B-1"]->time == doctest::Approx(2 * T - 0.5 * (T + 10e-3)));
  CHECK(by_label["C-1"]->time == doctest::Approx(2 * T - 0.5 * (T - 10e-3)));

  // directions alternate: A0 +, A1 -, A2 +, mirrored on the C side
  CHECK(by_label["A0"]->direction == +1);
  CHECK(by_label["A1"]->direction == -1);
  CHECK(by_label["A2"]->direction == +1);
  CHECK(by_label["C-1"]->direction == -1);
  CHECK(by_label["C-2"]->direction == +1);
  CHECK(by_label["B1"]->direction == by_label["B-1"]->direction);

  // time-sorted and spanning exactly [0, 2T]
  for (size_t i = 1; i < seq.pulses.size(); ++i) {
    CHECK(seq.pulses[i].time >= seq.pulses[i - 1].time);
  }
  CHECK(seq.pulses.front().time == doctest::Approx(0.0));
  CHECK(seq.pulses.back().time == doctest::Approx(2 * T));
}

TEST_CASE("interval validation") {
  CHECK_THROWS_AS(build_sequence(1, 0.02, {0.025}), config_error);  // T_1 > T
  CHECK_THROWS_AS(build_sequence(1, 0.02, {}), config_error);       // length mismatch
  CHECK_THROWS_AS(build_sequence(1, 0.02, {-1e-3}), config_error);
  // equal intervals collapse two pulses onto the same instant: warned, not fatal
  const pulse_sequence seq = build_sequence(2, 0.02, {8e-3, 8e-3});
  CHECK(!seq.warnings.empty());
}

TEST_CASE("built sequences pass their own validator for many orders") {
  philox_stream rng(77, 0);
  for (int n = 0; n <= 10; ++n) {
    const pulse_sequence seq = build_sequence(n, 0.02, random_intervals(n, 0.02, rng));
    CHECK_NOTHROW(seq.validate());
    CHECK(seq.pulses.size() == 4 * static_cast<size_t>(n) + 3);
  }
}

TEST_CASE("acceleration phase: worked value and closed form vs oracle") {
  const double ke = k_eff(rb87());
  const pulse_sequence seq0 = build_sequence(0, 0.02, {});
  // k_eff * a * T^2 for the conventional sequence
  CHECK(acceleration_phase(seq0, 9.8, ke) == doctest::Approx(6.3135e4).epsilon(1e-3));
  CHECK(acceleration_phase(seq0, 0.0, ke) == doctest::Approx(0.0));

  // T_1 = T/2 doubles the n = 0 phase
  const pulse_sequence seq1 = build_sequence(1, 0.02, {0.01});
  CHECK(acceleration_phase(seq1, 9.8, ke) ==
        doctest::Approx(2 * acceleration_phase(seq0, 9.8, ke)).epsilon(1e-12));

  // independent per-pulse oracle, n = 0..5 with random intervals; the
  // initial position and velocity must drop out of the oracle sum
  philox_stream rng(5150, 0);
  for (int n = 0; n <= 5; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const pulse_sequence seq =
          build_sequence(n, 0.02, random_intervals(n, 0.02, rng));
      const double a = -20 + 40 * rng.next_double();
      const double x0 = 1e-3 * (rng.next_double() - 0.5);
      const double v0 = 2.0 * (rng.next_double() - 0.5);
      const double oracle = acceleration_phase_oracle(seq, a, ke, x0, v0);
      const double closed = acceleration_phase(seq, a, ke);
      CHECK(oracle == doctest::Approx(closed).epsilon(5e-10));
    }
  }
}

TEST_CASE("acceleration phase enhancement ratio is 1 + 2 sum(T_j)/T") {
  const double ke = k_eff(rb87());
  philox_stream rng(31337, 0);
  const pulse_sequence base = build_sequence(0, 0.02, {});
  const double phase0 = acceleration_phase(base, 5.0, ke);
  for (int n = 1; n <= 10; ++n) {
    const auto tj = random_intervals(n, 0.02, rng);
    const pulse_sequence seq = build_sequence(n, 0.02, tj);
    double sum = 0;
    for (double t : tj) sum += t;
    CHECK(acceleration_phase(seq, 5.0, ke) / phase0 ==
          doctest::Approx(1 + 2 * sum / 0.02).epsilon(1e-12));
  }
}

TEST_CASE("rotation phase: symmetry cases and oracle") {
  const double ke = k_eff(rb87());
  const vec3 kz{0, 0, ke};
  const pulse_sequence seq0 = build_sequence(0, 0.02, {});

  // Omega parallel to k_eff gives no fringe phase
  CHECK(rotation_phase(seq0, {0, 0, 0.3}, {1e-3, 2e-3, 3e-3}, kz) ==
        doctest::Approx(0.0));

  // Omega perpendicular: |k_eff| |Omega| T * r-component perpendicular to both
  const double om = 0.05;
  const vec3 omega{om, 0, 0};
  const vec3 r{0, 1e-3, 0};
  // k x Omega = (0,0,ke) x (om,0,0) = (0, ke*om, 0)
  CHECK(rotation_phase(seq0, omega, r, kz) ==
        doctest::Approx(ke * om * 1e-3 * 0.02).epsilon(1e-12));

  // odd in Omega
  CHECK(rotation_phase(seq0, -omega, r, kz) ==
        doctest::Approx(-rotation_phase(seq0, omega, r, kz)));

  // linearity in Omega and r
  CHECK(rotation_phase(seq0, omega * 2.0, r, kz) ==
        doctest::Approx(2 * rotation_phase(seq0, omega, r, kz)));
  CHECK(rotation_phase(seq0, omega, r * 3.0, kz) ==
        doctest::Approx(3 * rotation_phase(seq0, omega, r, kz)));

  // per-pulse oracle with drifting atoms, n = 0..5, random intervals
  philox_stream rng(2718, 0);
  for (int n = 0; n <= 5; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const pulse_sequence seq =
          build_sequence(n, 0.02, random_intervals(n, 0.02, rng));
      const vec3 omg{0.02 * (rng.next_double() - 0.5),
                     0.02 * (rng.next_double() - 0.5),
                     0.02 * (rng.next_double() - 0.5)};
      const vec3 x0{1e-3 * (rng.next_double() - 0.5),
                    1e-3 * (rng.next_double() - 0.5),
                    1e-3 * (rng.next_double() - 0.5)};
      const vec3 v{rng.next_double() - 0.5, rng.next_double() - 0.5,
                   rng.next_double() - 0.5};
      const vec3 r_total = v * (2 * seq.big_t);  // displacement A0 -> C0
      const double oracle = rotation_phase_oracle(seq, omg, kz, x0, v);
      const double closed = rotation_phase(seq, omg, r_total, kz);
      CHECK(oracle == doctest::Approx(closed).epsilon(5e-10));
    }
  }

  // linearization warning above |Omega| T = 0.1
  std::string warning;
  rotation_phase(seq0, {6.0, 0, 0}, r, kz, &warning);
  CHECK(!warning.empty());
}

TEST_CASE("fringe wavevector carries both normalization conventions") {
  const double ke = k_eff(rb87());
  const vec3 kz{0, 0, ke};
  const vec3 omega{0.01, 0, 0};

  const pulse_sequence seq0 = build_sequence(0, 0.02, {});
  const fringe_wavevectors w0 = fringe_wavevector(seq0, omega, kz);
  CHECK(norm(w0.k_omega) == doctest::Approx(norm(w0.k_omega_appendix)));
  CHECK(norm(w0.k_omega) == doctest::Approx(ke * 0.01 * 0.02).epsilon(1e-12));

  // T_1 = T_2 = T/4: the two normalizations differ by (1.5 T)/(2 T) = 0.75
  const pulse_sequence seq2 = build_sequence(2, 0.02, {5e-3, 5e-3});
  const fringe_wavevectors w2 = fringe_wavevector(seq2, omega, kz);
  CHECK(norm(w2.k_omega) / norm(w2.k_omega_appendix) == doctest::Approx(0.75));

  // zero rotation
  const fringe_wavevectors wz = fringe_wavevector(seq2, {0, 0, 0}, kz);
  CHECK(norm(wz.k_omega) == doctest::Approx(0.0));

  // perpendicular to k_eff (both variants)
  CHECK(dot(w2.k_omega, kz) == doctest::Approx(0.0));
  CHECK(dot(w2.k_omega_appendix, kz) == doctest::Approx(0.0));
}

TEST_CASE("sequence serializes to JSON with one record per pulse") {
  const pulse_sequence seq = build_sequence(1, 0.02, {0.01});
  const std::string j = seq.to_json();
  CHECK(j.find("\"A0\"") != std::string::npos);
  CHECK(j.find("\"B-1\"") != std::string::npos);
  CHECK(j.find("half_pi") != std::string::npos);
  // deterministic serialization
  CHECK(j == build_sequence(1, 0.02, {0.01}).to_json());
}
