#include <doctest.h>

#include <cmath>

#include "psilab/resonance.hpp"
#include "psilab/sequence.hpp"

using namespace psi;

TEST_CASE("raman resonances: Doppler and recoil terms for 87Rb") {
  const species_data sp = rb87();
  const raman_lines lines = raman_resonances(1.0, sp);
  CHECK(lines.f_co == doctest::Approx(sp.hyperfine_splitting));
  // 2kv/2pi at 1 m/s
  CHECK(lines.f_up - lines.f_co - recoil_frequency(sp) ==
        doctest::Approx(2.5633e6).epsilon(1e-3));
  CHECK(recoil_frequency(sp) == doctest::Approx(15083.9).epsilon(1e-3));

  // v = 0 leaves only the recoil offset
  const raman_lines rest = raman_resonances(0.0, sp);
  CHECK(rest.f_up - rest.f_co == doctest::Approx(recoil_frequency(sp)));

  // up/down splitting is twice the common shift, at any velocity
  for (double v : {0.0, 0.3, 1.0, 2.6}) {
    const raman_lines l = raman_resonances(v, sp);
    CHECK(l.f_up - l.f_down ==
          doctest::Approx(2 * (l.f_up - l.f_co)).epsilon(1e-12));
  }
}

TEST_CASE("resonance separation margin") {
  const species_data sp = rb87();
  const separation_check ok = resonance_separation_ok(1.0, 6e-6, sp);
  CHECK(ok.ok);
  CHECK(ok.ratio == doctest::Approx(41.7).epsilon(0.01));

  CHECK_FALSE(resonance_separation_ok(0.0, 6e-6, sp).ok);

  // exact boundary: v = margin * v_rms
  const double v_rms = thermal_velocity(sp, 6e-6);
  CHECK(resonance_separation_ok(10.0 * v_rms, 6e-6, sp, 10.0).ok);
  CHECK_FALSE(resonance_separation_ok(9.99 * v_rms, 6e-6, sp, 10.0).ok);
}

TEST_CASE("vco schedule follows the pulse directions") {
  const species_data sp = rb87();
  const raman_lines lines = raman_resonances(1.0, sp);

  const pulse_sequence seq0 = build_sequence(0, 0.02, {});
  for (const auto& [t, f] : vco_schedule(seq0, 1.0, sp)) {
    CHECK(f == doctest::Approx(lines.f_up));
  }

  const pulse_sequence seq2 = build_sequence(2, 0.02, {10e-3, 5e-3});
  const auto sched = vco_schedule(seq2, 1.0, sp);
  REQUIRE(sched.size() == 11);
  for (size_t i = 0; i < sched.size(); ++i) {
    const pulse& p = seq2.pulses[i];
    CHECK(sched[i].first == doctest::Approx(p.time));
    CHECK(sched[i].second ==
          doctest::Approx(p.direction > 0 ? lines.f_up : lines.f_down));
    if (i) CHECK(sched[i].first >= sched[i - 1].first);
  }

  // reversing every direction swaps f_up and f_down entries
  pulse_sequence reversed = seq2;
  for (pulse& p : reversed.pulses) p.direction = -p.direction;
  const auto swapped = vco_schedule(reversed, 1.0, sp);
  for (size_t i = 0; i < sched.size(); ++i) {
    const double expect = sched[i].second == lines.f_up ? lines.f_down : lines.f_up;
    CHECK(swapped[i].second == doctest::Approx(expect));
  }
}
