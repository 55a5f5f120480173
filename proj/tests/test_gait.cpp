// Copyright 2026 The gaitkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaitkit/gait.hpp"

#include <cmath>
#include <doctest.h>

#include "gaitkit/rng.hpp"

using namespace gaitkit;

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

PhaseState walking_state(double left, double f = 2.0, double dt = 0.02) {
  PhaseState s = make_phase_state(walking_preset(), f, dt);
  s.phase[0] = left;
  s.phase[1] = std::fmod(left + 0.5, 1.0);
  return s;
}

}  // namespace

TEST_CASE("advance wraps the walking phase and keeps the half-cycle offset") {
  PhaseState s = walking_state(0.98);
  CHECK(s.phase[1] == doctest::Approx(0.48).epsilon(1e-12));
  const PhaseState next = advance_phase(s);
  CHECK(next.phase[0] == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(next.phase[1] == doctest::Approx(0.52).epsilon(1e-12));
}

TEST_CASE("standing phases never move") {
  PhaseState s = make_phase_state(standing_preset(), 3.0, 0.02);
  CHECK(s.phase[0] == 0.25);
  CHECK(s.phase[1] == 0.25);
  for (int i = 0; i < 100; ++i) s = advance_phase(s);
  CHECK(s.phase[0] == 0.25);
  CHECK(s.phase[1] == 0.25);
}

TEST_CASE("hopping advances only the stepping leg") {
  PhaseState s = make_phase_state(hopping_preset(Foot::kRight), 2.5, 0.02);
  s.phase[0] = 0.10;
  const PhaseState next = advance_phase(s);
  CHECK(next.phase[0] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(next.phase[1] == 0.75);

  PhaseState left_flying = make_phase_state(hopping_preset(Foot::kLeft), 2.5, 0.02);
  const PhaseState next2 = advance_phase(left_flying);
  CHECK(next2.phase[0] == 0.75);
  CHECK(next2.phase[1] == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("invalid frequency or dt is rejected") {
  PhaseState s = walking_state(0.1);
  s.frequency_hz = 0.0;
  CHECK_THROWS_AS(advance_phase(s), std::invalid_argument);
  s.frequency_hz = -1.0;
  CHECK_THROWS_AS(advance_phase(s), std::invalid_argument);
  s.frequency_hz = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(advance_phase(s), std::invalid_argument);
  s.frequency_hz = 2.0;
  s.dt_s = 0.0;
  CHECK_THROWS_AS(advance_phase(s), std::invalid_argument);
}

TEST_CASE("preset constraints are enforced") {
  GaitPreset p = walking_preset();
  p.phase_offset = 0.3;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  GaitPreset standing = standing_preset();
  (*standing.fixed_phases)[0] = 0.5;
  CHECK_THROWS_AS(validate(standing), std::invalid_argument);
}

TEST_CASE("homogenized phase maps stance onto the first half cycle") {
  CHECK(homogenize_phase(0.25, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(homogenize_phase(0.2, 0.4) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(homogenize_phase(0.7, 0.4) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(homogenize_phase(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(homogenize_phase(0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(homogenize_phase(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("contact probability is one mid-stance, half at the switch, zero mid-swing") {
  const ContactModelParams params{0.02};
  CHECK(contact_probability(0.25, params) > 0.999);
  CHECK(std::abs(contact_probability(0.5, params) - 0.5) < 1e-6);
  CHECK(contact_probability(0.75, params) < 0.001);
  CHECK_THROWS_AS(contact_probability(1.5, params), std::invalid_argument);
  CHECK_THROWS_AS(contact_probability(0.5, ContactModelParams{0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(contact_probability(0.5, ContactModelParams{0.2}),
                  std::invalid_argument);
}

TEST_CASE("contact probability stays within [0, 1] on a dense grid") {
  for (double sigma : {0.01, 0.02, 0.05}) {
    const ContactModelParams params{sigma};
    for (int i = 0; i <= 10000; ++i) {
      const double phi_bar = i / 10000.0;
      const double c = contact_probability(phi_bar, params);
      REQUIRE(c >= 0.0);
      REQUIRE(c <= 1.0);
    }
  }
}

TEST_CASE("contact probability slope is bounded by the dominating Gaussian peak") {
  for (double sigma : {0.01, 0.02, 0.05}) {
    const ContactModelParams params{sigma};
    const double bound = 1.01 / (sigma * std::sqrt(kTwoPi));
    double prev = contact_probability(0.0, params);
    double max_slope = 0.0;
    const int n = 10000;
    for (int i = 1; i <= n; ++i) {
      const double c = contact_probability(static_cast<double>(i) / n, params);
      max_slope = std::max(max_slope, std::abs(c - prev) * n);
      prev = c;
    }
    CHECK(max_slope <= bound);
  }
}

TEST_CASE("clock values hit the cardinal points") {
  PhaseState s = walking_state(0.25);
  CHECK(clock_values(s)[0] == doctest::Approx(1.0).epsilon(1e-12));
  s = walking_state(0.0);
  CHECK(clock_values(s)[0] == doctest::Approx(0.0).epsilon(1e-12));
  s = walking_state(0.3);
  CHECK(clock_values(s)[0] ==
        doctest::Approx(std::sin(kTwoPi * 0.3)).epsilon(1e-15));
  CHECK(clock_values(s)[0] == doctest::Approx(0.95105651629515353).epsilon(1e-12));
}

TEST_CASE("clock values stay in [-1, 1] for random states") {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    PhaseState s = walking_state(rng.uniform());
    const auto clocks = clock_values(s);
    REQUIRE(clocks[0] >= -1.0);
    REQUIRE(clocks[0] <= 1.0);
    REQUIRE(clocks[1] >= -1.0);
    REQUIRE(clocks[1] <= 1.0);
  }
}

TEST_CASE("walking clocks are anti-phase: left now equals right half a cycle later") {
  for (int i = 0; i < 1000; ++i) {
    const double x = i / 1000.0;
    const PhaseState now = walking_state(x);
    const PhaseState later = walking_state(std::fmod(x + 0.5, 1.0));
    CHECK(std::abs(clock_values(now)[0] - clock_values(later)[1]) < 1e-12);
  }
}

TEST_CASE("a whole number of steps per cycle returns the phase to its start") {
  // f*dt = 0.05 divides 1, so 20 steps close the cycle.
  PhaseState s = make_phase_state(walking_preset(), 2.5, 0.02);
  s.phase[0] = 0.37;
  s.phase[1] = std::fmod(0.37 + 0.5, 1.0);
  const PhaseState start = s;
  for (int i = 0; i < 20; ++i) s = advance_phase(s);
  CHECK(std::abs(s.phase[0] - start.phase[0]) < 1e-9);
  CHECK(std::abs(s.phase[1] - start.phase[1]) < 1e-9);
}

TEST_CASE("offset gaits preserve their phase offset over long runs") {
  Rng rng(21);
  for (const GaitPreset& preset : {walking_preset(), jumping_preset()}) {
    PhaseState s = make_phase_state(preset, 1.7, 0.02);
    for (int i = 0; i < 5000; ++i) {
      s = advance_phase(s);
      double diff = std::fmod(s.phase[1] - s.phase[0] + 1.0, 1.0);
      // Offsets 0 and 0.5 should survive the modulo wrap exactly.
      const double err = std::min(std::abs(diff - preset.phase_offset),
                                  std::abs(diff - preset.phase_offset - 1.0));
      REQUIRE(err < 1e-12);
    }
    // Randomize frequency a little and keep checking.
    s.frequency_hz = 1.5 + rng.uniform();
  }
}

TEST_CASE("contact probabilities of a standing state pin both feet on the ground") {
  const PhaseState s = make_phase_state(standing_preset(), 2.0, 0.02);
  const auto c = contact_probabilities(s, ContactModelParams{});
  CHECK(c[0] > 0.999);
  CHECK(c[1] > 0.999);
}

TEST_CASE("gait names round-trip") {
  for (GaitKind kind : {GaitKind::kWalking, GaitKind::kJumping,
                        GaitKind::kStanding, GaitKind::kHopping}) {
    CHECK(gait_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(gait_from_string("crawling"), std::invalid_argument);
}
