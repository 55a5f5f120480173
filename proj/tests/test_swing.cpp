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

#include "gaitkit/swing.hpp"

#include <cmath>
#include <doctest.h>

#include "gaitkit/rng.hpp"

using namespace gaitkit;

namespace {

SwingProfile profile(double l, double ps = 0.0, double pe = 0.0) {
  SwingProfile p;
  p.peak_height_m = l;
  p.start_height_m = ps;
  p.end_height_m = pe;
  return p;
}

// Piecewise evaluation through the linear-system route.
double oracle_height(double phi_bar, const SwingProfile& p) {
  if (phi_bar < 0.5) return 0.0;
  const auto [rise, fall] = solve_quintic_oracle(p);
  return phi_bar <= 0.75 ? rise.position(phi_bar) : fall.position(phi_bar);
}

}  // namespace

TEST_CASE("stance phase keeps the target on the ground") {
  CHECK(target_height(0.0, profile(0.2)) == 0.0);
  CHECK(target_height(0.3, profile(0.2)) == 0.0);
  CHECK(target_height(0.3, profile(0.35, 0.02, 0.01)) == 0.0);
  CHECK(target_height(0.499999, profile(0.2)) == 0.0);
}

TEST_CASE("apex and half-rise values") {
  CHECK(target_height(0.75, profile(0.2)) == doctest::Approx(0.2).epsilon(1e-15));
  // The quintic arc is symmetric about its midpoint, so halfway up the
  // rise sits at half the commanded height.
  CHECK(target_height(0.625, profile(0.2)) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(target_height(1.0, profile(0.2, 0.0, 0.05)) ==
        doctest::Approx(0.05).epsilon(1e-15));
  CHECK(target_height(0.5, profile(0.2, 0.03, 0.0)) ==
        doctest::Approx(0.03).epsilon(1e-15));
}

TEST_CASE("out-of-range phases and bad profiles are rejected") {
  CHECK_THROWS_AS(target_height(-0.01, profile(0.2)), std::invalid_argument);
  CHECK_THROWS_AS(target_height(1.01, profile(0.2)), std::invalid_argument);
  CHECK_THROWS_AS(target_height(0.6, profile(-0.1)), std::invalid_argument);
  CHECK_THROWS_AS(target_height(0.6, profile(0.1, 0.2, 0.0)),
                  std::invalid_argument);
  SwingProfile bad = profile(0.2);
  bad.phi_stance = 0.0;
  CHECK_THROWS_AS(target_height(0.6, bad), std::invalid_argument);
}

TEST_CASE("oracle segments satisfy the printed boundary conditions") {
  const SwingProfile p = profile(0.2);
  const auto [rise, fall] = solve_quintic_oracle(p);

  CHECK(std::abs(rise.position(0.5)) < 1e-12);
  CHECK(rise.position(0.75) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(rise.velocity(0.5)) < 1e-9);
  CHECK(std::abs(rise.velocity(0.75)) < 1e-9);
  CHECK(std::abs(rise.acceleration(0.5)) < 1e-8);
  CHECK(std::abs(rise.acceleration(0.75)) < 1e-8);

  CHECK(fall.position(0.75) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(fall.position(1.0)) < 1e-12);
  CHECK(std::abs(fall.velocity(1.0)) < 1e-9);
  CHECK(std::abs(fall.acceleration(1.0)) < 1e-8);
}

TEST_CASE("oracle rejects degenerate knots") {
  SwingKnots knots;
  knots.peak = knots.start;
  CHECK_THROWS_AS(solve_quintic_oracle(profile(0.2), knots),
                  std::invalid_argument);
}

TEST_CASE("closed form and linear-system solve agree everywhere") {
  Rng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const double ps = rng.uniform(0.0, 0.05);
    const double pe = rng.uniform(0.0, 0.05);
    const double l = std::max(ps, pe) + rng.uniform(0.0, 0.4);
    const SwingProfile p = profile(l, ps, pe);
    const auto [rise, fall] = solve_quintic_oracle(p);
    for (int i = 0; i <= 1000; ++i) {
      const double phi_bar = i / 1000.0;
      const double closed = target_height(phi_bar, p);
      double expected = 0.0;
      if (phi_bar >= 0.5) {
        expected = phi_bar <= 0.75 ? rise.position(phi_bar)
                                   : fall.position(phi_bar);
      }
      REQUIRE(std::abs(closed - expected) < 1e-9);
    }
  }
}

TEST_CASE("derivatives vanish at the knots") {
  const SwingProfile p = profile(0.27, 0.01, 0.02);
  for (double phi_bar : {0.5, 0.75, 1.0}) {
    const auto [vel, acc] = target_derivatives(phi_bar, p);
    CHECK(std::abs(vel) < 1e-9);
    CHECK(std::abs(acc) < 1e-9);
  }
  const auto [vel, acc] = target_derivatives(0.2, p);
  CHECK(vel == 0.0);
  CHECK(acc == 0.0);
}

TEST_CASE("peak rise velocity matches the quintic midpoint slope") {
  const SwingProfile p = profile(0.2);
  const auto [vel, acc] = target_derivatives(0.625, p);
  // Midpoint slope of the unit quintic arc is 15/8, stretched by the
  // segment span.
  CHECK(vel == doctest::Approx((15.0 / 8.0) * 0.2 / 0.25).epsilon(1e-12));
  CHECK(std::abs(acc) < 1e-9);

  // Central finite differences agree.
  const double h = 1e-6;
  const double fd_vel =
      (target_height(0.625 + h, p) - target_height(0.625 - h, p)) / (2 * h);
  CHECK(vel == doctest::Approx(fd_vel).epsilon(1e-7));
}

TEST_CASE("derivatives match finite differences over the whole swing") {
  Rng rng(99);
  const double h = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const double ps = rng.uniform(0.0, 0.05);
    const double pe = rng.uniform(0.0, 0.05);
    const SwingProfile p = profile(std::max(ps, pe) + rng.uniform(0.05, 0.4),
                                   ps, pe);
    // Second differences at h=1e-6 sit on the rounding floor, so the
    // acceleration check uses a wider step.
    const double ha = 1e-5;
    for (int i = 1; i < 100; ++i) {
      const double x = 0.5 + 0.5 * i / 100.0;
      if (std::abs(x - 0.75) < 2 * ha) continue;  // piece boundary
      const auto [vel, acc] = target_derivatives(x, p);
      REQUIRE(std::abs(vel - (target_height(x + h, p) -
                              target_height(x - h, p)) /
                                 (2 * h)) < 1e-4);
      const double f0 = target_height(x - ha, p);
      const double f1 = target_height(x, p);
      const double f2 = target_height(x + ha, p);
      REQUIRE(std::abs(acc - (f2 - 2 * f1 + f0) / (ha * ha)) < 1e-4);
    }
  }
}

TEST_CASE("rise is monotone up and fall is monotone down for flat ground") {
  const SwingProfile p = profile(0.3);
  double prev = target_height(0.5, p);
  for (int i = 1; i <= 250; ++i) {
    const double x = 0.5 + 0.25 * i / 250.0;
    const double y = target_height(x, p);
    REQUIRE(y >= prev);
    prev = y;
  }
  for (int i = 1; i <= 250; ++i) {
    const double x = 0.75 + 0.25 * i / 250.0;
    const double y = target_height(x, p);
    REQUIRE(y <= prev);
    prev = y;
  }
}
