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

#ifndef GAITKIT_SWING_HPP_
#define GAITKIT_SWING_HPP_

#include <array>
#include <utility>

namespace gaitkit {

// Vertical swing profile: the foot rises from start_height_m to
// peak_height_m over the first half of the swing and falls to end_height_m
// over the second half.
struct SwingProfile {
  double peak_height_m = 0.15;  // commanded apex
  double start_height_m = 0.0;
  double end_height_m = 0.0;
  double phi_stance = 0.5;
};

void validate(const SwingProfile& profile);

// One quintic piece over a closed homogenized-phase interval, stored as
// raw monomial coefficients a5..a0 in the phase variable.
struct QuinticSegment {
  std::array<double, 6> coeffs{};  // a5, a4, a3, a2, a1, a0
  double lo = 0.0;
  double hi = 1.0;

  double position(double phi_bar) const;
  double velocity(double phi_bar) const;      // d/dphi_bar
  double acceleration(double phi_bar) const;  // d^2/dphi_bar^2
};

// Swing-phase knots of the piecewise trajectory. The defaults put the
// apex halfway through the swing half of the homogenized cycle.
struct SwingKnots {
  double start = 0.5;
  double peak = 0.75;
  double end = 1.0;
};

// Target swing height at a homogenized phase in [0, 1]: zero through
// stance, then two quintic arcs (rise, fall) with zero velocity and
// acceleration at the stance boundary, the apex, and touchdown.
double target_height(double phi_bar, const SwingProfile& profile);

// First and second derivatives of target_height with respect to the
// homogenized phase.
std::pair<double, double> target_derivatives(double phi_bar,
                                             const SwingProfile& profile);

// Independent route to the same trajectory: assembles the two 6x6
// boundary-condition systems (position at both segment ends, zero
// velocity and acceleration at both) over the raw phase variable and
// solves them densely. Throws on a degenerate knot interval.
std::pair<QuinticSegment, QuinticSegment> solve_quintic_oracle(
    const SwingProfile& profile, const SwingKnots& knots = SwingKnots{});

}  // namespace gaitkit

#endif  // GAITKIT_SWING_HPP_
