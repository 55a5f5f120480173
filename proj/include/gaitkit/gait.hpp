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

#ifndef GAITKIT_GAIT_HPP_
#define GAITKIT_GAIT_HPP_

#include <array>
#include <optional>
#include <string>

namespace gaitkit {

enum class GaitKind { kWalking, kJumping, kStanding, kHopping };
enum class Foot { kLeft = 0, kRight = 1 };

std::string to_string(GaitKind kind);
GaitKind gait_from_string(const std::string& name);

// A gait is defined by the phase offset between the two legs, the duty
// cycle splitting each cycle into stance and swing, and optionally a pair
// of frozen phase values for legs that do not advance.
struct GaitPreset {
  GaitKind kind = GaitKind::kWalking;
  double phase_offset = 0.5;  // right leg lags the left by this fraction
  double duty_cycle = 0.5;    // stance fraction of the cycle
  std::optional<std::array<double, 2>> fixed_phases;  // {left, right}
  Foot hopping_flying_leg = Foot::kLeft;              // Hopping only

  bool leg_is_fixed(Foot foot) const;
};

GaitPreset walking_preset();
GaitPreset jumping_preset();
GaitPreset standing_preset();
GaitPreset hopping_preset(Foot flying_leg);
GaitPreset preset_for(GaitKind kind, Foot hopping_flying_leg = Foot::kLeft);

// Throws std::invalid_argument when the preset violates its constraints.
void validate(const GaitPreset& preset);

// Per-leg periodic phase, each value in [0, 1). Index 0 is the left leg,
// index 1 the right leg.
struct PhaseState {
  std::array<double, 2> phase{0.0, 0.5};
  double frequency_hz = 2.0;
  double dt_s = 0.02;
  GaitPreset preset = walking_preset();
};

// Initial phase state for a preset: advancing legs start at phase 0 (plus
// offset), frozen legs at their pinned constants.
PhaseState make_phase_state(const GaitPreset& preset, double frequency_hz,
                            double dt_s);

void validate(const PhaseState& state);

// One control-step update. Advancing legs move by f*dt and wrap into
// [0, 1); the right leg of an offset gait is re-derived from the left so
// the offset is preserved exactly. Frozen legs are left untouched.
PhaseState advance_phase(const PhaseState& state);

// Width of the stance/swing switching interval of the contact model.
struct ContactModelParams {
  double sigma = 0.02;
};

void validate(const ContactModelParams& params);

// Standard normal CDF via the complementary error function.
double normal_cdf(double x);

// Remaps phase so stance covers [0, 0.5] and swing [0.5, 1), for any duty
// cycle in (0, 1). Identity when the duty cycle is 0.5.
double homogenize_phase(double phi, double phi_stance);

// Smooth expected ground-contact probability over the homogenized phase,
// built from two normal-CDF pulses so the value stays in [0, 1] and the
// stance/swing switch happens over an interval of width ~6*sigma.
double contact_probability(double phi_bar, const ContactModelParams& params);

std::array<double, 2> homogenized_phases(const PhaseState& state);

// Per-leg clock signals sin(2*pi*phi_bar), in [-1, 1].
std::array<double, 2> clock_values(const PhaseState& state);

std::array<double, 2> contact_probabilities(const PhaseState& state,
                                            const ContactModelParams& params);

}  // namespace gaitkit

#endif  // GAITKIT_GAIT_HPP_
