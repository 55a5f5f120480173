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

#ifndef GAITKIT_COMMANDS_HPP_
#define GAITKIT_COMMANDS_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gaitkit/gait.hpp"
#include "gaitkit/rng.hpp"

namespace gaitkit {

// Task side of the command space: desired base velocities.
struct TaskCommand {
  double vx_mps = 0.0;
  double vy_mps = 0.0;
  double yaw_rate_rps = 0.0;
};

// Behavior side: foot, posture, and gait shaping channels plus the two
// derived clock signals. Serialized wire order is
//   f, l, h, p, w, psi, phi_stance, clock_left, clock_right.
struct BehaviorCommand {
  double frequency_hz = 2.0;
  double swing_height_m = 0.15;
  double body_height_m = 0.0;
  double body_pitch_rad = 0.0;
  double waist_yaw_rad = 0.0;
  double phase_offset = 0.5;
  double duty_cycle = 0.5;
  double clock_left = 0.0;
  double clock_right = 0.0;

  std::array<double, 9> extended() const {
    return {frequency_hz, swing_height_m, body_height_m,
            body_pitch_rad, waist_yaw_rad, phase_offset,
            duty_cycle,     clock_left,    clock_right};
  }
};

struct CommandVector {
  TaskCommand task;
  BehaviorCommand behavior;
  GaitKind gait = GaitKind::kWalking;

  // Flattened 12-channel form: 3 task channels then the extended behavior
  // command.
  std::array<double, 12> flatten() const;
};

inline constexpr int kCommandDim = 12;

// Curriculum bounds of one scalar channel. The live range starts at the
// initial bounds and may grow up to the finishing bounds.
struct ChannelRange {
  double default_value = 0.0;
  double initial_min = 0.0;
  double initial_max = 0.0;
  double finishing_min = 0.0;
  double finishing_max = 0.0;
  double live_min = 0.0;
  double live_max = 0.0;
};

ChannelRange make_channel(double def, double init_min, double init_max,
                          double fin_min, double fin_max);
ChannelRange fixed_channel(double value);

struct CommandRanges {
  ChannelRange vx;
  ChannelRange vy;
  ChannelRange yaw_rate;
  ChannelRange frequency;
  ChannelRange swing_height;
  ChannelRange body_height;
  ChannelRange body_pitch;
  ChannelRange waist_yaw;

  // Standard table: vx [-0.6,0.6]->[-0.6,2.0], vy [-0.6,0.6], yaw
  // [-0.6,0.6]->[-1,1], f [1.5,3.5], l [0.1,0.35], h [-0.3,0],
  // p [0,0.4], w [-1,1].
  static CommandRanges defaults();
  // Hopping restricts the space to {vx, vy, yaw rate, body height}; the
  // other channels collapse to their defaults.
  static CommandRanges hopping_defaults();
};

void validate(const ChannelRange& range);
void validate(const CommandRanges& ranges);

// Draws one command uniformly per channel from the live ranges. Clock
// channels are filled from the phase state; hopping keeps its unsupported
// channels pinned at defaults. Throws on an empty live range.
CommandVector sample_command(const CommandRanges& ranges,
                             const GaitPreset& preset,
                             const PhaseState& phase, Rng& rng);

// Command with every channel at its default value.
CommandVector default_command(const CommandRanges& ranges,
                              const GaitPreset& preset,
                              const PhaseState& phase);

// ---------------------------------------------------------------------------
// Speed-grid curriculum over (vx, yaw rate) bins.

struct SpeedGridConfig {
  double vx_min = -0.6;
  double vx_max = 2.0;
  double wz_min = -1.0;
  double wz_max = 1.0;
  double vx_bin = 0.2;
  double wz_bin = 0.2;
};

struct SpeedGridThresholds {
  double reward_threshold = 1.6;
  int required_successes = 1;
};

struct SpeedGridState {
  SpeedGridConfig config;
  int nx = 0;
  int nw = 0;
  std::vector<std::uint8_t> unlocked;  // row-major [ix * nw + iw]
  std::vector<int> successes;

  int index(int ix, int iw) const { return ix * nw + iw; }
  bool is_unlocked(int ix, int iw) const;
  std::pair<int, int> default_bin() const;  // bin containing (0, 0)
  int unlocked_count() const;
};

// Grid with only the default bin unlocked.
SpeedGridState make_speed_grid(const SpeedGridConfig& config = {});

// When the tracking reward in an unlocked bin clears the threshold often
// enough, the four neighbouring bins unlock (clamped at the grid edge).
// Failures leave the grid untouched; a fully unlocked grid is a fixed
// point. Throws when the bin is locked or out of range.
SpeedGridState update_speed_grid(const SpeedGridState& state, int ix, int iw,
                                 double tracking_reward,
                                 const SpeedGridThresholds& thresholds);

// True when every unlocked bin can reach the default bin through unlocked
// 4-neighbours.
bool unlocked_region_connected(const SpeedGridState& state);

// Uniform draw over the unlocked bins, then uniform inside the bin.
// Returns (vx, yaw_rate). Throws when nothing is unlocked.
std::pair<double, double> sample_from_grid(const SpeedGridState& state,
                                           Rng& rng);

// ---------------------------------------------------------------------------
// Intervention noise curriculum.

struct NoiseAlphaThresholds {
  double linear_reward = 1.6;
  double angular_reward = 1.6;
};

// Moves the blend fraction alpha in 0.01 steps: up when both tracking
// rewards clear their thresholds, down when either drops below two thirds
// of its threshold, clamped to [0, 1]. Alpha is quantized to the 0.01
// grid so that 100 consecutive successes from zero land exactly on 1.
double update_noise_alpha(double alpha, double linear_reward,
                          double angular_reward,
                          const NoiseAlphaThresholds& thresholds = {});

}  // namespace gaitkit

#endif  // GAITKIT_COMMANDS_HPP_
