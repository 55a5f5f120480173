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

#ifndef GAITKIT_ROLLOUT_HPP_
#define GAITKIT_ROLLOUT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gaitkit/commands.hpp"
#include "gaitkit/gait.hpp"
#include "gaitkit/layout.hpp"
#include "gaitkit/rewards.hpp"
#include "gaitkit/robot_step.hpp"

namespace gaitkit {

// Scripted stand-in for the trained policy plus physics: base and posture
// states approach their commands through a first-order lag, feet follow
// the planner targets exactly, and contact forces share the robot weight
// among the scheduled stance feet.
struct RolloutConfig {
  GaitKind gait = GaitKind::kWalking;
  Foot hopping_flying_leg = Foot::kLeft;
  double vx_mps = 0.0;
  double vy_mps = 0.0;
  double yaw_rate_rps = 0.0;
  double frequency_hz = 2.0;
  double swing_height_m = 0.15;
  double body_height_m = 0.0;
  double body_pitch_rad = 0.0;
  double waist_yaw_rad = 0.0;
  int steps = 1000;
  double lag = 0.0;  // per-step carry-over of the tracking error, in [0, 1)
  double dt_s = 0.02;
  std::uint64_t seed = 1;
  double p_flip = 0.0;  // indicator flip probability; 0 disables intervention
  double intervention_alpha = 1.0;
  double noise_margin = 0.0;
  double mass_kg = 50.0;
  double contact_sigma = 0.02;
};

void validate(const RolloutConfig& config);

// The command vector the configuration describes, with clock channels
// from the gait's initial phase state.
CommandVector command_from_config(const RolloutConfig& config);

struct RolloutLog {
  RolloutConfig config;
  CommandVector command;
  std::vector<RobotStep> steps;
};

RolloutLog run_oracle_rollout(const RolloutConfig& config,
                              const JointLayout& layout);

// Episode-mean L1 posture error of a first-order lag that starts at
// `initial` and is logged after each update.
double first_order_lag_mean_error(double initial, double command, double lag,
                                  int steps);

// Writes clocks/contact, swing target-vs-actual, and per-term reward
// curves as CSV files (plus simple SVG line plots on request) into an
// existing directory. Throws on an empty log or unwritable path.
void export_curves(const RolloutLog& log, const JointLayout& layout,
                   const RewardConfig& reward_config,
                   const std::string& directory, bool with_svg = false);

}  // namespace gaitkit

#endif  // GAITKIT_ROLLOUT_HPP_
