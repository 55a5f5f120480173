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

#include "gaitkit/rollout.hpp"

#include <cmath>
#include <stdexcept>

#include "gaitkit/intervention.hpp"
#include "gaitkit/log_io.hpp"
#include "gaitkit/swing.hpp"

namespace gaitkit {

namespace {

constexpr double kGravity = 9.81;
constexpr double kStanceHalfWidth = 0.1;

double lag_toward(double state, double command, double lag) {
  return command + lag * (state - command);
}

}  // namespace

void validate(const RolloutConfig& config) {
  if (config.steps < 1) {
    throw std::invalid_argument("rollout needs at least one step");
  }
  if (!(config.lag >= 0.0 && config.lag < 1.0)) {
    throw std::invalid_argument("lag must be in [0, 1)");
  }
  if (!(config.dt_s > 0.0) || !(config.frequency_hz > 0.0)) {
    throw std::invalid_argument("dt and frequency must be positive");
  }
  if (!(config.mass_kg > 0.0)) {
    throw std::invalid_argument("mass must be positive");
  }
  if (!(config.p_flip >= 0.0 && config.p_flip < 1.0)) {
    throw std::invalid_argument("p_flip must be in [0, 1)");
  }
  if (!(config.intervention_alpha >= 0.0 &&
        config.intervention_alpha <= 1.0)) {
    throw std::invalid_argument("intervention alpha out of [0, 1]");
  }
}

CommandVector command_from_config(const RolloutConfig& config) {
  const GaitPreset preset =
      preset_for(config.gait, config.hopping_flying_leg);
  const PhaseState phase =
      make_phase_state(preset, config.frequency_hz, config.dt_s);
  CommandVector cmd;
  cmd.task.vx_mps = config.vx_mps;
  cmd.task.vy_mps = config.vy_mps;
  cmd.task.yaw_rate_rps = config.yaw_rate_rps;
  cmd.behavior.frequency_hz = config.frequency_hz;
  cmd.behavior.swing_height_m = config.swing_height_m;
  cmd.behavior.body_height_m = config.body_height_m;
  cmd.behavior.body_pitch_rad = config.body_pitch_rad;
  cmd.behavior.waist_yaw_rad = config.waist_yaw_rad;
  cmd.behavior.phase_offset = preset.phase_offset;
  cmd.behavior.duty_cycle = preset.duty_cycle;
  const auto clocks = clock_values(phase);
  cmd.behavior.clock_left = clocks[0];
  cmd.behavior.clock_right = clocks[1];
  cmd.gait = config.gait;
  return cmd;
}

RolloutLog run_oracle_rollout(const RolloutConfig& config,
                              const JointLayout& layout) {
  validate(config);
  const GaitPreset preset =
      preset_for(config.gait, config.hopping_flying_leg);
  PhaseState phase =
      make_phase_state(preset, config.frequency_hz, config.dt_s);
  const CommandVector cmd = command_from_config(config);

  RolloutLog log;
  log.config = config;
  log.command = cmd;
  log.steps.reserve(config.steps);

  Rng rng(config.seed);
  const NoiseBox noise_box =
      NoiseBox::from_layout(layout, config.noise_margin);
  InterventionState intervention = make_intervention_state(
      noise_box, rng, config.p_flip > 0.0 ? config.p_flip : 0.005, 90);
  intervention.alpha = config.intervention_alpha;

  SwingProfile profile;
  profile.peak_height_m = config.swing_height_m;

  const Eigen::VectorXd nominal = layout.nominal_pose();
  const auto upper = layout.upper_indices();
  Eigen::VectorXd upper_nominal(upper.size());
  for (std::size_t k = 0; k < upper.size(); ++k) {
    upper_nominal(static_cast<int>(k)) = nominal(upper[k]);
  }

  // Tracked states start at the neutral pose, not at the command.
  double vx = 0.0, vy = 0.0, wz = 0.0;
  double height = 0.0, pitch = 0.0, waist = 0.0;

  // World-frame foot anchors; swing interpolates from the anchor to the
  // anchor plus one stride.
  const double swing_span = 0.5;  // homogenized swing occupies [0.5, 1]
  std::array<double, 2> foot_anchor_x{0.0, 0.0};
  std::array<double, 2> foot_x = foot_anchor_x;
  std::array<bool, 2> in_swing{false, false};
  const std::array<double, 2> foot_y{kStanceHalfWidth, -kStanceHalfWidth};

  Eigen::VectorXd q = nominal;
  Eigen::VectorXd q_prev = nominal;
  Eigen::VectorXd qd_prev = Eigen::VectorXd::Zero(layout.dof());
  Eigen::VectorXd action_prev = nominal;
  Eigen::VectorXd action_prev2 = nominal;
  std::array<double, 2> prev_foot_x = foot_x;

  const ContactModelParams contact_params{config.contact_sigma};

  for (int t = 1; t <= config.steps; ++t) {
    phase = advance_phase(phase);
    const auto bars = homogenized_phases(phase);
    const auto contact = contact_probabilities(phase, contact_params);

    vx = lag_toward(vx, cmd.task.vx_mps, config.lag);
    vy = lag_toward(vy, cmd.task.vy_mps, config.lag);
    wz = lag_toward(wz, cmd.task.yaw_rate_rps, config.lag);
    height = lag_toward(height, cmd.behavior.body_height_m, config.lag);
    pitch = lag_toward(pitch, cmd.behavior.body_pitch_rad, config.lag);
    waist = lag_toward(waist, cmd.behavior.waist_yaw_rad, config.lag);

    if (config.p_flip > 0.0) {
      intervention = step_indicator(intervention, rng);
    }
    Eigen::VectorXd upper_action = upper_nominal;
    {
      auto [next_state, noise] =
          noise_interpolate(intervention, t, noise_box, rng);
      intervention = std::move(next_state);
      if (config.p_flip > 0.0 && intervention.intervening) {
        upper_action =
            blend_with_policy(upper_nominal, noise, intervention.alpha);
      }
    }

    q_prev = q;
    q = nominal;
    for (std::size_t k = 0; k < upper.size(); ++k) {
      q(upper[k]) = upper_action(static_cast<int>(k));
    }
    q(layout.index_of("waist_yaw")) = waist;

    const double stride =
        vx * (preset.duty_cycle / config.frequency_hz);
    const double swing_time_s =
        (1.0 - preset.duty_cycle) / config.frequency_hz;

    std::array<FootState, 2> feet;
    for (int i = 0; i < 2; ++i) {
      const bool swinging = bars[i] > 0.5 && bars[i] < 1.0;
      if (swinging && !in_swing[i]) {
        in_swing[i] = true;
        foot_anchor_x[i] = foot_x[i];
      } else if (!swinging) {
        in_swing[i] = false;
      }
      if (swinging) {
        const double progress = (bars[i] - 0.5) / swing_span;
        foot_x[i] = foot_anchor_x[i] + progress * stride;
        feet[i].velocity_xy = Eigen::Vector2d(
            swing_time_s > 0.0 ? stride / swing_time_s : 0.0, 0.0);
      } else {
        feet[i].velocity_xy = Eigen::Vector2d::Zero();
      }
      feet[i].position_xy = Eigen::Vector2d(foot_x[i], foot_y[i]);
      feet[i].swing_height_m = target_height(bars[i], profile);
    }

    int stance_count = 0;
    for (int i = 0; i < 2; ++i) stance_count += contact[i] > 0.5;
    for (int i = 0; i < 2; ++i) {
      feet[i].contact_force = Eigen::Vector3d::Zero();
      if (contact[i] > 0.5 && stance_count > 0) {
        feet[i].contact_force.z() =
            config.mass_kg * kGravity / stance_count;
      }
    }

    RobotStep step = make_zero_step(layout.dof());
    step.index = t - 1;
    step.time_s = t * config.dt_s;
    step.base_lin_vel = Eigen::Vector3d(vx, vy, 0.0);
    step.base_ang_vel = Eigen::Vector3d(0.0, 0.0, wz);
    step.body_height_m = height;
    step.body_pitch_rad = pitch;
    step.waist_yaw_rad = waist;
    step.joint_pos = q;
    step.joint_vel = (q - q_prev) / config.dt_s;
    step.joint_acc = (step.joint_vel - qd_prev) / config.dt_s;
    step.feet = feet;
    step.action = q;
    step.action_prev = action_prev;
    step.action_prev2 = action_prev2;
    step.phase_bar = bars;
    step.intervention = config.p_flip > 0.0 && intervention.intervening;
    log.steps.push_back(std::move(step));

    qd_prev = log.steps.back().joint_vel;
    action_prev2 = action_prev;
    action_prev = q;
    prev_foot_x = foot_x;
  }
  return log;
}

double first_order_lag_mean_error(double initial, double command, double lag,
                                  int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be positive");
  if (lag == 0.0) return 0.0;
  // |x_t - c| = |x_0 - c| * lag^t, logged for t = 1..N.
  const double gap = std::abs(initial - command);
  return gap * lag * (1.0 - std::pow(lag, steps)) /
         (static_cast<double>(steps) * (1.0 - lag));
}

void export_curves(const RolloutLog& log, const JointLayout& layout,
                   const RewardConfig& reward_config,
                   const std::string& directory, bool with_svg) {
  if (log.steps.empty()) {
    throw std::invalid_argument("cannot export curves from an empty log");
  }

  {
    CsvWriter clocks(directory + "/clocks.csv");
    clocks.header({"t", "phibar1", "phibar2", "clockL", "clockR", "C1", "C2"});
    const ContactModelParams params{log.config.contact_sigma};
    for (const RobotStep& step : log.steps) {
      const double two_pi = 6.28318530717958647692;
      clocks.row({step.time_s, step.phase_bar[0], step.phase_bar[1],
                  std::sin(two_pi * step.phase_bar[0]),
                  std::sin(two_pi * step.phase_bar[1]),
                  contact_probability(step.phase_bar[0], params),
                  contact_probability(step.phase_bar[1], params)});
    }
  }

  {
    CsvWriter swing(directory + "/swing.csv");
    swing.header({"t", "target_left", "actual_left", "target_right",
                  "actual_right"});
    SwingProfile profile;
    profile.peak_height_m = log.command.behavior.swing_height_m;
    for (const RobotStep& step : log.steps) {
      swing.row({step.time_s, target_height(step.phase_bar[0], profile),
                 step.feet[0].swing_height_m,
                 target_height(step.phase_bar[1], profile),
                 step.feet[1].swing_height_m});
    }
  }

  {
    CsvWriter rewards(directory + "/rewards.csv");
    std::vector<std::string> columns{"t"};
    for (int i = 0; i < kRewardTermCount; ++i) {
      columns.push_back(to_string(static_cast<RewardTerm>(i)));
    }
    columns.push_back("total");
    rewards.header(columns);
    for (const RobotStep& step : log.steps) {
      RewardBreakdown b =
          apply_intervention_mask(evaluate_rewards(step, log.command, layout,
                                                   reward_config),
                                  step.intervention);
      std::vector<double> row{step.time_s};
      for (int i = 0; i < kRewardTermCount; ++i) {
        const auto& term = b.terms[i];
        row.push_back(term.masked ? 0.0 : term.weighted);
      }
      row.push_back(b.total());
      rewards.row(row);
    }
  }

  if (with_svg) {
    std::vector<double> time, clock_left, clock_right;
    const double two_pi = 6.28318530717958647692;
    for (const RobotStep& step : log.steps) {
      time.push_back(step.time_s);
      clock_left.push_back(std::sin(two_pi * step.phase_bar[0]));
      clock_right.push_back(std::sin(two_pi * step.phase_bar[1]));
    }
    write_svg_lines(directory + "/clocks.svg", time,
                    {{"clockL", clock_left}, {"clockR", clock_right}});

    std::vector<double> target_l, actual_l;
    SwingProfile profile;
    profile.peak_height_m = log.command.behavior.swing_height_m;
    for (const RobotStep& step : log.steps) {
      target_l.push_back(target_height(step.phase_bar[0], profile));
      actual_l.push_back(step.feet[0].swing_height_m);
    }
    write_svg_lines(directory + "/swing.svg", time,
                    {{"target_left", target_l}, {"actual_left", actual_l}});
  }
}

}  // namespace gaitkit
