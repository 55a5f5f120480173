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

#include "gaitkit/rewards.hpp"

#include <cmath>
#include <stdexcept>

#include "gaitkit/swing.hpp"

namespace gaitkit {

namespace {

constexpr double kPhaseEqualityTol = 1e-9;

void check_finite(const Eigen::Ref<const Eigen::VectorXd>& v,
                  const char* what) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string("non-finite ") + what);
  }
}

double linear_tracking_raw(const RobotStep& step, const CommandVector& cmd) {
  const Eigen::Vector2d err(cmd.task.vx_mps - step.base_lin_vel.x(),
                            cmd.task.vy_mps - step.base_lin_vel.y());
  return std::exp(-err.squaredNorm() / 0.2);
}

double angular_tracking_raw(const RobotStep& step, const CommandVector& cmd) {
  const double err = cmd.task.yaw_rate_rps - step.base_ang_vel.z();
  return std::exp(-(err * err) / 0.2);
}

std::array<double, 3> posture_raw(const RobotStep& step,
                                  const CommandVector& cmd) {
  const double dh = cmd.behavior.body_height_m - step.body_height_m;
  const double dp = cmd.behavior.body_pitch_rad - step.body_pitch_rad;
  const double dw = cmd.behavior.waist_yaw_rad - step.waist_yaw_rad;
  return {dh * dh, dp * dp, dw * dw};
}

double foot_swing_raw(const RobotStep& step, const CommandVector& cmd,
                      const std::array<double, 2>& contact_probs) {
  SwingProfile profile;
  profile.peak_height_m = cmd.behavior.swing_height_m;
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double target = target_height(step.phase_bar[i], profile);
    const double err = target - step.feet[i].swing_height_m;
    sum += (1.0 - contact_probs[i]) * err * err;
  }
  return sum;
}

double contact_swing_raw(const RobotStep& step,
                         const std::array<double, 2>& contact_probs,
                         const RewardConfig& config) {
  const double sign =
      config.contact_form == ContactRewardForm::kAsPrinted ? 1.0 : -1.0;
  double value = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double c = contact_probs[i];
    const double force_sq = step.feet[i].contact_force.squaredNorm();
    const double slip_sq = step.feet[i].velocity_xy.squaredNorm();
    const double force_arg =
        std::min(sign * force_sq / config.sigma_cf, config.exponent_clamp);
    const double slip_arg =
        std::min(sign * slip_sq / config.sigma_cv, config.exponent_clamp);
    value += -(1.0 - c) * (1.0 - std::exp(force_arg));
    value += -c * (1.0 - std::exp(slip_arg));
  }
  return value;
}

std::array<double, 11> regularization_raw(const RobotStep& step,
                                          const JointLayout& layout) {
  std::array<double, 11> out{};
  const Eigen::Vector2d omega_xy(step.base_ang_vel.x(), step.base_ang_vel.y());
  out[0] = omega_xy.squaredNorm();
  out[1] = step.base_lin_vel.z() * step.base_lin_vel.z();

  double slip = 1.0;
  for (const FootState& foot : step.feet) {
    slip -= std::exp(-foot.velocity_xy.squaredNorm());
  }
  out[2] = slip;

  out[3] = (step.action - step.action_prev).squaredNorm();
  out[4] = (step.action_prev2 - 2.0 * step.action_prev + step.action)
               .squaredNorm();
  out[5] = step.joint_torque.squaredNorm();
  out[6] = step.joint_acc.squaredNorm();

  const Eigen::VectorXd nominal = layout.nominal_pose();
  double upper = 0.0;
  for (int i : layout.upper_indices()) {
    const double d = step.joint_pos(i) - nominal(i);
    upper += d * d;
  }
  out[7] = upper;

  double hip = 0.0;
  for (int i : layout.hip_roll_yaw_indices()) {
    const double d = step.joint_pos(i) - nominal(i);
    hip += d * d;
  }
  out[8] = hip;

  double symmetry = 0.0;
  if (std::abs(step.phase_bar[0] - step.phase_bar[1]) < kPhaseEqualityTol) {
    const Eigen::Vector2d a(step.feet[0].position_xy.x(),
                            step.feet[0].swing_height_m);
    const Eigen::Vector2d b(step.feet[1].position_xy.x(),
                            step.feet[1].swing_height_m);
    symmetry = (a - b).squaredNorm();
  }
  out[9] = symmetry;

  out[10] = step.terminated ? 1.0 : 0.0;
  return out;
}

}  // namespace

RobotStep make_zero_step(int dof) {
  RobotStep s;
  s.joint_pos = Eigen::VectorXd::Zero(dof);
  s.joint_vel = Eigen::VectorXd::Zero(dof);
  s.joint_acc = Eigen::VectorXd::Zero(dof);
  s.joint_torque = Eigen::VectorXd::Zero(dof);
  s.action = Eigen::VectorXd::Zero(dof);
  s.action_prev = Eigen::VectorXd::Zero(dof);
  s.action_prev2 = Eigen::VectorXd::Zero(dof);
  s.collision_flags = Eigen::VectorXd::Zero(kCollisionFlags);
  return s;
}

void validate(const RobotStep& step, int dof) {
  for (const auto* v : {&step.joint_pos, &step.joint_vel, &step.joint_acc,
                        &step.joint_torque, &step.action, &step.action_prev,
                        &step.action_prev2}) {
    if (v->size() != dof) {
      throw std::invalid_argument("joint vector dimension mismatch");
    }
    check_finite(*v, "joint vector");
  }
  if (step.collision_flags.size() != kCollisionFlags) {
    throw std::invalid_argument("collision flag dimension mismatch");
  }
  if (!step.base_lin_vel.allFinite() || !step.base_ang_vel.allFinite() ||
      !std::isfinite(step.body_height_m) ||
      !std::isfinite(step.body_pitch_rad) ||
      !std::isfinite(step.body_roll_rad) ||
      !std::isfinite(step.waist_yaw_rad)) {
    throw std::invalid_argument("non-finite base state");
  }
  for (const FootState& foot : step.feet) {
    if (!foot.position_xy.allFinite() || !foot.velocity_xy.allFinite() ||
        !foot.contact_force.allFinite() ||
        !std::isfinite(foot.swing_height_m)) {
      throw std::invalid_argument("non-finite foot state");
    }
    if (foot.contact_force.z() < 0.0) {
      throw std::invalid_argument("negative normal contact force");
    }
  }
  for (double pb : step.phase_bar) {
    if (!(pb >= 0.0 && pb <= 1.0)) {
      throw std::invalid_argument("homogenized phase out of [0, 1]");
    }
  }
}

const char* to_string(RewardTerm term) {
  switch (term) {
    case RewardTerm::kLinearTracking:
      return "linear_velocity_tracking";
    case RewardTerm::kAngularTracking:
      return "angular_velocity_tracking";
    case RewardTerm::kBodyHeight:
      return "body_height_tracking";
    case RewardTerm::kBodyPitch:
      return "body_pitch_tracking";
    case RewardTerm::kWaistYaw:
      return "waist_yaw_tracking";
    case RewardTerm::kFootSwing:
      return "foot_swing_tracking";
    case RewardTerm::kContactSwing:
      return "contact_swing_tracking";
    case RewardTerm::kRollPitchAngularVelocity:
      return "roll_pitch_angular_velocity";
    case RewardTerm::kVerticalVelocity:
      return "vertical_body_movement";
    case RewardTerm::kFeetSlip:
      return "feet_slip";
    case RewardTerm::kActionRate:
      return "action_rate";
    case RewardTerm::kActionSmoothness:
      return "action_smoothness";
    case RewardTerm::kJointTorque:
      return "joint_torque";
    case RewardTerm::kJointAcceleration:
      return "joint_acceleration";
    case RewardTerm::kUpperJointDeviation:
      return "upper_joint_deviation";
    case RewardTerm::kHipJointDeviation:
      return "hip_joint_deviation";
    case RewardTerm::kFeetSymmetry:
      return "feet_symmetry";
    case RewardTerm::kTermination:
      return "termination";
    case RewardTerm::kCount:
      break;
  }
  throw std::invalid_argument("unknown reward term");
}

RewardGroup group_of(RewardTerm term) {
  switch (term) {
    case RewardTerm::kLinearTracking:
    case RewardTerm::kAngularTracking:
      return RewardGroup::kTask;
    case RewardTerm::kBodyHeight:
    case RewardTerm::kBodyPitch:
    case RewardTerm::kWaistYaw:
    case RewardTerm::kFootSwing:
    case RewardTerm::kContactSwing:
      return RewardGroup::kBehavior;
    default:
      return RewardGroup::kRegularization;
  }
}

double RewardWeights::weight(RewardTerm term) const {
  switch (term) {
    case RewardTerm::kLinearTracking:
      return linear_tracking;
    case RewardTerm::kAngularTracking:
      return angular_tracking;
    case RewardTerm::kBodyHeight:
      return body_height;
    case RewardTerm::kBodyPitch:
      return body_pitch;
    case RewardTerm::kWaistYaw:
      return waist_yaw;
    case RewardTerm::kFootSwing:
      return foot_swing;
    case RewardTerm::kContactSwing:
      return contact_swing;
    case RewardTerm::kRollPitchAngularVelocity:
      return roll_pitch_angular_velocity;
    case RewardTerm::kVerticalVelocity:
      return vertical_velocity;
    case RewardTerm::kFeetSlip:
      return feet_slip;
    case RewardTerm::kActionRate:
      return action_rate;
    case RewardTerm::kActionSmoothness:
      return action_smoothness;
    case RewardTerm::kJointTorque:
      return joint_torque;
    case RewardTerm::kJointAcceleration:
      return joint_acceleration;
    case RewardTerm::kUpperJointDeviation:
      return upper_joint_deviation;
    case RewardTerm::kHipJointDeviation:
      return hip_joint_deviation;
    case RewardTerm::kFeetSymmetry:
      return feet_symmetry;
    case RewardTerm::kTermination:
      return termination;
    case RewardTerm::kCount:
      break;
  }
  throw std::invalid_argument("unknown reward term");
}

double RewardBreakdown::group_total(RewardGroup group) const {
  double sum = 0.0;
  for (int i = 0; i < kRewardTermCount; ++i) {
    const auto term = static_cast<RewardTerm>(i);
    if (group_of(term) != group) continue;
    if (terms[i].masked) continue;
    sum += terms[i].weighted;
  }
  return sum;
}

double RewardBreakdown::total() const {
  return group_total(RewardGroup::kTask) +
         group_total(RewardGroup::kBehavior) +
         group_total(RewardGroup::kRegularization);
}

std::pair<double, double> reward_velocity_tracking(const RobotStep& step,
                                                   const CommandVector& cmd,
                                                   const RewardWeights& w) {
  return {w.linear_tracking * linear_tracking_raw(step, cmd),
          w.angular_tracking * angular_tracking_raw(step, cmd)};
}

std::array<double, 3> reward_posture(const RobotStep& step,
                                     const CommandVector& cmd,
                                     const RewardWeights& w) {
  const auto raw = posture_raw(step, cmd);
  return {w.body_height * raw[0], w.body_pitch * raw[1],
          w.waist_yaw * raw[2]};
}

double reward_foot_swing(const RobotStep& step, const CommandVector& cmd,
                         const std::array<double, 2>& contact_probs,
                         const RewardWeights& w) {
  return w.foot_swing * foot_swing_raw(step, cmd, contact_probs);
}

double reward_contact_swing(const RobotStep& step,
                            const std::array<double, 2>& contact_probs,
                            const RewardConfig& config) {
  return config.weights.contact_swing *
         contact_swing_raw(step, contact_probs, config);
}

std::array<double, 11> reward_regularization(const RobotStep& step,
                                             const JointLayout& layout,
                                             const RewardWeights& w) {
  validate(step, layout.dof());
  const auto raw = regularization_raw(step, layout);
  std::array<double, 11> out{};
  for (int i = 0; i < 11; ++i) {
    const auto term = static_cast<RewardTerm>(
        static_cast<int>(RewardTerm::kRollPitchAngularVelocity) + i);
    out[i] = w.weight(term) * raw[i];
  }
  return out;
}

RewardBreakdown evaluate_rewards(const RobotStep& step,
                                 const CommandVector& cmd,
                                 const JointLayout& layout,
                                 const RewardConfig& config) {
  validate(step, layout.dof());
  const std::array<double, 2> contact_probs{
      contact_probability(step.phase_bar[0], config.contact),
      contact_probability(step.phase_bar[1], config.contact)};

  RewardBreakdown b;
  const RewardWeights& w = config.weights;
  const auto set = [&](RewardTerm term, double raw) {
    b[term].unweighted = raw;
    b[term].weighted = w.weight(term) * raw;
  };

  set(RewardTerm::kLinearTracking, linear_tracking_raw(step, cmd));
  set(RewardTerm::kAngularTracking, angular_tracking_raw(step, cmd));

  const auto posture = posture_raw(step, cmd);
  set(RewardTerm::kBodyHeight, posture[0]);
  set(RewardTerm::kBodyPitch, posture[1]);
  set(RewardTerm::kWaistYaw, posture[2]);

  set(RewardTerm::kFootSwing, foot_swing_raw(step, cmd, contact_probs));
  set(RewardTerm::kContactSwing, contact_swing_raw(step, contact_probs, config));

  const auto reg = regularization_raw(step, layout);
  for (int i = 0; i < 11; ++i) {
    set(static_cast<RewardTerm>(
            static_cast<int>(RewardTerm::kRollPitchAngularVelocity) + i),
        reg[i]);
  }
  return b;
}

RewardBreakdown apply_intervention_mask(RewardBreakdown breakdown,
                                        bool intervention) {
  if (intervention) {
    breakdown[RewardTerm::kUpperJointDeviation].masked = true;
  }
  return breakdown;
}

TrackingErrorReport tracking_error(const std::vector<RobotStep>& log,
                                   const CommandVector& cmd) {
  if (log.empty()) {
    throw std::invalid_argument("tracking_error: empty log");
  }
  TrackingErrorReport report;
  const double n = static_cast<double>(log.size());
  for (const RobotStep& step : log) {
    report.e_vx += std::abs(cmd.task.vx_mps - step.base_lin_vel.x());
    report.e_vy += std::abs(cmd.task.vy_mps - step.base_lin_vel.y());
    report.e_omega += std::abs(cmd.task.yaw_rate_rps - step.base_ang_vel.z());
    report.e_height +=
        std::abs(cmd.behavior.body_height_m - step.body_height_m);
    report.e_pitch +=
        std::abs(cmd.behavior.body_pitch_rad - step.body_pitch_rad);
    report.e_waist += std::abs(cmd.behavior.waist_yaw_rad - step.waist_yaw_rad);
  }
  report.e_vx /= n;
  report.e_vy /= n;
  report.e_omega /= n;
  report.e_height /= n;
  report.e_pitch /= n;
  report.e_waist /= n;

  for (std::size_t t = 1; t < log.size(); ++t) {
    for (int i = 0; i < 2; ++i) {
      report.foot_displacement_m +=
          (log[t].feet[i].position_xy - log[t - 1].feet[i].position_xy).norm();
    }
  }

  // Foot-command errors aggregate per gait cycle. A cycle spans two
  // consecutive wraps of the left homogenized phase past zero; the
  // partial cycles at the log boundaries are dropped.
  double freq_err_sum = 0.0;
  double swing_err_sum = 0.0;
  int swing_samples = 0;
  bool in_cycle = false;
  std::size_t cycle_start = 0;
  std::array<double, 2> peak{0.0, 0.0};
  for (std::size_t t = 1; t < log.size(); ++t) {
    const bool wrapped = log[t].phase_bar[0] < log[t - 1].phase_bar[0];
    if (wrapped) {
      if (in_cycle) {
        const double wall_time = log[t].time_s - log[cycle_start].time_s;
        if (wall_time > 0.0) {
          ++report.completed_cycles;
          freq_err_sum +=
              std::abs(cmd.behavior.frequency_hz - 1.0 / wall_time);
          for (int i = 0; i < 2; ++i) {
            swing_err_sum += std::abs(cmd.behavior.swing_height_m - peak[i]);
            ++swing_samples;
          }
        }
      }
      in_cycle = true;
      cycle_start = t;
      peak = {log[t].feet[0].swing_height_m, log[t].feet[1].swing_height_m};
    } else if (in_cycle) {
      for (int i = 0; i < 2; ++i) {
        peak[i] = std::max(peak[i], log[t].feet[i].swing_height_m);
      }
    }
  }
  if (report.completed_cycles > 0) {
    report.e_frequency = freq_err_sum / report.completed_cycles;
    report.e_swing_height = swing_err_sum / swing_samples;
  }
  return report;
}

}  // namespace gaitkit
