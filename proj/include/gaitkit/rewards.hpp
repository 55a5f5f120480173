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

#ifndef GAITKIT_REWARDS_HPP_
#define GAITKIT_REWARDS_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "gaitkit/commands.hpp"
#include "gaitkit/gait.hpp"
#include "gaitkit/layout.hpp"
#include "gaitkit/robot_step.hpp"

namespace gaitkit {

// Every reward term of the suite, in table order.
enum class RewardTerm {
  kLinearTracking = 0,
  kAngularTracking,
  kBodyHeight,
  kBodyPitch,
  kWaistYaw,
  kFootSwing,
  kContactSwing,
  kRollPitchAngularVelocity,
  kVerticalVelocity,
  kFeetSlip,
  kActionRate,
  kActionSmoothness,
  kJointTorque,
  kJointAcceleration,
  kUpperJointDeviation,
  kHipJointDeviation,
  kFeetSymmetry,
  kTermination,
  kCount,
};

inline constexpr int kRewardTermCount = static_cast<int>(RewardTerm::kCount);

enum class RewardGroup { kTask, kBehavior, kRegularization };

const char* to_string(RewardTerm term);
RewardGroup group_of(RewardTerm term);

// Per-term weights; the defaults reproduce the reference table exactly.
struct RewardWeights {
  double linear_tracking = 2.0;
  double angular_tracking = 2.0;
  double body_height = -40.0;
  double body_pitch = -10.0;
  double waist_yaw = -2.0;
  double foot_swing = -30.0;
  double contact_swing = -2.0;
  double roll_pitch_angular_velocity = -0.5;
  double vertical_velocity = -0.1;
  double feet_slip = -0.2;
  double action_rate = -0.01;
  double action_smoothness = -0.01;
  double joint_torque = -5e-6;
  double joint_acceleration = -2.5e-7;
  double upper_joint_deviation = -0.5;
  double hip_joint_deviation = -2.0;
  double feet_symmetry = -5.0;
  double termination = -200.0;

  double weight(RewardTerm term) const;
};

// The contact-swing exponent is printed with a positive argument, which
// explodes for large forces; kAsPrinted clamps the argument, while
// kNegatedExponent uses the bounded exp(-x/sigma) variant.
enum class ContactRewardForm { kAsPrinted, kNegatedExponent };

struct RewardConfig {
  RewardWeights weights;
  ContactModelParams contact;
  double sigma_cf = 50.0;  // contact-force shaping scale
  double sigma_cv = 5.0;   // foot-velocity shaping scale
  ContactRewardForm contact_form = ContactRewardForm::kAsPrinted;
  double exponent_clamp = 20.0;
};

struct RewardTermValue {
  double unweighted = 0.0;
  double weighted = 0.0;
  bool masked = false;
};

// Per-term values for one step. Masked terms keep their computed value
// but are excluded from every total.
struct RewardBreakdown {
  std::array<RewardTermValue, kRewardTermCount> terms{};

  const RewardTermValue& operator[](RewardTerm term) const {
    return terms[static_cast<int>(term)];
  }
  RewardTermValue& operator[](RewardTerm term) {
    return terms[static_cast<int>(term)];
  }

  double group_total(RewardGroup group) const;
  double total() const;
};

// --- Individual term evaluators -------------------------------------------

// Weighted (linear, angular) velocity tracking rewards.
std::pair<double, double> reward_velocity_tracking(const RobotStep& step,
                                                   const CommandVector& cmd,
                                                   const RewardWeights& w);

// Weighted (height, pitch, waist) posture tracking penalties.
std::array<double, 3> reward_posture(const RobotStep& step,
                                     const CommandVector& cmd,
                                     const RewardWeights& w);

// Weighted swing-height tracking penalty; targets come from the swing
// planner at the step's homogenized phases.
double reward_foot_swing(const RobotStep& step, const CommandVector& cmd,
                         const std::array<double, 2>& contact_probs,
                         const RewardWeights& w);

// Weighted contact-schedule consistency term: stance feet are penalized
// for sliding, swing feet for carrying force.
double reward_contact_swing(const RobotStep& step,
                            const std::array<double, 2>& contact_probs,
                            const RewardConfig& config);

// The regularization block, in table order starting at
// kRollPitchAngularVelocity. Returns weighted values.
std::array<double, 11> reward_regularization(const RobotStep& step,
                                             const JointLayout& layout,
                                             const RewardWeights& w);

// Full table for one step. The intervention mask is NOT applied here.
RewardBreakdown evaluate_rewards(const RobotStep& step,
                                 const CommandVector& cmd,
                                 const JointLayout& layout,
                                 const RewardConfig& config);

// When the intervention flag is set, upper-body-only regularizers are
// flagged masked and stop contributing to totals. Idempotent.
RewardBreakdown apply_intervention_mask(RewardBreakdown breakdown,
                                        bool intervention);

// --- Episode metrics -------------------------------------------------------

struct TrackingErrorReport {
  double e_vx = 0.0;
  double e_vy = 0.0;
  double e_omega = 0.0;
  double e_height = 0.0;
  double e_pitch = 0.0;
  double e_waist = 0.0;
  // Foot-command errors aggregate per completed gait cycle and are absent
  // when the log contains none.
  std::optional<double> e_frequency;
  std::optional<double> e_swing_height;
  int completed_cycles = 0;
  double foot_displacement_m = 0.0;
};

// Episodic L1 tracking errors against a command held over the whole log,
// plus the total foot travel. Throws on an empty log.
TrackingErrorReport tracking_error(const std::vector<RobotStep>& log,
                                   const CommandVector& cmd);

}  // namespace gaitkit

#endif  // GAITKIT_REWARDS_HPP_
