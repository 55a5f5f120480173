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
#include <doctest.h>

#include "gaitkit/rng.hpp"
#include "reward_fixtures.hpp"

using namespace gaitkit;

namespace {

const JointLayout& layout() {
  static const JointLayout l = JointLayout::default_humanoid();
  return l;
}

RobotStep base_step() { return test::baseline_step(layout()); }
CommandVector base_cmd() { return test::default_walk_command(); }

}  // namespace

TEST_CASE("table weights match the reference table exactly") {
  const RewardWeights w;
  CHECK(w.linear_tracking == 2.0);
  CHECK(w.angular_tracking == 2.0);
  CHECK(w.body_height == -40.0);
  CHECK(w.body_pitch == -10.0);
  CHECK(w.waist_yaw == -2.0);
  CHECK(w.foot_swing == -30.0);
  CHECK(w.contact_swing == -2.0);
  CHECK(w.roll_pitch_angular_velocity == -0.5);
  CHECK(w.vertical_velocity == -0.1);
  CHECK(w.feet_slip == -0.2);
  CHECK(w.action_rate == -0.01);
  CHECK(w.action_smoothness == -0.01);
  CHECK(w.joint_torque == -5e-6);
  CHECK(w.joint_acceleration == -2.5e-7);
  CHECK(w.upper_joint_deviation == -0.5);
  CHECK(w.hip_joint_deviation == -2.0);
  CHECK(w.feet_symmetry == -5.0);
  CHECK(w.termination == -200.0);
  // One weight accessor per table row and nothing else.
  for (int i = 0; i < kRewardTermCount; ++i) {
    CHECK(w.weight(static_cast<RewardTerm>(i)) != 0.0);
  }
}

TEST_CASE("velocity tracking rewards") {
  const RewardWeights w;
  auto step = base_step();
  auto cmd = base_cmd();
  auto [lin, ang] = reward_velocity_tracking(step, cmd, w);
  CHECK(lin == 2.0);
  CHECK(ang == 2.0);

  step.base_lin_vel.x() = 0.2;
  std::tie(lin, ang) = reward_velocity_tracking(step, cmd, w);
  CHECK(std::abs(lin - 2.0 * std::exp(-0.2)) < 1e-12);
  CHECK(ang == 2.0);

  step.base_lin_vel.x() = 0.0;
  step.base_ang_vel.z() = 0.2;
  std::tie(lin, ang) = reward_velocity_tracking(step, cmd, w);
  CHECK(lin == 2.0);
  CHECK(std::abs(ang - 2.0 * std::exp(-0.2)) < 1e-12);
}

TEST_CASE("posture tracking rewards") {
  const RewardWeights w;
  auto step = base_step();
  auto cmd = base_cmd();
  step.body_height_m = 0.1;
  step.waist_yaw_rad = 0.5;
  const auto r = reward_posture(step, cmd, w);
  CHECK(std::abs(r[0] - (-0.4)) < 1e-12);
  CHECK(r[1] == 0.0);
  CHECK(std::abs(r[2] - (-0.5)) < 1e-12);
}

TEST_CASE("foot swing tracking reward") {
  const RewardWeights w;
  auto step = base_step();
  auto cmd = base_cmd();

  // Perfect tracking.
  step.phase_bar = {0.25, 0.75};
  step.feet[1].swing_height_m = 0.15;
  CHECK(reward_foot_swing(step, cmd, {1.0, 0.0}, w) == 0.0);

  // Swing foot 0.05 m off, the stance foot fully weighted away.
  step.feet[1].swing_height_m = 0.10;
  step.feet[0].swing_height_m = 0.33;  // irrelevant under C = 1
  CHECK(std::abs(reward_foot_swing(step, cmd, {1.0, 0.0}, w) - (-0.075)) <
        1e-12);

  // Both feet in full stance: masked regardless of the error.
  step.phase_bar = {0.25, 0.25};
  CHECK(reward_foot_swing(step, cmd, {1.0, 1.0}, w) == 0.0);
}

TEST_CASE("contact-swing reward as printed") {
  RewardConfig config;
  auto step = base_step();

  // Stance foot at rest and swing foot without load contribute nothing.
  CHECK(reward_contact_swing(step, {1.0, 0.0}, config) == 0.0);

  // Swing foot carrying |f|^2 = 50.
  step.feet[1].contact_force = Eigen::Vector3d(3.0, 4.0, 5.0);
  const double expected = -2.0 * (std::exp(1.0) - 1.0);
  CHECK(std::abs(reward_contact_swing(step, {1.0, 0.0}, config) - expected) <
        1e-12);

  // The printed exponent is clamped, so huge forces stay finite.
  step.feet[1].contact_force = Eigen::Vector3d(0.0, 0.0, 1e6);
  const double clamped = reward_contact_swing(step, {1.0, 0.0}, config);
  CHECK(std::isfinite(clamped));
  CHECK(std::abs(clamped - (-2.0 * (std::exp(20.0) - 1.0))) < 1e-3);
}

TEST_CASE("contact-swing reward with the negated exponent form") {
  RewardConfig config;
  config.contact_form = ContactRewardForm::kNegatedExponent;
  auto step = base_step();
  step.feet[1].contact_force = Eigen::Vector3d(3.0, 4.0, 5.0);
  const double expected = -2.0 * (std::exp(-1.0) - 1.0);
  CHECK(std::abs(reward_contact_swing(step, {1.0, 0.0}, config) - expected) <
        1e-12);
  // Bounded without any clamp taking effect.
  step.feet[1].contact_force = Eigen::Vector3d(0.0, 0.0, 1e9);
  CHECK(std::abs(reward_contact_swing(step, {1.0, 0.0}, config) - (-2.0)) <
        1e-9);
}

TEST_CASE("regularization block") {
  const RewardWeights w;
  auto step = base_step();

  auto reg = reward_regularization(step, layout(), w);
  CHECK(reg[0] == 0.0);  // roll/pitch angular velocity
  CHECK(reg[1] == 0.0);  // vertical velocity
  CHECK(std::abs(reg[2] - 0.2) < 1e-12);  // feet slip at rest, as printed
  CHECK(reg[3] == 0.0);
  CHECK(reg[4] == 0.0);

  step.terminated = true;
  reg = reward_regularization(step, layout(), w);
  CHECK(reg[10] == -200.0);

  // Jumping-style equal phases with an asymmetric stance.
  step.feet[0].position_xy = Eigen::Vector2d(0.05, 0.1);
  step.feet[1].position_xy = Eigen::Vector2d(-0.05, -0.1);
  reg = reward_regularization(step, layout(), w);
  CHECK(std::abs(reg[9] - (-0.05)) < 1e-12);

  // Unequal phases switch the symmetry indicator off.
  step.phase_bar = {0.25, 0.75};
  reg = reward_regularization(step, layout(), w);
  CHECK(reg[9] == 0.0);
}

TEST_CASE("intervention mask scope and idempotence") {
  auto step = base_step();
  for (int i : layout().upper_indices()) step.joint_pos(i) = 0.3;
  step.action.setConstant(0.1);
  const RewardConfig config;
  const RewardBreakdown raw =
      evaluate_rewards(step, base_cmd(), layout(), config);

  const RewardBreakdown masked = apply_intervention_mask(raw, true);
  CHECK(masked[RewardTerm::kUpperJointDeviation].masked);
  CHECK(!masked[RewardTerm::kActionRate].masked);
  CHECK(masked[RewardTerm::kActionRate].weighted ==
        raw[RewardTerm::kActionRate].weighted);
  CHECK(std::abs(masked.total() -
                 (raw.total() -
                  raw[RewardTerm::kUpperJointDeviation].weighted)) < 1e-12);

  const RewardBreakdown twice = apply_intervention_mask(masked, true);
  for (int i = 0; i < kRewardTermCount; ++i) {
    CHECK(twice.terms[i].masked == masked.terms[i].masked);
    CHECK(twice.terms[i].weighted == masked.terms[i].weighted);
  }

  const RewardBreakdown untouched = apply_intervention_mask(raw, false);
  CHECK(untouched.total() == raw.total());
  CHECK(!untouched[RewardTerm::kUpperJointDeviation].masked);
}

TEST_CASE("fixture ledger: hand-computed totals match to 1e-12") {
  const RewardConfig config;
  const auto fixtures = test::reward_fixtures(layout());
  REQUIRE(fixtures.size() >= 10);
  for (const auto& fixture : fixtures) {
    CAPTURE(fixture.name);
    const RewardBreakdown b = apply_intervention_mask(
        evaluate_rewards(fixture.step, fixture.cmd, layout(), config),
        fixture.step.intervention);
    CHECK(std::abs(b.total() - fixture.expected_total) < 1e-12);
    CHECK(b[RewardTerm::kUpperJointDeviation].masked == fixture.masked);

    // The grand total is the sum of the weighted unmasked terms, and the
    // groups partition it.
    double manual = 0.0;
    for (int i = 0; i < kRewardTermCount; ++i) {
      if (!b.terms[i].masked) manual += b.terms[i].weighted;
    }
    CHECK(std::abs(b.total() - manual) < 1e-15);
    CHECK(std::abs(b.total() - (b.group_total(RewardGroup::kTask) +
                                b.group_total(RewardGroup::kBehavior) +
                                b.group_total(RewardGroup::kRegularization))) <
          1e-15);
  }
}

TEST_CASE("all rewards stay finite for wild but finite inputs") {
  Rng rng(11);
  const RewardConfig config;
  for (int trial = 0; trial < 200; ++trial) {
    RobotStep step = base_step();
    step.base_lin_vel = Eigen::Vector3d(rng.uniform(-1e3, 1e3),
                                        rng.uniform(-1e3, 1e3),
                                        rng.uniform(-1e3, 1e3));
    step.base_ang_vel = step.base_lin_vel.reverse();
    step.body_height_m = rng.uniform(-10, 10);
    step.joint_torque.setConstant(rng.uniform(-1e4, 1e4));
    step.joint_acc.setConstant(rng.uniform(-1e5, 1e5));
    step.feet[0].velocity_xy = Eigen::Vector2d(rng.uniform(-100, 100), 0);
    step.feet[0].contact_force = Eigen::Vector3d(0, 0, rng.uniform(0, 1e6));
    step.feet[1].contact_force = Eigen::Vector3d(rng.uniform(-1e5, 1e5), 0,
                                                 rng.uniform(0, 1e6));
    step.phase_bar = {rng.uniform(), rng.uniform()};
    const RewardBreakdown b =
        evaluate_rewards(step, base_cmd(), layout(), config);
    for (int i = 0; i < kRewardTermCount; ++i) {
      REQUIRE(std::isfinite(b.terms[i].weighted));
    }
    REQUIRE(std::isfinite(b.total()));
  }
}

TEST_CASE("step validation rejects bad input") {
  auto step = base_step();
  step.joint_pos = Eigen::VectorXd::Zero(5);
  CHECK_THROWS_AS(validate(step, layout().dof()), std::invalid_argument);

  step = base_step();
  step.feet[0].contact_force.z() = -1.0;
  CHECK_THROWS_AS(validate(step, layout().dof()), std::invalid_argument);

  step = base_step();
  step.base_lin_vel.x() = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate(step, layout().dof()), std::invalid_argument);
}

TEST_CASE("tracking error over synthetic logs") {
  auto cmd = base_cmd();
  cmd.behavior.body_height_m = 0.0;

  std::vector<RobotStep> log;
  for (int t = 0; t < 100; ++t) {
    RobotStep step = base_step();
    step.index = t;
    step.time_s = 0.02 * (t + 1);
    log.push_back(step);
  }
  // Perfect standing log: all errors zero, feet stationary.
  TrackingErrorReport report = tracking_error(log, cmd);
  CHECK(report.e_vx == 0.0);
  CHECK(report.e_height == 0.0);
  CHECK(report.foot_displacement_m == 0.0);
  CHECK(report.completed_cycles == 0);
  CHECK(!report.e_frequency.has_value());

  // Constant height offset.
  for (auto& step : log) step.body_height_m = 0.05;
  report = tracking_error(log, cmd);
  CHECK(std::abs(report.e_height - 0.05) < 1e-15);

  CHECK_THROWS_AS(tracking_error({}, cmd), std::invalid_argument);
}

TEST_CASE("cycle aggregation measures frequency from wrap to wrap") {
  auto cmd = base_cmd();
  cmd.behavior.frequency_hz = 2.0;
  cmd.behavior.swing_height_m = 0.15;
  // Synthetic log: phase advances 0.04 per step from 0.30, feet peak at
  // exactly the commanded height in every cycle.
  std::vector<RobotStep> log;
  double phase = 0.30;
  for (int t = 0; t < 200; ++t) {
    RobotStep step = base_step();
    step.index = t;
    step.time_s = 0.02 * (t + 1);
    phase = std::fmod(phase + 0.04, 1.0);
    step.phase_bar = {phase, std::fmod(phase + 0.5, 1.0)};
    step.feet[0].swing_height_m = phase > 0.5 ? 0.15 : 0.0;
    step.feet[1].swing_height_m = step.phase_bar[1] > 0.5 ? 0.15 : 0.0;
    log.push_back(step);
  }
  const TrackingErrorReport report = tracking_error(log, cmd);
  CHECK(report.completed_cycles >= 6);
  REQUIRE(report.e_frequency.has_value());
  CHECK(std::abs(*report.e_frequency) < 1e-9);
  REQUIRE(report.e_swing_height.has_value());
  CHECK(std::abs(*report.e_swing_height) < 1e-12);
}
