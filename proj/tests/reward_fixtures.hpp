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

// Hand-computed reward fixtures shared by the unit and acceptance suites.
// Every expected value is derived with independent arithmetic, never by
// calling the reward implementation.

#ifndef GAITKIT_TESTS_REWARD_FIXTURES_HPP_
#define GAITKIT_TESTS_REWARD_FIXTURES_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "gaitkit/commands.hpp"
#include "gaitkit/layout.hpp"
#include "gaitkit/rewards.hpp"
#include "gaitkit/robot_step.hpp"

namespace gaitkit::test {

struct RewardFixture {
  std::string name;
  RobotStep step;
  CommandVector cmd;
  bool masked = false;  // expect the upper-deviation row masked
  double expected_total = 0.0;
};

// Baseline: both feet planted mid-stance at the origin, zero state, all
// commands at their defaults. Expected contributions: linear and angular
// tracking 2.0 each (zero error), feet-slip 1 - 2*exp(0) = -1 weighted by
// -0.2 into +0.2, everything else zero. Total 4.2.
inline RobotStep baseline_step(const JointLayout& layout) {
  RobotStep s = make_zero_step(layout.dof());
  s.phase_bar = {0.25, 0.25};
  return s;
}

inline CommandVector default_walk_command() {
  CommandVector cmd;
  cmd.task = TaskCommand{};
  cmd.behavior = BehaviorCommand{};  // f=2, l=0.15, rest zero
  return cmd;
}

inline std::vector<RewardFixture> reward_fixtures(const JointLayout& layout) {
  const double kBaseline = 2.0 + 2.0 + 0.2;
  std::vector<RewardFixture> fixtures;

  {
    RewardFixture f;
    f.name = "resting baseline";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.expected_total = kBaseline;
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "linear velocity error 0.2";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.base_lin_vel.x() = 0.2;
    f.expected_total = 2.0 * std::exp(-(0.2 * 0.2) / 0.2) + 2.0 + 0.2;
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "angular velocity error 0.2";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.base_ang_vel.z() = 0.2;
    f.expected_total = 2.0 + 2.0 * std::exp(-(0.2 * 0.2) / 0.2) + 0.2;
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "body height error 0.1";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.body_height_m = 0.1;
    f.expected_total = kBaseline - 40.0 * (0.1 * 0.1);
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "pitch 0.2 and waist 0.5 errors";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.body_pitch_rad = 0.2;
    f.step.waist_yaw_rad = 0.5;
    f.expected_total = kBaseline - 10.0 * (0.2 * 0.2) - 2.0 * (0.5 * 0.5);
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "swing foot 0.05 below target";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    // Right foot mid-swing: target is the commanded peak 0.15.
    f.step.phase_bar = {0.25, 0.75};
    f.step.feet[1].swing_height_m = 0.10;
    f.expected_total = kBaseline - 30.0 * (0.05 * 0.05);
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "swing foot carrying force 50";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.phase_bar = {0.25, 0.75};
    f.step.feet[1].swing_height_m = 0.15;  // on target
    f.step.feet[1].contact_force = Eigen::Vector3d(3.0, 4.0, 5.0);  // |f|^2=50
    f.expected_total = kBaseline - 2.0 * (std::exp(1.0) - 1.0);
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "stance foot slipping at 0.5";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.feet[0].velocity_xy = Eigen::Vector2d(0.5, 0.0);
    // Contact-swing: -2 * -(1 - exp(0.25/5)); feet-slip changes to
    // 1 - exp(-0.25) - 1.
    f.expected_total = 2.0 + 2.0 - 2.0 * (std::exp(0.05) - 1.0) +
                       0.2 * std::exp(-0.25);
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "action rate and smoothness";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.action.setConstant(0.1);
    const double sq = layout.dof() * (0.1 * 0.1);
    f.expected_total = kBaseline - 0.01 * sq - 0.01 * sq;
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "joint torque and acceleration";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.joint_torque.setConstant(1.0);
    f.step.joint_acc.setConstant(2.0);
    f.expected_total = kBaseline - 5e-6 * layout.dof() -
                       2.5e-7 * (4.0 * layout.dof());
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "upper-body deviation 0.3";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    for (int i : layout.upper_indices()) f.step.joint_pos(i) = 0.3;
    f.expected_total =
        kBaseline - 0.5 * (layout.upper_dof() * (0.3 * 0.3));
    fixtures.push_back(f);

    RewardFixture masked = f;
    masked.name = "upper-body deviation 0.3, intervention masked";
    masked.step.intervention = true;
    masked.masked = true;
    masked.expected_total = kBaseline;
    fixtures.push_back(masked);
  }
  {
    RewardFixture f;
    f.name = "hip roll/yaw deviation 0.2";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    for (int i : layout.hip_roll_yaw_indices()) f.step.joint_pos(i) = 0.2;
    f.expected_total =
        kBaseline -
        2.0 * (static_cast<double>(layout.hip_roll_yaw_indices().size()) *
               (0.2 * 0.2));
    fixtures.push_back(f);
  }
  {
    RewardFixture f;
    f.name = "termination with asymmetric feet";
    f.step = baseline_step(layout);
    f.cmd = default_walk_command();
    f.step.terminated = true;
    // Equal phases, feet 0.1 m apart along x: the symmetry row fires.
    f.step.feet[0].position_xy = Eigen::Vector2d(0.05, 0.1);
    f.step.feet[1].position_xy = Eigen::Vector2d(-0.05, -0.1);
    f.expected_total = kBaseline - 200.0 - 5.0 * (0.1 * 0.1);
    fixtures.push_back(f);
  }
  return fixtures;
}

}  // namespace gaitkit::test

#endif  // GAITKIT_TESTS_REWARD_FIXTURES_HPP_
