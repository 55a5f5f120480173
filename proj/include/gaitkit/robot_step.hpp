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

#ifndef GAITKIT_ROBOT_STEP_HPP_
#define GAITKIT_ROBOT_STEP_HPP_

#include <array>

#include <Eigen/Core>

namespace gaitkit {

// Number of link collision flags carried in the privileged observation:
// trunk, then hip/thigh/shank/shoulder/arm per side.
inline constexpr int kCollisionFlags = 11;

struct FootState {
  Eigen::Vector2d position_xy = Eigen::Vector2d::Zero();
  Eigen::Vector2d velocity_xy = Eigen::Vector2d::Zero();
  double swing_height_m = 0.0;
  Eigen::Vector3d contact_force = Eigen::Vector3d::Zero();  // z is normal
};

// One control-step snapshot: the unit of rollout logs and reward
// evaluation. All joint vectors follow the active JointLayout order.
struct RobotStep {
  int index = 0;
  double time_s = 0.0;
  Eigen::Vector3d base_lin_vel = Eigen::Vector3d::Zero();  // base frame, m/s
  Eigen::Vector3d base_ang_vel = Eigen::Vector3d::Zero();  // rad/s
  double body_height_m = 0.0;  // offset from the nominal standing height
  double body_pitch_rad = 0.0;
  double body_roll_rad = 0.0;
  double waist_yaw_rad = 0.0;
  Eigen::VectorXd joint_pos;
  Eigen::VectorXd joint_vel;
  Eigen::VectorXd joint_acc;
  Eigen::VectorXd joint_torque;
  std::array<FootState, 2> feet;  // left, right
  Eigen::VectorXd action;
  Eigen::VectorXd action_prev;
  Eigen::VectorXd action_prev2;
  std::array<double, 2> phase_bar{0.0, 0.0};  // homogenized phases
  double friction = 1.0;
  Eigen::VectorXd collision_flags;  // kCollisionFlags entries of 0/1
  bool intervention = false;
  bool terminated = false;
};

// Zero-filled step with every vector sized for the given joint count.
RobotStep make_zero_step(int dof);

// Throws std::invalid_argument on non-finite entries, dimension
// mismatches, or a negative normal contact force.
void validate(const RobotStep& step, int dof);

}  // namespace gaitkit

#endif  // GAITKIT_ROBOT_STEP_HPP_
