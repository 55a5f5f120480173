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

#ifndef GAITKIT_OBSERVE_HPP_
#define GAITKIT_OBSERVE_HPP_

#include <vector>

#include <Eigen/Core>

#include "gaitkit/commands.hpp"
#include "gaitkit/robot_step.hpp"

namespace gaitkit {
namespace dims {

inline constexpr int kProprio = 63;     // ang vel 3 + gravity 3 + q 19 + qd 19 + a 19
inline constexpr int kPrivileged = 24;  // v 3 + dh 1 + clearance 2 + mu 1 + forces 6 + collisions 11
inline constexpr int kTerrainRows = 13;
inline constexpr int kTerrainCols = 17;
inline constexpr int kTerrain = kTerrainRows * kTerrainCols;  // 221
inline constexpr int kCommand = 12;
inline constexpr int kAction = 19;
inline constexpr int kHistory = 5;
inline constexpr int kActor = kHistory * kProprio + kCommand + 1;

}  // namespace dims

// Gravity direction expressed in the base frame for a roll/pitch attitude
// (unit vector; (0, 0, -1) at level attitude).
Eigen::Vector3d gravity_projection(double roll_rad, double pitch_rad);

// Proprioceptive frame: base angular velocity, gravity projection, joint
// positions, joint velocities, previous action.
Eigen::VectorXd proprio_from_step(const RobotStep& step);

// Privileged frame: base linear velocity, body height error, per-foot
// clearance, ground friction, both contact forces, and link collision
// flags.
Eigen::VectorXd privileged_from_step(const RobotStep& step,
                                     const CommandVector& cmd);

// Everything one policy/critic evaluation needs, with the dimensions
// asserted at assembly.
struct ObservationFrame {
  Eigen::VectorXd proprio;
  Eigen::VectorXd privileged;
  Eigen::VectorXd terrain;
  std::vector<Eigen::VectorXd> history;  // oldest -> newest; newest == proprio
  Eigen::VectorXd commands;
  double indicator = 0.0;

  // history | commands | indicator, the actor's full input.
  Eigen::VectorXd actor_vector() const;
  // proprio | privileged | terrain | commands | indicator.
  Eigen::VectorXd critic_vector() const;
};

// Assembles the frame for one step. past_proprio holds earlier frames
// (oldest first, current excluded); missing history is zero-padded, extra
// history is dropped from the front. An empty terrain vector means flat
// ground.
ObservationFrame assemble_observation(
    const RobotStep& step, const CommandVector& cmd,
    const std::vector<Eigen::VectorXd>& past_proprio, bool indicator,
    const Eigen::VectorXd& terrain = Eigen::VectorXd());

}  // namespace gaitkit

#endif  // GAITKIT_OBSERVE_HPP_
