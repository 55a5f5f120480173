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

#include "gaitkit/observe.hpp"

#include <cmath>
#include <stdexcept>

namespace gaitkit {

Eigen::Vector3d gravity_projection(double roll_rad, double pitch_rad) {
  // Base orientation is yaw*pitch*roll; yaw drops out of the projection.
  const double sr = std::sin(roll_rad);
  const double cr = std::cos(roll_rad);
  const double sp = std::sin(pitch_rad);
  const double cp = std::cos(pitch_rad);
  return {sp, -sr * cp, -cr * cp};
}

Eigen::VectorXd proprio_from_step(const RobotStep& step) {
  const int dof = static_cast<int>(step.joint_pos.size());
  validate(step, dof);
  Eigen::VectorXd o(3 + 3 + 3 * dof);
  o.segment<3>(0) = step.base_ang_vel;
  o.segment<3>(3) = gravity_projection(step.body_roll_rad, step.body_pitch_rad);
  o.segment(6, dof) = step.joint_pos;
  o.segment(6 + dof, dof) = step.joint_vel;
  o.segment(6 + 2 * dof, dof) = step.action_prev;
  if (dof == dims::kAction && o.size() != dims::kProprio) {
    throw std::logic_error("proprioceptive dimension drifted");
  }
  return o;
}

Eigen::VectorXd privileged_from_step(const RobotStep& step,
                                     const CommandVector& cmd) {
  Eigen::VectorXd o(3 + 1 + 2 + 1 + 6 + kCollisionFlags);
  o.segment<3>(0) = step.base_lin_vel;
  o(3) = step.body_height_m - cmd.behavior.body_height_m;
  o(4) = step.feet[0].swing_height_m;
  o(5) = step.feet[1].swing_height_m;
  o(6) = step.friction;
  o.segment<3>(7) = step.feet[0].contact_force;
  o.segment<3>(10) = step.feet[1].contact_force;
  o.segment(13, kCollisionFlags) = step.collision_flags;
  if (o.size() != dims::kPrivileged) {
    throw std::logic_error("privileged dimension drifted");
  }
  return o;
}

Eigen::VectorXd ObservationFrame::actor_vector() const {
  const int proprio_dim = static_cast<int>(proprio.size());
  const int hist = static_cast<int>(history.size());
  Eigen::VectorXd out(hist * proprio_dim + commands.size() + 1);
  int offset = 0;
  for (const Eigen::VectorXd& frame : history) {
    out.segment(offset, proprio_dim) = frame;
    offset += proprio_dim;
  }
  out.segment(offset, commands.size()) = commands;
  offset += static_cast<int>(commands.size());
  out(offset) = indicator;
  return out;
}

Eigen::VectorXd ObservationFrame::critic_vector() const {
  Eigen::VectorXd out(proprio.size() + privileged.size() + terrain.size() +
                      commands.size() + 1);
  int offset = 0;
  out.segment(offset, proprio.size()) = proprio;
  offset += static_cast<int>(proprio.size());
  out.segment(offset, privileged.size()) = privileged;
  offset += static_cast<int>(privileged.size());
  out.segment(offset, terrain.size()) = terrain;
  offset += static_cast<int>(terrain.size());
  out.segment(offset, commands.size()) = commands;
  offset += static_cast<int>(commands.size());
  out(offset) = indicator;
  return out;
}

ObservationFrame assemble_observation(
    const RobotStep& step, const CommandVector& cmd,
    const std::vector<Eigen::VectorXd>& past_proprio, bool indicator,
    const Eigen::VectorXd& terrain) {
  ObservationFrame frame;
  frame.proprio = proprio_from_step(step);
  if (frame.proprio.size() != dims::kProprio) {
    throw std::invalid_argument("proprioceptive dimension mismatch");
  }
  frame.privileged = privileged_from_step(step, cmd);

  if (terrain.size() == 0) {
    frame.terrain = Eigen::VectorXd::Zero(dims::kTerrain);
  } else if (terrain.size() == dims::kTerrain) {
    frame.terrain = terrain;
  } else {
    throw std::invalid_argument("terrain dimension mismatch");
  }

  // Oldest-first history ending at the current frame, zero-padded when
  // the episode is younger than the window.
  frame.history.assign(dims::kHistory,
                       Eigen::VectorXd::Zero(dims::kProprio));
  int slot = dims::kHistory - 2;
  for (auto it = past_proprio.rbegin();
       it != past_proprio.rend() && slot >= 0; ++it, --slot) {
    if (it->size() != dims::kProprio) {
      throw std::invalid_argument("history frame dimension mismatch");
    }
    frame.history[slot] = *it;
  }
  frame.history.back() = frame.proprio;

  const auto flat = cmd.flatten();
  frame.commands = Eigen::Map<const Eigen::VectorXd>(flat.data(), flat.size());
  frame.indicator = indicator ? 1.0 : 0.0;

  if (frame.actor_vector().size() != dims::kActor) {
    throw std::logic_error("actor observation dimension drifted");
  }
  return frame;
}

}  // namespace gaitkit
