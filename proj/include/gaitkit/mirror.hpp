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

#ifndef GAITKIT_MIRROR_HPP_
#define GAITKIT_MIRROR_HPP_

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "gaitkit/layout.hpp"

namespace gaitkit {

// Signed permutation: out[i] = sign[i] * in[perm[i]]. All mirror maps in
// this library are involutions, so applying one twice is the identity.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<double> sign;

  int size() const { return static_cast<int>(perm.size()); }
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
  bool is_involution() const;

  static SignedPerm identity(int n);
  // Block-diagonal concatenation.
  static SignedPerm concat(const std::vector<SignedPerm>& blocks);
};

// Sagittal-plane reflection of the action vector: left/right joints swap,
// roll/yaw style joints flip sign.
SignedPerm action_mirror(const JointLayout& layout);

// Reflection of one proprioceptive frame: angular velocity roll/yaw rates
// and the lateral gravity component negate, joint blocks mirror like the
// action.
SignedPerm proprio_mirror(const JointLayout& layout);

// Reflection of the 12-channel command block: lateral and yaw velocities
// and the waist-yaw command negate, the clock channels swap.
SignedPerm command_mirror();

// Reflection of the flattened actor observation: history frames, command
// block, and the (unchanged) intervention indicator.
SignedPerm actor_observation_mirror(const JointLayout& layout,
                                    int history_len);

struct MirrorMap {
  SignedPerm action;
  SignedPerm observation;

  static MirrorMap build(const JointLayout& layout, int history_len);
};

// Throws std::invalid_argument on dimension mismatch.
Eigen::VectorXd mirror_action(const Eigen::VectorXd& a, const MirrorMap& map);
Eigen::VectorXd mirror_observation(const Eigen::VectorXd& o,
                                   const MirrorMap& map);

// Equivariance defect of a policy over a batch of observations:
// sum over the batch of |pi(o) - F_a(pi(F_o(o)))|^2.
double symmetry_loss(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& policy,
    const std::vector<Eigen::VectorXd>& observations, const MirrorMap& map);

}  // namespace gaitkit

#endif  // GAITKIT_MIRROR_HPP_
