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

#include "gaitkit/mirror.hpp"

#include <stdexcept>

namespace gaitkit {

Eigen::VectorXd SignedPerm::apply(const Eigen::VectorXd& v) const {
  if (v.size() != size()) {
    throw std::invalid_argument("signed permutation dimension mismatch");
  }
  Eigen::VectorXd out(v.size());
  for (int i = 0; i < size(); ++i) {
    out(i) = sign[i] * v(perm[i]);
  }
  return out;
}

bool SignedPerm::is_involution() const {
  for (int i = 0; i < size(); ++i) {
    if (perm[i] < 0 || perm[i] >= size()) return false;
    if (perm[perm[i]] != i) return false;
    if (sign[i] * sign[perm[i]] != 1.0) return false;
  }
  return true;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.perm.resize(n);
  p.sign.assign(n, 1.0);
  for (int i = 0; i < n; ++i) p.perm[i] = i;
  return p;
}

SignedPerm SignedPerm::concat(const std::vector<SignedPerm>& blocks) {
  SignedPerm out;
  int offset = 0;
  for (const SignedPerm& block : blocks) {
    for (int i = 0; i < block.size(); ++i) {
      out.perm.push_back(block.perm[i] + offset);
      out.sign.push_back(block.sign[i]);
    }
    offset += block.size();
  }
  return out;
}

SignedPerm action_mirror(const JointLayout& layout) {
  SignedPerm p;
  p.perm.resize(layout.dof());
  p.sign.resize(layout.dof());
  for (int i = 0; i < layout.dof(); ++i) {
    p.perm[i] = layout.mirror_index(i);
    p.sign[i] = layout.joint(i).mirror_sign;
  }
  if (!p.is_involution()) {
    throw std::invalid_argument("joint mirror map is not an involution");
  }
  return p;
}

namespace {

// Angular velocity is a pseudovector: roll and yaw rates flip under the
// sagittal reflection, the pitch rate does not.
SignedPerm angular_velocity_mirror() {
  SignedPerm p = SignedPerm::identity(3);
  p.sign = {-1.0, 1.0, -1.0};
  return p;
}

// Gravity projection is a plain vector: only the lateral component flips.
SignedPerm lateral_flip3() {
  SignedPerm p = SignedPerm::identity(3);
  p.sign = {1.0, -1.0, 1.0};
  return p;
}

}  // namespace

SignedPerm proprio_mirror(const JointLayout& layout) {
  const SignedPerm joints = action_mirror(layout);
  return SignedPerm::concat(
      {angular_velocity_mirror(), lateral_flip3(), joints, joints, joints});
}

SignedPerm command_mirror() {
  // Channels: vx, vy, wz, f, l, h, p, w, psi, phi_stance, clockL, clockR.
  SignedPerm p = SignedPerm::identity(12);
  p.sign[1] = -1.0;   // vy
  p.sign[2] = -1.0;   // yaw rate
  p.sign[7] = -1.0;   // waist yaw
  p.perm[10] = 11;    // the clocks swap as the feet exchange roles
  p.perm[11] = 10;
  return p;
}

SignedPerm actor_observation_mirror(const JointLayout& layout,
                                    int history_len) {
  if (history_len < 1) {
    throw std::invalid_argument("history length must be at least 1");
  }
  std::vector<SignedPerm> blocks(history_len, proprio_mirror(layout));
  blocks.push_back(command_mirror());
  blocks.push_back(SignedPerm::identity(1));  // indicator channel
  return SignedPerm::concat(blocks);
}

MirrorMap MirrorMap::build(const JointLayout& layout, int history_len) {
  MirrorMap map;
  map.action = action_mirror(layout);
  map.observation = actor_observation_mirror(layout, history_len);
  if (!map.action.is_involution() || !map.observation.is_involution()) {
    throw std::invalid_argument("mirror map is not an involution");
  }
  return map;
}

Eigen::VectorXd mirror_action(const Eigen::VectorXd& a, const MirrorMap& map) {
  return map.action.apply(a);
}

Eigen::VectorXd mirror_observation(const Eigen::VectorXd& o,
                                   const MirrorMap& map) {
  return map.observation.apply(o);
}

double symmetry_loss(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& policy,
    const std::vector<Eigen::VectorXd>& observations, const MirrorMap& map) {
  double loss = 0.0;
  for (const Eigen::VectorXd& obs : observations) {
    const Eigen::VectorXd direct = policy(obs);
    const Eigen::VectorXd mirrored =
        map.action.apply(policy(map.observation.apply(obs)));
    loss += (direct - mirrored).squaredNorm();
  }
  return loss;
}

}  // namespace gaitkit
