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

#ifndef GAITKIT_LAYOUT_HPP_
#define GAITKIT_LAYOUT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gaitkit {

enum class JointGroup { kLeg, kWaist, kUpper };

struct JointInfo {
  std::string name;
  std::string mirror_name;   // sagittal partner; the joint itself if centered
  double mirror_sign = 1.0;  // -1 for roll/yaw style joints
  JointGroup group = JointGroup::kLeg;
  bool hip_roll_yaw = false;  // member of the hip x/z deviation group
  double nominal_pos = 0.0;
  double lower_limit = -3.14;
  double upper_limit = 3.14;
};

// Ordered joint table for one robot. The order fixes the meaning of every
// 19-vector in the library (actions, joint states, mirror maps).
class JointLayout {
 public:
  explicit JointLayout(std::vector<JointInfo> joints);

  // Built-in 19-DOF biped: 5 joints per leg, one waist yaw, and a 4-DOF
  // arm (3-DOF shoulder plus elbow) per side.
  static JointLayout default_humanoid();

  // Descriptor format: one joint per line,
  //   name mirror sign group hip_flag nominal lower upper
  // with '#' comments, group in {leg, waist, upper} and hip_flag in
  // {hip_xz, -}.
  static JointLayout parse(std::istream& in);
  static JointLayout load(const std::string& path);
  void write_descriptor(std::ostream& out) const;

  int dof() const { return static_cast<int>(joints_.size()); }
  const std::vector<JointInfo>& joints() const { return joints_; }
  const JointInfo& joint(int i) const { return joints_.at(i); }

  int index_of(const std::string& name) const;
  int mirror_index(int i) const { return mirror_index_[i]; }

  std::vector<int> upper_indices() const;
  std::vector<int> hip_roll_yaw_indices() const;
  int upper_dof() const;

  Eigen::VectorXd nominal_pose() const;
  // Per-joint sampling box for the upper-body joints, in layout order of
  // upper_indices().
  Eigen::VectorXd upper_lower_limits() const;
  Eigen::VectorXd upper_upper_limits() const;

 private:
  void validate() const;

  std::vector<JointInfo> joints_;
  std::vector<int> mirror_index_;
};

}  // namespace gaitkit

#endif  // GAITKIT_LAYOUT_HPP_
