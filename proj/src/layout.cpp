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

#include "gaitkit/layout.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gaitkit {

namespace {

JointGroup group_from_string(const std::string& s) {
  if (s == "leg") return JointGroup::kLeg;
  if (s == "waist") return JointGroup::kWaist;
  if (s == "upper") return JointGroup::kUpper;
  throw std::invalid_argument("unknown joint group: " + s);
}

const char* group_to_string(JointGroup g) {
  switch (g) {
    case JointGroup::kLeg:
      return "leg";
    case JointGroup::kWaist:
      return "waist";
    case JointGroup::kUpper:
      return "upper";
  }
  return "leg";
}

JointInfo make_joint(std::string name, std::string mirror, double sign,
                     JointGroup group, bool hip_xz, double lo, double hi) {
  JointInfo j;
  j.name = std::move(name);
  j.mirror_name = std::move(mirror);
  j.mirror_sign = sign;
  j.group = group;
  j.hip_roll_yaw = hip_xz;
  j.nominal_pos = 0.0;
  j.lower_limit = lo;
  j.upper_limit = hi;
  return j;
}

}  // namespace

JointLayout::JointLayout(std::vector<JointInfo> joints)
    : joints_(std::move(joints)) {
  std::unordered_map<std::string, int> by_name;
  for (int i = 0; i < dof(); ++i) {
    if (!by_name.emplace(joints_[i].name, i).second) {
      throw std::invalid_argument("duplicate joint name: " + joints_[i].name);
    }
  }
  mirror_index_.resize(joints_.size());
  for (int i = 0; i < dof(); ++i) {
    auto it = by_name.find(joints_[i].mirror_name);
    if (it == by_name.end()) {
      throw std::invalid_argument("unknown mirror joint: " +
                                  joints_[i].mirror_name);
    }
    mirror_index_[i] = it->second;
  }
  validate();
}

void JointLayout::validate() const {
  for (int i = 0; i < dof(); ++i) {
    const JointInfo& j = joints_[i];
    if (j.mirror_sign != 1.0 && j.mirror_sign != -1.0) {
      throw std::invalid_argument("mirror sign must be +1 or -1: " + j.name);
    }
    const int m = mirror_index_[i];
    if (mirror_index_[m] != i) {
      throw std::invalid_argument("mirror pairing is not an involution: " +
                                  j.name);
    }
    if (joints_[m].mirror_sign != j.mirror_sign) {
      throw std::invalid_argument("mirror pair signs disagree: " + j.name);
    }
    if (joints_[m].group != j.group) {
      throw std::invalid_argument("mirror pair groups disagree: " + j.name);
    }
    if (!(j.lower_limit < j.upper_limit)) {
      throw std::invalid_argument("empty joint limit range: " + j.name);
    }
    if (!(j.nominal_pos >= j.lower_limit && j.nominal_pos <= j.upper_limit)) {
      throw std::invalid_argument("nominal pose outside limits: " + j.name);
    }
  }
}

JointLayout JointLayout::default_humanoid() {
  std::vector<JointInfo> j;
  const auto leg = [&](const std::string& side, const std::string& other) {
    j.push_back(make_joint(side + "_hip_yaw", other + "_hip_yaw", -1.0,
                           JointGroup::kLeg, true, -0.6, 0.6));
    j.push_back(make_joint(side + "_hip_roll", other + "_hip_roll", -1.0,
                           JointGroup::kLeg, true, -0.5, 0.5));
    j.push_back(make_joint(side + "_hip_pitch", other + "_hip_pitch", 1.0,
                           JointGroup::kLeg, false, -1.8, 1.8));
    j.push_back(make_joint(side + "_knee", other + "_knee", 1.0,
                           JointGroup::kLeg, false, -2.1, 2.1));
    j.push_back(make_joint(side + "_ankle", other + "_ankle", 1.0,
                           JointGroup::kLeg, false, -0.9, 0.9));
  };
  const auto arm = [&](const std::string& side, const std::string& other) {
    j.push_back(make_joint(side + "_shoulder_pitch", other + "_shoulder_pitch",
                           1.0, JointGroup::kUpper, false, -2.8, 2.8));
    j.push_back(make_joint(side + "_shoulder_roll", other + "_shoulder_roll",
                           -1.0, JointGroup::kUpper, false, -2.5, 2.5));
    j.push_back(make_joint(side + "_shoulder_yaw", other + "_shoulder_yaw",
                           -1.0, JointGroup::kUpper, false, -1.5, 1.5));
    j.push_back(make_joint(side + "_elbow", other + "_elbow", 1.0,
                           JointGroup::kUpper, false, -2.0, 2.0));
  };
  leg("left", "right");
  leg("right", "left");
  j.push_back(make_joint("waist_yaw", "waist_yaw", -1.0, JointGroup::kWaist,
                         false, -2.0, 2.0));
  arm("left", "right");
  arm("right", "left");
  return JointLayout(std::move(j));
}

JointLayout JointLayout::parse(std::istream& in) {
  std::vector<JointInfo> joints;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    JointInfo j;
    std::string group, hip_flag;
    if (!(fields >> j.name)) continue;  // blank line
    if (!(fields >> j.mirror_name >> j.mirror_sign >> group >> hip_flag >>
          j.nominal_pos >> j.lower_limit >> j.upper_limit)) {
      throw std::invalid_argument("malformed layout line " +
                                  std::to_string(lineno));
    }
    j.group = group_from_string(group);
    if (hip_flag == "hip_xz") {
      j.hip_roll_yaw = true;
    } else if (hip_flag != "-") {
      throw std::invalid_argument("unknown hip flag on line " +
                                  std::to_string(lineno));
    }
    joints.push_back(std::move(j));
  }
  if (joints.empty()) {
    throw std::invalid_argument("layout descriptor has no joints");
  }
  return JointLayout(std::move(joints));
}

JointLayout JointLayout::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open layout file: " + path);
  return parse(in);
}

void JointLayout::write_descriptor(std::ostream& out) const {
  out << "# name mirror sign group hip_flag nominal lower upper\n";
  for (const JointInfo& j : joints_) {
    out << j.name << ' ' << j.mirror_name << ' ' << j.mirror_sign << ' '
        << group_to_string(j.group) << ' ' << (j.hip_roll_yaw ? "hip_xz" : "-")
        << ' ' << j.nominal_pos << ' ' << j.lower_limit << ' '
        << j.upper_limit << '\n';
  }
}

int JointLayout::index_of(const std::string& name) const {
  for (int i = 0; i < dof(); ++i) {
    if (joints_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown joint: " + name);
}

std::vector<int> JointLayout::upper_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dof(); ++i) {
    if (joints_[i].group == JointGroup::kUpper) out.push_back(i);
  }
  return out;
}

std::vector<int> JointLayout::hip_roll_yaw_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dof(); ++i) {
    if (joints_[i].hip_roll_yaw) out.push_back(i);
  }
  return out;
}

int JointLayout::upper_dof() const {
  return static_cast<int>(upper_indices().size());
}

Eigen::VectorXd JointLayout::nominal_pose() const {
  Eigen::VectorXd q(dof());
  for (int i = 0; i < dof(); ++i) q(i) = joints_[i].nominal_pos;
  return q;
}

Eigen::VectorXd JointLayout::upper_lower_limits() const {
  const auto idx = upper_indices();
  Eigen::VectorXd lo(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    lo(static_cast<int>(k)) = joints_[idx[k]].lower_limit;
  }
  return lo;
}

Eigen::VectorXd JointLayout::upper_upper_limits() const {
  const auto idx = upper_indices();
  Eigen::VectorXd hi(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    hi(static_cast<int>(k)) = joints_[idx[k]].upper_limit;
  }
  return hi;
}

}  // namespace gaitkit
