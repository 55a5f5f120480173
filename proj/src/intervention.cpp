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

#include "gaitkit/intervention.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace gaitkit {

NoiseBox NoiseBox::from_layout(const JointLayout& layout, double margin) {
  if (!(margin >= 0.0 && margin < 1.0)) {
    throw std::invalid_argument("noise box margin must be in [0, 1)");
  }
  NoiseBox box;
  box.lower = layout.upper_lower_limits();
  box.upper = layout.upper_upper_limits();
  if (margin > 0.0) {
    const Eigen::VectorXd center = 0.5 * (box.lower + box.upper);
    const Eigen::VectorXd half = 0.5 * (1.0 - margin) * (box.upper - box.lower);
    box.lower = center - half;
    box.upper = center + half;
  }
  return box;
}

Eigen::VectorXd NoiseBox::sample(Rng& rng) const {
  Eigen::VectorXd a(lower.size());
  for (int i = 0; i < lower.size(); ++i) {
    a(i) = rng.uniform(lower(i), upper(i));
  }
  return a;
}

bool NoiseBox::contains(const Eigen::VectorXd& a) const {
  if (a.size() != lower.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < lower(i) || a(i) > upper(i)) return false;
  }
  return true;
}

void validate(const InterventionState& state) {
  if (!(state.alpha >= 0.0 && state.alpha <= 1.0)) {
    throw std::invalid_argument("alpha out of [0, 1]");
  }
  if (state.t_interval < 1) {
    throw std::invalid_argument("t_interval must be at least 1");
  }
  if (!(state.p_flip > 0.0 && state.p_flip < 1.0)) {
    throw std::invalid_argument("p_flip must be strictly inside (0, 1)");
  }
  if (state.noise_initial.size() != state.noise_target.size()) {
    throw std::invalid_argument("noise pose dimension mismatch");
  }
}

InterventionState make_intervention_state(const NoiseBox& box, Rng& rng,
                                          double p_flip, int t_interval) {
  InterventionState state;
  state.p_flip = p_flip;
  state.t_interval = t_interval;
  state.noise_initial = 0.5 * (box.lower + box.upper);
  state.noise_target = box.sample(rng);
  validate(state);
  return state;
}

InterventionState step_indicator(InterventionState state, Rng& rng) {
  if (rng.uniform() < state.p_flip) {
    state.intervening = !state.intervening;
  }
  return state;
}

double noise_ratio(int steps_into_segment, int t_interval) {
  if (steps_into_segment < 0) {
    throw std::invalid_argument("time precedes the noise segment start");
  }
  return std::min(1.0, (1.5 * steps_into_segment) / t_interval);
}

std::pair<InterventionState, Eigen::VectorXd> noise_interpolate(
    InterventionState state, int t, const NoiseBox& box, Rng& rng) {
  validate(state);
  if (t < state.segment_start) {
    throw std::invalid_argument("time precedes the noise segment start");
  }
  while (t - state.segment_start >= state.t_interval) {
    // The target was held over the final third, so restarting from it
    // keeps the emitted trajectory continuous.
    state.noise_initial = state.noise_target;
    state.segment_start += state.t_interval;
    state.noise_target = box.sample(rng);
  }
  const double r = noise_ratio(t - state.segment_start, state.t_interval);
  const Eigen::VectorXd action =
      (1.0 - r) * state.noise_initial + r * state.noise_target;
  return {std::move(state), action};
}

Eigen::VectorXd blend_with_policy(const Eigen::VectorXd& policy_upper,
                                  const Eigen::VectorXd& noise_upper,
                                  double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha out of [0, 1]");
  }
  if (policy_upper.size() != noise_upper.size()) {
    throw std::invalid_argument("upper-body action dimension mismatch");
  }
  return alpha * noise_upper + (1.0 - alpha) * policy_upper;
}

std::vector<int> collect_indicator_runs(int steps, double p_flip, Rng& rng) {
  if (!(p_flip > 0.0 && p_flip < 1.0)) {
    throw std::invalid_argument("p_flip must be strictly inside (0, 1)");
  }
  std::vector<int> runs;
  int current = 0;
  for (int t = 0; t < steps; ++t) {
    if (rng.uniform() < p_flip) {
      runs.push_back(current);
      current = 0;
    } else {
      ++current;
    }
  }
  return runs;
}

void validate(const DatasetTrajectory& traj) {
  if (traj.frames.empty()) {
    throw std::invalid_argument("dataset trajectory has no frames");
  }
  if (traj.frames.size() != traj.timestamps.size()) {
    throw std::invalid_argument("frame and timestamp counts disagree");
  }
  if (!(traj.native_frequency_hz > 0.0)) {
    throw std::invalid_argument("native frequency must be positive");
  }
  for (std::size_t k = 1; k < traj.timestamps.size(); ++k) {
    if (!(traj.timestamps[k] > traj.timestamps[k - 1])) {
      throw std::invalid_argument("timestamps must be strictly increasing");
    }
    if (traj.frames[k].size() != traj.frames[0].size()) {
      throw std::invalid_argument("dataset frame dimension mismatch");
    }
  }
}

Eigen::VectorXd dataset_interpolate(const DatasetTrajectory& traj,
                                    double t_seconds) {
  validate(traj);
  const double frame_time = traj.native_frequency_hz * t_seconds;
  if (frame_time < traj.timestamps.front() ||
      frame_time > traj.timestamps.back()) {
    throw std::invalid_argument("time outside the trajectory span");
  }
  if (traj.frames.size() == 1) {
    return traj.frames.front();
  }
  // Bracketing frame k with T_k <= frame_time < T_{k+1}.
  auto it = std::upper_bound(traj.timestamps.begin(), traj.timestamps.end(),
                             frame_time);
  std::size_t k = static_cast<std::size_t>(it - traj.timestamps.begin());
  k = std::min(std::max<std::size_t>(k, 1), traj.timestamps.size() - 1) - 1;
  const double gamma = (frame_time - traj.timestamps[k]) /
                       (traj.timestamps[k + 1] - traj.timestamps[k]);
  return (1.0 - gamma) * traj.frames[k] + gamma * traj.frames[k + 1];
}

DatasetTrajectory read_dataset_jsonl(const std::string& path,
                                     double native_frequency_hz) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open dataset file: " + path);
  DatasetTrajectory traj;
  traj.native_frequency_hz = native_frequency_hz;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json record = nlohmann::json::parse(line);
    traj.timestamps.push_back(record.at("t").get<double>());
    const auto values = record.at("a").get<std::vector<double>>();
    Eigen::VectorXd frame(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      frame(static_cast<int>(i)) = values[i];
    }
    traj.frames.push_back(std::move(frame));
  }
  validate(traj);
  return traj;
}

}  // namespace gaitkit
