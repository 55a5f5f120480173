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

#ifndef GAITKIT_INTERVENTION_HPP_
#define GAITKIT_INTERVENTION_HPP_

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gaitkit/layout.hpp"
#include "gaitkit/rng.hpp"

namespace gaitkit {

// Per-joint sampling box for upper-body noise targets. A margin in [0, 1)
// shrinks the box towards its center.
struct NoiseBox {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  static NoiseBox from_layout(const JointLayout& layout, double margin = 0.0);
  Eigen::VectorXd sample(Rng& rng) const;
  bool contains(const Eigen::VectorXd& a) const;
};

// Upper-body intervention process: a rarely-flipping on/off indicator and
// a piecewise-linear noise trajectory through uniformly resampled targets.
struct InterventionState {
  bool intervening = false;  // I(t)
  int segment_start = 0;     // step index where the current noise segment began
  Eigen::VectorXd noise_initial;
  Eigen::VectorXd noise_target;
  double alpha = 0.0;     // blend fraction towards the noise action
  double p_flip = 0.005;  // per-step probability of reversing I(t)
  int t_interval = 90;    // steps between noise target resamples
};

void validate(const InterventionState& state);

InterventionState make_intervention_state(const NoiseBox& box, Rng& rng,
                                          double p_flip = 0.005,
                                          int t_interval = 90);

// Reverses the indicator with probability p_flip.
InterventionState step_indicator(InterventionState state, Rng& rng);

// Noise action at step t: linear interpolation from the segment's initial
// pose to its target over the first two thirds of the interval, then the
// target held. Entering a new interval resamples the target from the box
// and restarts from the previously emitted action, so the trajectory is
// continuous. Requires t >= segment_start.
std::pair<InterventionState, Eigen::VectorXd> noise_interpolate(
    InterventionState state, int t, const NoiseBox& box, Rng& rng);

// Interpolation ratio at the given offset into a segment; reaches exactly
// 1 at two thirds of the interval.
double noise_ratio(int steps_into_segment, int t_interval);

// Convex blend of the policy's upper-body action towards the noise action.
Eigen::VectorXd blend_with_policy(const Eigen::VectorXd& policy_upper,
                                  const Eigen::VectorXd& noise_upper,
                                  double alpha);

// Lengths of runs of constant indicator value over a simulated horizon;
// the trailing unfinished run is dropped.
std::vector<int> collect_indicator_runs(int steps, double p_flip, Rng& rng);

// ---------------------------------------------------------------------------
// Dataset-driven intervention.

// Recorded upper-body trajectory with its native frame clock. Timestamps
// are in frame-time units: frame k is placed at timestamps[k], and a wall
// time t maps to frame time native_frequency_hz * t.
struct DatasetTrajectory {
  std::vector<Eigen::VectorXd> frames;
  std::vector<double> timestamps;
  double native_frequency_hz = 30.0;
};

void validate(const DatasetTrajectory& traj);

// Linear interpolation between the two frames bracketing wall time t.
// Throws when t falls outside the trajectory span.
Eigen::VectorXd dataset_interpolate(const DatasetTrajectory& traj,
                                    double t_seconds);

// JSON Lines I/O: one frame per line as {"t": <timestamp>, "a": [...]}.
DatasetTrajectory read_dataset_jsonl(const std::string& path,
                                     double native_frequency_hz);

}  // namespace gaitkit

#endif  // GAITKIT_INTERVENTION_HPP_
