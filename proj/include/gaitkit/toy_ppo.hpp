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

#ifndef GAITKIT_TOY_PPO_HPP_
#define GAITKIT_TOY_PPO_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gaitkit {

// Velocity-tracking point mass: state (v, v_cmd), action is an
// acceleration, reward exp(-(v_cmd - v)^2 / 0.2). Used to drive the full
// loss stack (policy, value, estimation, symmetry) at desk scale.
struct ToyPpoConfig {
  int epochs = 50;
  int episodes_per_epoch = 16;
  int episode_length = 40;
  int minibatch_count = 4;
  int update_passes = 4;
  double gamma = 0.95;
  double action_sigma = 0.3;
  double learning_rate = 3e-3;
  double clip_epsilon = 0.2;
  double beta_symmetry = 0.5;
  double lambda_policy = 1.0;
  double lambda_est = 1.0;
  bool use_gae = false;
  double gae_lambda = 0.95;
  bool normalize_advantages = true;
  std::uint64_t seed = 1;
};

struct ToyPpoReport {
  std::vector<double> eval_error_per_epoch;
  std::vector<double> symmetry_per_epoch;
  double initial_eval_error = 0.0;
  double final_eval_error = 0.0;
  double final_symmetry_loss = 0.0;
  bool diverged = false;
  int epochs_run = 0;
};

ToyPpoReport run_toy_ppo(const ToyPpoConfig& config);

std::string toy_report_to_json(const ToyPpoReport& report);

}  // namespace gaitkit

#endif  // GAITKIT_TOY_PPO_HPP_
