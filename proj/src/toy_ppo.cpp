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

#include "gaitkit/toy_ppo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "gaitkit/learning.hpp"

namespace gaitkit {

namespace {

constexpr double kVelocityGain = 0.25;
constexpr double kActionLimit = 2.0;
constexpr double kVelocityLimit = 3.0;

NetSpec toy_spec() {
  NetSpec spec;
  spec.proprio_dim = 1;
  spec.privileged_dim = 1;
  spec.terrain_dim = 0;
  spec.command_dim = 1;
  spec.action_dim = 1;
  spec.history_len = 5;
  spec.latent_dim = 4;
  spec.estimate_dim = 1;
  spec.encoder_hidden = {16, 8};
  spec.estimator_hidden = {8, 4};
  spec.low_level_hidden = {16, 8, 4};
  spec.critic_hidden = {16, 8, 4};
  return spec;
}

// Everything except the trailing indicator channel negates.
SignedPerm toy_observation_mirror(const NetSpec& spec) {
  SignedPerm p = SignedPerm::identity(spec.actor_obs_dim());
  for (int i = 0; i + 1 < p.size(); ++i) p.sign[i] = -1.0;
  return p;
}

SignedPerm toy_action_mirror() {
  SignedPerm p = SignedPerm::identity(1);
  p.sign[0] = -1.0;
  return p;
}

double step_velocity(double v, double action) {
  const double a = std::clamp(action, -kActionLimit, kActionLimit);
  return std::clamp(v + kVelocityGain * a, -kVelocityLimit, kVelocityLimit);
}

double toy_reward(double v, double v_cmd) {
  const double err = v_cmd - v;
  return std::exp(-err * err / 0.2);
}

struct ToyObservation {
  Eigen::VectorXd actor;
  Eigen::VectorXd critic;
};

ToyObservation make_observation(const std::vector<double>& v_history,
                                double v, double v_cmd,
                                const NetSpec& spec) {
  ToyObservation obs;
  obs.actor = Eigen::VectorXd::Zero(spec.actor_obs_dim());
  const int k = spec.history_len;
  // Oldest-first history of velocities ending at the current one.
  int slot = k - 2;
  for (auto it = v_history.rbegin(); it != v_history.rend() && slot >= 0;
       ++it, --slot) {
    obs.actor(slot) = *it;
  }
  obs.actor(k - 1) = v;
  obs.actor(k) = v_cmd;
  obs.actor(k + 1) = 0.0;  // indicator

  obs.critic = Eigen::VectorXd::Zero(spec.critic_input_dim());
  obs.critic(0) = v;      // proprio
  obs.critic(1) = v;      // privileged (true velocity)
  obs.critic(2) = v_cmd;  // command
  obs.critic(3) = 0.0;    // indicator
  return obs;
}

// Deterministic tracking error of the mean policy, averaged over the
// second half of each evaluation episode.
double evaluate_policy(const ActorCriticNet& net, const NetSpec& spec,
                       int episode_length,
                       std::vector<Eigen::VectorXd>* eval_obs = nullptr) {
  const int n_commands = 21;
  double total = 0.0;
  int samples = 0;
  for (int c = 0; c < n_commands; ++c) {
    const double v_cmd = -1.0 + 2.0 * c / (n_commands - 1);
    double v = 0.0;
    std::vector<double> history;
    for (int t = 0; t < episode_length; ++t) {
      const ToyObservation obs = make_observation(history, v, v_cmd, spec);
      if (eval_obs != nullptr && t % 8 == 0) {
        eval_obs->push_back(obs.actor);
      }
      const double action = net.act(obs.actor)(0);
      history.push_back(v);
      v = step_velocity(v, action);
      if (t >= episode_length / 2) {
        total += std::abs(v - v_cmd);
        ++samples;
      }
    }
  }
  return total / samples;
}

}  // namespace

ToyPpoReport run_toy_ppo(const ToyPpoConfig& config) {
  if (config.epochs < 0 || config.episodes_per_epoch < 1 ||
      config.episode_length < 2 || config.minibatch_count < 1 ||
      config.update_passes < 1) {
    throw std::invalid_argument("invalid toy training configuration");
  }
  const NetSpec spec = toy_spec();
  Rng rng(config.seed);
  ActorCriticNet net(spec);
  net.init_random(rng, 0.5);

  const SignedPerm obs_mirror = toy_observation_mirror(spec);
  const SignedPerm act_mirror = toy_action_mirror();
  const bool with_symmetry = config.beta_symmetry > 0.0;

  LossCoefficients coef;
  coef.lambda_policy = config.lambda_policy;
  coef.lambda_est = config.lambda_est;
  coef.beta = config.beta_symmetry;
  coef.clip_epsilon = config.clip_epsilon;
  coef.gamma = config.gamma;

  Adam optimizer(net.parameter_count(), config.learning_rate);

  ToyPpoReport report;
  std::vector<Eigen::VectorXd> eval_obs;
  report.initial_eval_error =
      evaluate_policy(net, spec, config.episode_length, &eval_obs);
  const MirrorMap eval_mirror{act_mirror, obs_mirror};
  const auto policy_fn = [&net](const Eigen::VectorXd& o) {
    return net.act(o);
  };
  report.final_eval_error = report.initial_eval_error;
  report.final_symmetry_loss = symmetry_loss(policy_fn, eval_obs, eval_mirror);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    SampleBatch buffer;
    std::vector<double> logp_flat;
    std::vector<int> episode_bounds{0};

    for (int e = 0; e < config.episodes_per_epoch; ++e) {
      const double v_cmd = rng.uniform(-1.0, 1.0);
      double v = 0.0;
      std::vector<double> history;
      Eigen::VectorXd ep_rewards(config.episode_length);
      Eigen::VectorXd ep_values(config.episode_length);
      for (int t = 0; t < config.episode_length; ++t) {
        const ToyObservation obs = make_observation(history, v, v_cmd, spec);
        const Eigen::VectorXd mean = net.act(obs.actor);
        Eigen::VectorXd action(1);
        action(0) = mean(0) + config.action_sigma * rng.normal();
        const double logp =
            gaussian_log_prob(action, mean, config.action_sigma);

        buffer.actor_obs.push_back(obs.actor);
        buffer.critic_obs.push_back(obs.critic);
        buffer.actions.push_back(action);
        Eigen::VectorXd est_target(1);
        est_target(0) = v;
        buffer.est_targets.push_back(est_target);
        ep_values(t) = net.value(obs.critic);

        history.push_back(v);
        v = step_velocity(v, action(0));
        ep_rewards(t) = toy_reward(v, v_cmd);
        logp_flat.push_back(logp);
      }
      const ReturnsAdvantages ra =
          config.use_gae
              ? value_and_advantage_gae(ep_rewards, ep_values, config.gamma,
                                        config.gae_lambda)
              : value_and_advantage(ep_rewards, ep_values, config.gamma);
      const int offset = episode_bounds.back();
      buffer.returns.conservativeResize(offset + config.episode_length);
      buffer.advantages.conservativeResize(offset + config.episode_length);
      buffer.returns.segment(offset, config.episode_length) = ra.returns;
      buffer.advantages.segment(offset, config.episode_length) =
          ra.advantages;
      episode_bounds.push_back(offset + config.episode_length);
    }
    buffer.logp_old = Eigen::Map<const Eigen::VectorXd>(logp_flat.data(),
                                                        logp_flat.size());

    if (config.normalize_advantages && buffer.advantages.size() > 1) {
      const double mean = buffer.advantages.mean();
      const double var =
          (buffer.advantages.array() - mean).square().sum() /
          buffer.advantages.size();
      const double stddev = std::sqrt(std::max(var, 1e-12));
      buffer.advantages = ((buffer.advantages.array() - mean) / stddev);
    }

    // Minibatch updates.
    const int n = buffer.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    ActorCriticNet grads(spec);
    bool aborted = false;
    for (int pass = 0; pass < config.update_passes && !aborted; ++pass) {
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(i + 1)]);
      }
      const int chunk = (n + config.minibatch_count - 1) /
                        config.minibatch_count;
      for (int start = 0; start < n && !aborted; start += chunk) {
        const int end = std::min(start + chunk, n);
        SampleBatch mb;
        mb.logp_old.resize(end - start);
        mb.returns.resize(end - start);
        mb.advantages.resize(end - start);
        for (int k = start; k < end; ++k) {
          const int idx = order[k];
          mb.actor_obs.push_back(buffer.actor_obs[idx]);
          mb.critic_obs.push_back(buffer.critic_obs[idx]);
          mb.actions.push_back(buffer.actions[idx]);
          mb.est_targets.push_back(buffer.est_targets[idx]);
          mb.logp_old(k - start) = buffer.logp_old(idx);
          mb.returns(k - start) = buffer.returns(idx);
          mb.advantages(k - start) = buffer.advantages(idx);
        }
        const LossTerms terms = net_loss(
            net, mb, coef, config.action_sigma,
            with_symmetry ? &obs_mirror : nullptr,
            with_symmetry ? &act_mirror : nullptr, &grads);
        double total = 0.0;
        try {
          total = total_objective(terms);
        } catch (const std::invalid_argument&) {
          report.diverged = true;
          aborted = true;
          break;
        }
        (void)total;
        Eigen::VectorXd theta = net.parameters();
        optimizer.step(theta, grads.parameters());
        net.set_parameters(theta);
      }
    }

    eval_obs.clear();
    const double eval_error =
        evaluate_policy(net, spec, config.episode_length, &eval_obs);
    const double sym = symmetry_loss(policy_fn, eval_obs, eval_mirror);
    report.eval_error_per_epoch.push_back(eval_error);
    report.symmetry_per_epoch.push_back(sym);
    report.final_eval_error = eval_error;
    report.final_symmetry_loss = sym;
    report.epochs_run = epoch + 1;
    if (report.diverged) break;
  }
  return report;
}

std::string toy_report_to_json(const ToyPpoReport& report) {
  nlohmann::json j{{"initial_eval_error", report.initial_eval_error},
                   {"final_eval_error", report.final_eval_error},
                   {"final_symmetry_loss", report.final_symmetry_loss},
                   {"diverged", report.diverged},
                   {"epochs_run", report.epochs_run},
                   {"eval_error_per_epoch", report.eval_error_per_epoch},
                   {"symmetry_per_epoch", report.symmetry_per_epoch}};
  return j.dump(2);
}

}  // namespace gaitkit
