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

#ifndef GAITKIT_LEARNING_HPP_
#define GAITKIT_LEARNING_HPP_

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gaitkit/mirror.hpp"
#include "gaitkit/rng.hpp"

namespace gaitkit {

// Dense tanh network with a linear output layer and hand-written
// backpropagation, kept explicit so gradients can be verified against
// finite differences.
class Mlp {
 public:
  Mlp() = default;
  Mlp(int input_dim, const std::vector<int>& hidden, int output_dim);

  int input_dim() const;
  int output_dim() const;

  void init_random(Rng& rng, double scale);
  void set_zero();

  struct Cache {
    std::vector<Eigen::VectorXd> activations;  // [0] is the input
  };

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
  Eigen::VectorXd forward(const Eigen::VectorXd& x, Cache& cache) const;

  // Accumulates parameter gradients into `grads` (same topology) and
  // returns dL/dinput.
  Eigen::VectorXd backward(const Cache& cache,
                           const Eigen::VectorXd& grad_output,
                           Mlp& grads) const;

  int parameter_count() const;
  void flatten_into(Eigen::VectorXd& theta, int& offset) const;
  void unflatten_from(const Eigen::VectorXd& theta, int& offset);

  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
};

// Shape configuration of the actor-critic stack: a history encoder
// feeding a privileged-state estimator and a low-level action head, plus
// a critic over the full state.
struct NetSpec {
  int proprio_dim = 63;
  int privileged_dim = 24;
  int terrain_dim = 221;
  int command_dim = 12;
  int action_dim = 19;
  int history_len = 5;
  int latent_dim = 32;
  int estimate_dim = 6;  // linear velocity 3 + foot clearance 2 + height 1

  std::vector<int> encoder_hidden{256, 128};
  std::vector<int> estimator_hidden{64, 32};
  std::vector<int> low_level_hidden{256, 128, 64};
  std::vector<int> critic_hidden{512, 256, 128};

  static NetSpec reference();
  // Widths of at most 16 for finite-difference testability.
  static NetSpec micro();

  int encoder_input_dim() const { return history_len * proprio_dim; }
  int actor_obs_dim() const {
    return history_len * proprio_dim + command_dim + 1;
  }
  int low_level_input_dim() const {
    return latent_dim + estimate_dim + proprio_dim + command_dim + 1;
  }
  int critic_input_dim() const {
    return proprio_dim + privileged_dim + terrain_dim + command_dim + 1;
  }
};

void validate(const NetSpec& spec);

class ActorCriticNet {
 public:
  explicit ActorCriticNet(const NetSpec& spec);

  const NetSpec& spec() const { return spec_; }

  void init_random(Rng& rng, double scale = 0.3);
  void set_zero();

  // Deterministic policy head (Gaussian mean) over the flattened actor
  // observation: history | commands | indicator.
  Eigen::VectorXd act(const Eigen::VectorXd& actor_obs) const;
  Eigen::VectorXd estimate(const Eigen::VectorXd& actor_obs) const;
  double value(const Eigen::VectorXd& critic_obs) const;

  struct ActorEval {
    Eigen::VectorXd latent;
    Eigen::VectorXd estimate;
    Eigen::VectorXd action_mean;
    Mlp::Cache encoder_cache;
    Mlp::Cache estimator_cache;
    Mlp::Cache low_level_cache;
  };
  ActorEval actor_forward(const Eigen::VectorXd& actor_obs) const;
  // Propagates dL/d(action mean) and dL/d(estimate) intoparameter
  // gradients.
  void actor_backward(const ActorEval& eval,
                      const Eigen::VectorXd& grad_action_mean,
                      const Eigen::VectorXd& grad_estimate,
                      ActorCriticNet& grads) const;

  int parameter_count() const;
  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::VectorXd& theta);

  Mlp encoder;
  Mlp estimator;
  Mlp low_level;
  Mlp critic;

 private:
  NetSpec spec_;
};

// --- Loss stack -------------------------------------------------------------

struct LossCoefficients {
  double lambda_policy = 1.0;
  double lambda_est = 1.0;
  double beta = 0.5;
  double clip_epsilon = 0.2;
  double gamma = 0.99;
};

struct LossTerms {
  double policy = 0.0;
  double value = 0.0;
  double estimation = 0.0;
  double symmetry = 0.0;
  LossCoefficients coef;

  double aac() const {
    return value + coef.lambda_policy * policy + coef.lambda_est * estimation;
  }
};

// Weighted sum of the loss stack; throws on non-finite components.
double total_objective(const LossTerms& terms);

// Clipped-surrogate policy loss (negated objective). Sums sequentially so
// a brute-force per-element evaluation reproduces it exactly.
double ppo_policy_loss(const Eigen::VectorXd& ratios,
                       const Eigen::VectorXd& advantages,
                       double epsilon = 0.2);

struct ReturnsAdvantages {
  Eigen::VectorXd returns;
  Eigen::VectorXd advantages;
  double value_loss = 0.0;
};

// Plain discounted returns over one trajectory; advantage is return minus
// value and the value loss is the mean squared target gap.
ReturnsAdvantages value_and_advantage(const Eigen::VectorXd& rewards,
                                      const Eigen::VectorXd& values,
                                      double gamma);

// Generalized-advantage variant with no terminal bootstrap, kept behind
// this separate entry point.
ReturnsAdvantages value_and_advantage_gae(const Eigen::VectorXd& rewards,
                                          const Eigen::VectorXd& values,
                                          double gamma, double lambda);

// Mean squared error across all entries.
double estimation_loss(const std::vector<Eigen::VectorXd>& estimates,
                       const std::vector<Eigen::VectorXd>& targets);

// One optimization batch. Rows are aligned across the members.
struct SampleBatch {
  std::vector<Eigen::VectorXd> actor_obs;
  std::vector<Eigen::VectorXd> critic_obs;
  std::vector<Eigen::VectorXd> actions;
  Eigen::VectorXd logp_old;
  Eigen::VectorXd returns;
  Eigen::VectorXd advantages;
  std::vector<Eigen::VectorXd> est_targets;

  int size() const { return static_cast<int>(actor_obs.size()); }
};

// Log density of a diagonal Gaussian with shared sigma.
double gaussian_log_prob(const Eigen::VectorXd& action,
                         const Eigen::VectorXd& mean, double sigma);

// Evaluates the whole loss stack on a batch and, when `grads` is given,
// fills it with d(total)/d(parameters). The mirror maps switch the
// symmetry term on; pass nullptr to drop it.
LossTerms net_loss(const ActorCriticNet& net, const SampleBatch& batch,
                   const LossCoefficients& coef, double action_sigma,
                   const SignedPerm* observation_mirror,
                   const SignedPerm* action_mirror, ActorCriticNet* grads);

// Max relative error between analytic gradients and central finite
// differences of the total loss, over every parameter.
double gradient_check(ActorCriticNet& net, const SampleBatch& batch,
                      const LossCoefficients& coef, double action_sigma,
                      const SignedPerm* observation_mirror,
                      const SignedPerm* action_mirror, double fd_step = 1e-5);

// Plain Adam over a flat parameter vector.
class Adam {
 public:
  Adam(int dim, double learning_rate, double beta1 = 0.9,
       double beta2 = 0.999, double epsilon = 1e-8);
  void step(Eigen::VectorXd& params, const Eigen::VectorXd& grads);

 private:
  double lr_;
  double beta1_;
  double beta2_;
  double eps_;
  int t_ = 0;
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
};

}  // namespace gaitkit

#endif  // GAITKIT_LEARNING_HPP_
