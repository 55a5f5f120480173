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

#include "gaitkit/learning.hpp"

#include <cmath>
#include <stdexcept>

namespace gaitkit {

namespace {

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

}  // namespace

Mlp::Mlp(int input_dim, const std::vector<int>& hidden, int output_dim) {
  if (input_dim < 1 || output_dim < 1) {
    throw std::invalid_argument("mlp dimensions must be positive");
  }
  int prev = input_dim;
  for (int width : hidden) {
    if (width < 1) throw std::invalid_argument("hidden width must be positive");
    weights.emplace_back(Eigen::MatrixXd::Zero(width, prev));
    biases.emplace_back(Eigen::VectorXd::Zero(width));
    prev = width;
  }
  weights.emplace_back(Eigen::MatrixXd::Zero(output_dim, prev));
  biases.emplace_back(Eigen::VectorXd::Zero(output_dim));
}

int Mlp::input_dim() const {
  return static_cast<int>(weights.front().cols());
}

int Mlp::output_dim() const {
  return static_cast<int>(weights.back().rows());
}

void Mlp::init_random(Rng& rng, double scale) {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    const double fan_in = static_cast<double>(weights[l].cols());
    const double stddev = scale / std::sqrt(fan_in);
    for (int r = 0; r < weights[l].rows(); ++r) {
      for (int c = 0; c < weights[l].cols(); ++c) {
        weights[l](r, c) = stddev * rng.normal();
      }
    }
    biases[l].setZero();
  }
}

void Mlp::set_zero() {
  for (auto& w : weights) w.setZero();
  for (auto& b : biases) b.setZero();
}

Eigen::VectorXd Mlp::forward(const Eigen::VectorXd& x) const {
  Cache cache;
  return forward(x, cache);
}

Eigen::VectorXd Mlp::forward(const Eigen::VectorXd& x, Cache& cache) const {
  if (x.size() != input_dim()) {
    throw std::invalid_argument("mlp input dimension mismatch");
  }
  cache.activations.clear();
  cache.activations.reserve(weights.size() + 1);
  cache.activations.push_back(x);
  Eigen::VectorXd a = x;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    Eigen::VectorXd z = weights[l] * a + biases[l];
    if (l + 1 < weights.size()) {
      a = z.array().tanh();
    } else {
      a = std::move(z);  // linear output layer
    }
    cache.activations.push_back(a);
  }
  return a;
}

Eigen::VectorXd Mlp::backward(const Cache& cache,
                              const Eigen::VectorXd& grad_output,
                              Mlp& grads) const {
  if (grads.weights.size() != weights.size()) {
    throw std::invalid_argument("gradient container topology mismatch");
  }
  Eigen::VectorXd delta = grad_output;
  for (int l = static_cast<int>(weights.size()) - 1; l >= 0; --l) {
    if (l + 1 < static_cast<int>(weights.size())) {
      // Walk the tanh derivative at this layer's post-activation.
      const Eigen::VectorXd& a = cache.activations[l + 1];
      delta = (delta.array() * (1.0 - a.array().square())).matrix();
    }
    grads.weights[l].noalias() += delta * cache.activations[l].transpose();
    grads.biases[l] += delta;
    delta = weights[l].transpose() * delta;
  }
  return delta;
}

int Mlp::parameter_count() const {
  int n = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    n += static_cast<int>(weights[l].size() + biases[l].size());
  }
  return n;
}

void Mlp::flatten_into(Eigen::VectorXd& theta, int& offset) const {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    const auto& w = weights[l];
    theta.segment(offset, w.size()) =
        Eigen::Map<const Eigen::VectorXd>(w.data(), w.size());
    offset += static_cast<int>(w.size());
    theta.segment(offset, biases[l].size()) = biases[l];
    offset += static_cast<int>(biases[l].size());
  }
}

void Mlp::unflatten_from(const Eigen::VectorXd& theta, int& offset) {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    auto& w = weights[l];
    Eigen::Map<Eigen::VectorXd>(w.data(), w.size()) =
        theta.segment(offset, w.size());
    offset += static_cast<int>(w.size());
    biases[l] = theta.segment(offset, biases[l].size());
    offset += static_cast<int>(biases[l].size());
  }
}

NetSpec NetSpec::reference() { return NetSpec{}; }

NetSpec NetSpec::micro() {
  NetSpec spec;
  spec.proprio_dim = 3;
  spec.privileged_dim = 2;
  spec.terrain_dim = 4;
  spec.command_dim = 2;
  spec.action_dim = 2;
  spec.history_len = 3;
  spec.latent_dim = 4;
  spec.estimate_dim = 2;
  spec.encoder_hidden = {8, 6};
  spec.estimator_hidden = {6, 4};
  spec.low_level_hidden = {8, 6, 4};
  spec.critic_hidden = {8, 6, 4};
  return spec;
}

void validate(const NetSpec& spec) {
  if (spec.proprio_dim < 1 || spec.command_dim < 0 || spec.action_dim < 1 ||
      spec.history_len < 1 || spec.latent_dim < 1 || spec.estimate_dim < 1 ||
      spec.privileged_dim < 0 || spec.terrain_dim < 0) {
    throw std::invalid_argument("invalid network spec dimensions");
  }
}

ActorCriticNet::ActorCriticNet(const NetSpec& spec)
    : encoder(spec.encoder_input_dim(), spec.encoder_hidden, spec.latent_dim),
      estimator(spec.latent_dim, spec.estimator_hidden, spec.estimate_dim),
      low_level(spec.low_level_input_dim(), spec.low_level_hidden,
                spec.action_dim),
      critic(spec.critic_input_dim(), spec.critic_hidden, 1),
      spec_(spec) {
  validate(spec);
}

void ActorCriticNet::init_random(Rng& rng, double scale) {
  encoder.init_random(rng, scale);
  estimator.init_random(rng, scale);
  low_level.init_random(rng, scale);
  critic.init_random(rng, scale);
}

void ActorCriticNet::set_zero() {
  encoder.set_zero();
  estimator.set_zero();
  low_level.set_zero();
  critic.set_zero();
}

ActorCriticNet::ActorEval ActorCriticNet::actor_forward(
    const Eigen::VectorXd& actor_obs) const {
  if (actor_obs.size() != spec_.actor_obs_dim()) {
    throw std::invalid_argument("actor observation dimension mismatch");
  }
  const int hist_dim = spec_.encoder_input_dim();
  const auto history = actor_obs.head(hist_dim);
  const auto proprio = actor_obs.segment(hist_dim - spec_.proprio_dim,
                                         spec_.proprio_dim);
  const auto commands = actor_obs.segment(hist_dim, spec_.command_dim);
  const double indicator = actor_obs(hist_dim + spec_.command_dim);

  ActorEval eval;
  eval.latent = encoder.forward(history, eval.encoder_cache);
  eval.estimate = estimator.forward(eval.latent, eval.estimator_cache);

  Eigen::VectorXd low_in(spec_.low_level_input_dim());
  low_in << eval.latent, eval.estimate, proprio, commands, indicator;
  eval.action_mean = low_level.forward(low_in, eval.low_level_cache);
  return eval;
}

void ActorCriticNet::actor_backward(const ActorEval& eval,
                                    const Eigen::VectorXd& grad_action_mean,
                                    const Eigen::VectorXd& grad_estimate,
                                    ActorCriticNet& grads) const {
  const Eigen::VectorXd grad_low_in =
      low_level.backward(eval.low_level_cache, grad_action_mean,
                         grads.low_level);
  Eigen::VectorXd grad_est = grad_low_in.segment(spec_.latent_dim,
                                                 spec_.estimate_dim);
  if (grad_estimate.size() != 0) {
    if (grad_estimate.size() != grad_est.size()) {
      throw std::invalid_argument("estimate gradient dimension mismatch");
    }
    grad_est += grad_estimate;
  }
  Eigen::VectorXd grad_latent = grad_low_in.head(spec_.latent_dim);
  grad_latent +=
      estimator.backward(eval.estimator_cache, grad_est, grads.estimator);
  encoder.backward(eval.encoder_cache, grad_latent, grads.encoder);
}

Eigen::VectorXd ActorCriticNet::act(const Eigen::VectorXd& actor_obs) const {
  return actor_forward(actor_obs).action_mean;
}

Eigen::VectorXd ActorCriticNet::estimate(
    const Eigen::VectorXd& actor_obs) const {
  return actor_forward(actor_obs).estimate;
}

double ActorCriticNet::value(const Eigen::VectorXd& critic_obs) const {
  if (critic_obs.size() != spec_.critic_input_dim()) {
    throw std::invalid_argument("critic observation dimension mismatch");
  }
  return critic.forward(critic_obs)(0);
}

int ActorCriticNet::parameter_count() const {
  return encoder.parameter_count() + estimator.parameter_count() +
         low_level.parameter_count() + critic.parameter_count();
}

Eigen::VectorXd ActorCriticNet::parameters() const {
  Eigen::VectorXd theta(parameter_count());
  int offset = 0;
  encoder.flatten_into(theta, offset);
  estimator.flatten_into(theta, offset);
  low_level.flatten_into(theta, offset);
  critic.flatten_into(theta, offset);
  return theta;
}

void ActorCriticNet::set_parameters(const Eigen::VectorXd& theta) {
  if (theta.size() != parameter_count()) {
    throw std::invalid_argument("parameter vector dimension mismatch");
  }
  int offset = 0;
  encoder.unflatten_from(theta, offset);
  estimator.unflatten_from(theta, offset);
  low_level.unflatten_from(theta, offset);
  critic.unflatten_from(theta, offset);
}

double total_objective(const LossTerms& terms) {
  for (double v : {terms.policy, terms.value, terms.estimation,
                   terms.symmetry}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("non-finite loss component");
    }
  }
  const double total = terms.aac() + terms.coef.beta * terms.symmetry;
  if (!std::isfinite(total)) {
    throw std::invalid_argument("non-finite total loss");
  }
  return total;
}

double ppo_policy_loss(const Eigen::VectorXd& ratios,
                       const Eigen::VectorXd& advantages, double epsilon) {
  if (ratios.size() == 0) {
    throw std::invalid_argument("empty policy batch");
  }
  if (ratios.size() != advantages.size()) {
    throw std::invalid_argument("ratio/advantage size mismatch");
  }
  double sum = 0.0;
  for (int i = 0; i < ratios.size(); ++i) {
    const double r = ratios(i);
    const double a = advantages(i);
    const double clipped =
        std::min(std::max(r, 1.0 - epsilon), 1.0 + epsilon) * a;
    sum += std::min(r * a, clipped);
  }
  return -sum / static_cast<double>(ratios.size());
}

ReturnsAdvantages value_and_advantage(const Eigen::VectorXd& rewards,
                                      const Eigen::VectorXd& values,
                                      double gamma) {
  if (rewards.size() != values.size()) {
    throw std::invalid_argument("reward/value size mismatch");
  }
  const int n = static_cast<int>(rewards.size());
  ReturnsAdvantages out;
  out.returns.resize(n);
  out.advantages.resize(n);
  double running = 0.0;
  for (int t = n - 1; t >= 0; --t) {
    running = rewards(t) + gamma * running;
    out.returns(t) = running;
  }
  out.advantages = out.returns - values;
  if (n > 0) {
    out.value_loss = (values - out.returns).squaredNorm() / n;
  }
  return out;
}

ReturnsAdvantages value_and_advantage_gae(const Eigen::VectorXd& rewards,
                                          const Eigen::VectorXd& values,
                                          double gamma, double lambda) {
  if (rewards.size() != values.size()) {
    throw std::invalid_argument("reward/value size mismatch");
  }
  const int n = static_cast<int>(rewards.size());
  ReturnsAdvantages out;
  out.returns.resize(n);
  out.advantages.resize(n);
  double gae = 0.0;
  for (int t = n - 1; t >= 0; --t) {
    const double next_value = t + 1 < n ? values(t + 1) : 0.0;
    const double delta = rewards(t) + gamma * next_value - values(t);
    gae = delta + gamma * lambda * gae;
    out.advantages(t) = gae;
  }
  out.returns = out.advantages + values;
  if (n > 0) {
    out.value_loss = (values - out.returns).squaredNorm() / n;
  }
  return out;
}

double estimation_loss(const std::vector<Eigen::VectorXd>& estimates,
                       const std::vector<Eigen::VectorXd>& targets) {
  if (estimates.empty() || estimates.size() != targets.size()) {
    throw std::invalid_argument("estimate/target batch mismatch");
  }
  double sum = 0.0;
  long total = 0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    if (estimates[i].size() != targets[i].size()) {
      throw std::invalid_argument("estimate/target dimension mismatch");
    }
    sum += (estimates[i] - targets[i]).squaredNorm();
    total += estimates[i].size();
  }
  return sum / static_cast<double>(total);
}

double gaussian_log_prob(const Eigen::VectorXd& action,
                         const Eigen::VectorXd& mean, double sigma) {
  if (action.size() != mean.size()) {
    throw std::invalid_argument("action dimension mismatch");
  }
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("sigma must be positive");
  }
  const double dim = static_cast<double>(action.size());
  return -(action - mean).squaredNorm() / (2.0 * sigma * sigma) -
         dim * (std::log(sigma) + kLogSqrtTwoPi);
}

LossTerms net_loss(const ActorCriticNet& net, const SampleBatch& batch,
                   const LossCoefficients& coef, double action_sigma,
                   const SignedPerm* observation_mirror,
                   const SignedPerm* action_mirror, ActorCriticNet* grads) {
  const int n = batch.size();
  if (n == 0) throw std::invalid_argument("empty batch");
  if (static_cast<int>(batch.critic_obs.size()) != n ||
      static_cast<int>(batch.actions.size()) != n ||
      static_cast<int>(batch.est_targets.size()) != n ||
      batch.logp_old.size() != n || batch.returns.size() != n ||
      batch.advantages.size() != n) {
    throw std::invalid_argument("batch member sizes disagree");
  }
  const bool with_symmetry =
      observation_mirror != nullptr && action_mirror != nullptr;
  if (grads != nullptr) grads->set_zero();

  LossTerms terms;
  terms.coef = coef;
  const double inv_n = 1.0 / static_cast<double>(n);
  const double sigma_sq = action_sigma * action_sigma;

  double policy_sum = 0.0;
  double value_sum = 0.0;
  double est_sum = 0.0;
  long est_entries = 0;
  double sym_sum = 0.0;

  for (int i = 0; i < n; ++i) {
    const auto eval = net.actor_forward(batch.actor_obs[i]);

    // Policy surrogate.
    const double logp =
        gaussian_log_prob(batch.actions[i], eval.action_mean, action_sigma);
    const double ratio = std::exp(logp - batch.logp_old(i));
    const double advantage = batch.advantages(i);
    const double clipped_ratio =
        std::min(std::max(ratio, 1.0 - coef.clip_epsilon),
                 1.0 + coef.clip_epsilon);
    policy_sum += std::min(ratio * advantage, clipped_ratio * advantage);
    const bool clip_active =
        (ratio > 1.0 + coef.clip_epsilon && advantage > 0.0) ||
        (ratio < 1.0 - coef.clip_epsilon && advantage < 0.0);

    // Estimation target gap.
    const Eigen::VectorXd est_diff = eval.estimate - batch.est_targets[i];
    est_sum += est_diff.squaredNorm();
    est_entries += eval.estimate.size();

    // Symmetry defect.
    Eigen::VectorXd sym_diff;
    ActorCriticNet::ActorEval mirrored_eval;
    if (with_symmetry) {
      mirrored_eval =
          net.actor_forward(observation_mirror->apply(batch.actor_obs[i]));
      sym_diff = eval.action_mean -
                 action_mirror->apply(mirrored_eval.action_mean);
      sym_sum += sym_diff.squaredNorm();
    }

    if (grads != nullptr) {
      Eigen::VectorXd grad_mean =
          Eigen::VectorXd::Zero(eval.action_mean.size());
      if (!clip_active) {
        // d(-min)/d(mean) through ratio = exp(logp - logp_old).
        const Eigen::VectorXd dlogp_dmean =
            (batch.actions[i] - eval.action_mean) / sigma_sq;
        grad_mean -= coef.lambda_policy * inv_n * advantage * ratio *
                     dlogp_dmean;
      }
      Eigen::VectorXd grad_est =
          coef.lambda_est * 2.0 * (eval.estimate - batch.est_targets[i]);
      // est_entries is n * estimate_dim; normalize later once known.
      grad_est /= static_cast<double>(n * eval.estimate.size());

      if (with_symmetry) {
        grad_mean += coef.beta * 2.0 * sym_diff;
        // The mirrored branch sees -2 * F_a^T(diff); the involution is its
        // own transpose.
        const Eigen::VectorXd grad_mirror_mean =
            -coef.beta * 2.0 * action_mirror->apply(sym_diff);
        net.actor_backward(mirrored_eval, grad_mirror_mean,
                           Eigen::VectorXd(), *grads);
      }
      net.actor_backward(eval, grad_mean, grad_est, *grads);
    }

    // Critic.
    Mlp::Cache critic_cache;
    const double v = net.critic.forward(batch.critic_obs[i], critic_cache)(0);
    const double v_err = v - batch.returns(i);
    value_sum += v_err * v_err;
    if (grads != nullptr) {
      Eigen::VectorXd grad_v(1);
      grad_v(0) = 2.0 * inv_n * v_err;
      net.critic.backward(critic_cache, grad_v, grads->critic);
    }
  }

  terms.policy = -policy_sum * inv_n;
  terms.value = value_sum * inv_n;
  terms.estimation = est_sum / static_cast<double>(est_entries);
  terms.symmetry = sym_sum;
  return terms;
}

double gradient_check(ActorCriticNet& net, const SampleBatch& batch,
                      const LossCoefficients& coef, double action_sigma,
                      const SignedPerm* observation_mirror,
                      const SignedPerm* action_mirror, double fd_step) {
  ActorCriticNet grads(net.spec());
  const LossTerms terms =
      net_loss(net, batch, coef, action_sigma, observation_mirror,
               action_mirror, &grads);
  (void)total_objective(terms);
  const Eigen::VectorXd analytic = grads.parameters();

  const Eigen::VectorXd theta = net.parameters();
  double max_rel_err = 0.0;
  for (int i = 0; i < theta.size(); ++i) {
    Eigen::VectorXd perturbed = theta;
    perturbed(i) = theta(i) + fd_step;
    net.set_parameters(perturbed);
    const double up = total_objective(net_loss(net, batch, coef, action_sigma,
                                               observation_mirror,
                                               action_mirror, nullptr));
    perturbed(i) = theta(i) - fd_step;
    net.set_parameters(perturbed);
    const double down = total_objective(
        net_loss(net, batch, coef, action_sigma, observation_mirror,
                 action_mirror, nullptr));
    const double fd = (up - down) / (2.0 * fd_step);
    const double denom = std::max(std::abs(analytic(i)) + std::abs(fd), 1e-6);
    max_rel_err = std::max(max_rel_err, std::abs(analytic(i) - fd) / denom);
  }
  net.set_parameters(theta);
  return max_rel_err;
}

Adam::Adam(int dim, double learning_rate, double beta1, double beta2,
           double epsilon)
    : lr_(learning_rate),
      beta1_(beta1),
      beta2_(beta2),
      eps_(epsilon),
      m_(Eigen::VectorXd::Zero(dim)),
      v_(Eigen::VectorXd::Zero(dim)) {}

void Adam::step(Eigen::VectorXd& params, const Eigen::VectorXd& grads) {
  if (params.size() != m_.size() || grads.size() != m_.size()) {
    throw std::invalid_argument("adam dimension mismatch");
  }
  ++t_;
  m_ = beta1_ * m_ + (1.0 - beta1_) * grads;
  v_ = beta2_ * v_.array().matrix() +
       (1.0 - beta2_) * grads.array().square().matrix();
  const double bias1 = 1.0 - std::pow(beta1_, t_);
  const double bias2 = 1.0 - std::pow(beta2_, t_);
  params.array() -= lr_ * (m_.array() / bias1) /
                    ((v_.array() / bias2).sqrt() + eps_);
}

}  // namespace gaitkit
