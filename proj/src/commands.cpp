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

#include "gaitkit/commands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gaitkit {

std::array<double, 12> CommandVector::flatten() const {
  const auto b = behavior.extended();
  std::array<double, 12> out;
  out[0] = task.vx_mps;
  out[1] = task.vy_mps;
  out[2] = task.yaw_rate_rps;
  std::copy(b.begin(), b.end(), out.begin() + 3);
  return out;
}

ChannelRange make_channel(double def, double init_min, double init_max,
                          double fin_min, double fin_max) {
  ChannelRange r;
  r.default_value = def;
  r.initial_min = init_min;
  r.initial_max = init_max;
  r.finishing_min = fin_min;
  r.finishing_max = fin_max;
  r.live_min = init_min;
  r.live_max = init_max;
  validate(r);
  return r;
}

ChannelRange fixed_channel(double value) {
  return make_channel(value, value, value, value, value);
}

void validate(const ChannelRange& range) {
  if (!(range.initial_min <= range.initial_max)) {
    throw std::invalid_argument("initial range is empty");
  }
  if (!(range.default_value >= range.initial_min &&
        range.default_value <= range.initial_max)) {
    throw std::invalid_argument("default value outside the initial range");
  }
  if (!(range.finishing_min <= range.initial_min &&
        range.finishing_max >= range.initial_max)) {
    throw std::invalid_argument(
        "initial range must be contained in the finishing range");
  }
  if (!(range.live_min <= range.live_max)) {
    throw std::invalid_argument("live range is empty");
  }
  if (!(range.live_min >= range.finishing_min &&
        range.live_max <= range.finishing_max)) {
    throw std::invalid_argument("live range outside the finishing range");
  }
}

void validate(const CommandRanges& ranges) {
  validate(ranges.vx);
  validate(ranges.vy);
  validate(ranges.yaw_rate);
  validate(ranges.frequency);
  validate(ranges.swing_height);
  validate(ranges.body_height);
  validate(ranges.body_pitch);
  validate(ranges.waist_yaw);
}

CommandRanges CommandRanges::defaults() {
  CommandRanges r;
  r.vx = make_channel(0.0, -0.6, 0.6, -0.6, 2.0);
  r.vy = make_channel(0.0, -0.6, 0.6, -0.6, 0.6);
  r.yaw_rate = make_channel(0.0, -0.6, 0.6, -1.0, 1.0);
  r.frequency = make_channel(2.0, 1.5, 3.5, 1.5, 3.5);
  r.swing_height = make_channel(0.15, 0.1, 0.35, 0.1, 0.35);
  r.body_height = make_channel(0.0, -0.3, 0.0, -0.3, 0.0);
  r.body_pitch = make_channel(0.0, 0.0, 0.4, 0.0, 0.4);
  r.waist_yaw = make_channel(0.0, -1.0, 1.0, -1.0, 1.0);
  return r;
}

CommandRanges CommandRanges::hopping_defaults() {
  CommandRanges r;
  r.vx = make_channel(0.0, -0.6, 0.6, -0.6, 0.6);
  r.vy = make_channel(0.0, -0.6, 0.6, -0.6, 0.6);
  r.yaw_rate = make_channel(0.0, -0.6, 0.6, -0.6, 0.6);
  r.body_height = make_channel(0.0, -0.3, 0.0, -0.3, 0.0);
  // The remaining behavior channels become regular constants.
  r.frequency = fixed_channel(2.0);
  r.swing_height = fixed_channel(0.15);
  r.body_pitch = fixed_channel(0.0);
  r.waist_yaw = fixed_channel(0.0);
  return r;
}

namespace {

double draw(const ChannelRange& range, Rng& rng) {
  if (range.live_min == range.live_max) return range.live_min;
  return rng.uniform(range.live_min, range.live_max);
}

CommandVector fill_gait_channels(CommandVector cmd, const GaitPreset& preset,
                                 const PhaseState& phase) {
  cmd.behavior.phase_offset = preset.phase_offset;
  cmd.behavior.duty_cycle = preset.duty_cycle;
  const auto clocks = clock_values(phase);
  cmd.behavior.clock_left = clocks[0];
  cmd.behavior.clock_right = clocks[1];
  cmd.gait = preset.kind;
  return cmd;
}

}  // namespace

CommandVector sample_command(const CommandRanges& ranges,
                             const GaitPreset& preset,
                             const PhaseState& phase, Rng& rng) {
  validate(ranges);
  validate(preset);
  CommandVector cmd;
  cmd.task.vx_mps = draw(ranges.vx, rng);
  cmd.task.vy_mps = draw(ranges.vy, rng);
  cmd.task.yaw_rate_rps = draw(ranges.yaw_rate, rng);
  if (preset.kind == GaitKind::kHopping) {
    // Hopping only supports velocity and body-height commands.
    cmd.behavior.frequency_hz = ranges.frequency.default_value;
    cmd.behavior.swing_height_m = ranges.swing_height.default_value;
    cmd.behavior.body_pitch_rad = 0.0;
    cmd.behavior.waist_yaw_rad = 0.0;
    cmd.behavior.body_height_m = draw(ranges.body_height, rng);
  } else {
    cmd.behavior.frequency_hz = draw(ranges.frequency, rng);
    cmd.behavior.swing_height_m = draw(ranges.swing_height, rng);
    cmd.behavior.body_height_m = draw(ranges.body_height, rng);
    cmd.behavior.body_pitch_rad = draw(ranges.body_pitch, rng);
    cmd.behavior.waist_yaw_rad = draw(ranges.waist_yaw, rng);
  }
  return fill_gait_channels(cmd, preset, phase);
}

CommandVector default_command(const CommandRanges& ranges,
                              const GaitPreset& preset,
                              const PhaseState& phase) {
  validate(ranges);
  CommandVector cmd;
  cmd.task.vx_mps = ranges.vx.default_value;
  cmd.task.vy_mps = ranges.vy.default_value;
  cmd.task.yaw_rate_rps = ranges.yaw_rate.default_value;
  cmd.behavior.frequency_hz = ranges.frequency.default_value;
  cmd.behavior.swing_height_m = ranges.swing_height.default_value;
  cmd.behavior.body_height_m = ranges.body_height.default_value;
  cmd.behavior.body_pitch_rad = ranges.body_pitch.default_value;
  cmd.behavior.waist_yaw_rad = ranges.waist_yaw.default_value;
  return fill_gait_channels(cmd, preset, phase);
}

bool SpeedGridState::is_unlocked(int ix, int iw) const {
  if (ix < 0 || ix >= nx || iw < 0 || iw >= nw) return false;
  return unlocked[index(ix, iw)] != 0;
}

std::pair<int, int> SpeedGridState::default_bin() const {
  const auto clamp_bin = [](double value, double lo, double bin, int n) {
    int i = static_cast<int>(std::floor((value - lo) / bin));
    return std::clamp(i, 0, n - 1);
  };
  return {clamp_bin(0.0, config.vx_min, config.vx_bin, nx),
          clamp_bin(0.0, config.wz_min, config.wz_bin, nw)};
}

int SpeedGridState::unlocked_count() const {
  int n = 0;
  for (auto u : unlocked) n += u != 0;
  return n;
}

SpeedGridState make_speed_grid(const SpeedGridConfig& config) {
  if (!(config.vx_min < config.vx_max) || !(config.wz_min < config.wz_max) ||
      !(config.vx_bin > 0.0) || !(config.wz_bin > 0.0)) {
    throw std::invalid_argument("invalid speed grid config");
  }
  SpeedGridState state;
  state.config = config;
  state.nx = static_cast<int>(
      std::ceil((config.vx_max - config.vx_min) / config.vx_bin - 1e-12));
  state.nw = static_cast<int>(
      std::ceil((config.wz_max - config.wz_min) / config.wz_bin - 1e-12));
  state.unlocked.assign(static_cast<std::size_t>(state.nx) * state.nw, 0);
  state.successes.assign(state.unlocked.size(), 0);
  const auto [ix, iw] = state.default_bin();
  state.unlocked[state.index(ix, iw)] = 1;
  return state;
}

SpeedGridState update_speed_grid(const SpeedGridState& state, int ix, int iw,
                                 double tracking_reward,
                                 const SpeedGridThresholds& thresholds) {
  if (ix < 0 || ix >= state.nx || iw < 0 || iw >= state.nw) {
    throw std::invalid_argument("speed grid bin out of range");
  }
  if (!state.is_unlocked(ix, iw)) {
    throw std::invalid_argument("speed grid bin is locked");
  }
  SpeedGridState next = state;
  if (!(tracking_reward > thresholds.reward_threshold)) {
    return next;
  }
  int& successes = next.successes[next.index(ix, iw)];
  ++successes;
  if (successes < thresholds.required_successes) {
    return next;
  }
  const int dx[4] = {1, -1, 0, 0};
  const int dw[4] = {0, 0, 1, -1};
  for (int k = 0; k < 4; ++k) {
    const int jx = ix + dx[k];
    const int jw = iw + dw[k];
    if (jx < 0 || jx >= next.nx || jw < 0 || jw >= next.nw) continue;
    next.unlocked[next.index(jx, jw)] = 1;
  }
  return next;
}

bool unlocked_region_connected(const SpeedGridState& state) {
  const auto [sx, sw] = state.default_bin();
  if (!state.is_unlocked(sx, sw)) return false;
  std::vector<std::uint8_t> seen(state.unlocked.size(), 0);
  std::vector<std::pair<int, int>> stack = {{sx, sw}};
  seen[state.index(sx, sw)] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const auto [ix, iw] = stack.back();
    stack.pop_back();
    ++reached;
    const int dx[4] = {1, -1, 0, 0};
    const int dw[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      const int jx = ix + dx[k];
      const int jw = iw + dw[k];
      if (jx < 0 || jx >= state.nx || jw < 0 || jw >= state.nw) continue;
      const int idx = state.index(jx, jw);
      if (state.unlocked[idx] && !seen[idx]) {
        seen[idx] = 1;
        stack.emplace_back(jx, jw);
      }
    }
  }
  return reached == state.unlocked_count();
}

std::pair<double, double> sample_from_grid(const SpeedGridState& state,
                                           Rng& rng) {
  std::vector<int> open;
  for (int i = 0; i < static_cast<int>(state.unlocked.size()); ++i) {
    if (state.unlocked[i]) open.push_back(i);
  }
  if (open.empty()) {
    throw std::invalid_argument("speed grid has no unlocked bins");
  }
  const int pick = open[static_cast<int>(rng.below(open.size()))];
  const int ix = pick / state.nw;
  const int iw = pick % state.nw;
  const double vx_lo = state.config.vx_min + ix * state.config.vx_bin;
  const double wz_lo = state.config.wz_min + iw * state.config.wz_bin;
  const double vx_hi = std::min(vx_lo + state.config.vx_bin,
                                state.config.vx_max);
  const double wz_hi = std::min(wz_lo + state.config.wz_bin,
                                state.config.wz_max);
  return {rng.uniform(vx_lo, vx_hi), rng.uniform(wz_lo, wz_hi)};
}

double update_noise_alpha(double alpha, double linear_reward,
                          double angular_reward,
                          const NoiseAlphaThresholds& thresholds) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha out of [0, 1]");
  }
  // Work on the 0.01 grid so repeated increments land exactly on 1.0.
  int steps = static_cast<int>(std::lround(alpha * 100.0));
  const bool both_above = linear_reward > thresholds.linear_reward &&
                          angular_reward > thresholds.angular_reward;
  const bool either_failing =
      linear_reward < thresholds.linear_reward * (2.0 / 3.0) ||
      angular_reward < thresholds.angular_reward * (2.0 / 3.0);
  if (both_above) {
    ++steps;
  } else if (either_failing) {
    --steps;
  }
  steps = std::clamp(steps, 0, 100);
  return steps / 100.0;
}

}  // namespace gaitkit
