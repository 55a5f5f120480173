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

#include "gaitkit/gait.hpp"

#include <cmath>
#include <stdexcept>

namespace gaitkit {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double wrap_unit(double x) {
  double r = std::fmod(x, 1.0);
  if (r < 0.0) r += 1.0;
  // fmod can return 1.0 after the negative fixup when x is a tiny
  // negative number.
  if (r >= 1.0) r -= 1.0;
  return r;
}

}  // namespace

std::string to_string(GaitKind kind) {
  switch (kind) {
    case GaitKind::kWalking:
      return "walking";
    case GaitKind::kJumping:
      return "jumping";
    case GaitKind::kStanding:
      return "standing";
    case GaitKind::kHopping:
      return "hopping";
  }
  throw std::invalid_argument("unknown gait kind");
}

GaitKind gait_from_string(const std::string& name) {
  if (name == "walking") return GaitKind::kWalking;
  if (name == "jumping") return GaitKind::kJumping;
  if (name == "standing") return GaitKind::kStanding;
  if (name == "hopping") return GaitKind::kHopping;
  throw std::invalid_argument("unknown gait: " + name);
}

bool GaitPreset::leg_is_fixed(Foot foot) const {
  if (fixed_phases.has_value()) return true;
  return kind == GaitKind::kHopping && foot == hopping_flying_leg;
}

GaitPreset walking_preset() {
  GaitPreset p;
  p.kind = GaitKind::kWalking;
  p.phase_offset = 0.5;
  p.duty_cycle = 0.5;
  return p;
}

GaitPreset jumping_preset() {
  GaitPreset p;
  p.kind = GaitKind::kJumping;
  p.phase_offset = 0.0;
  p.duty_cycle = 0.5;
  return p;
}

GaitPreset standing_preset() {
  GaitPreset p;
  p.kind = GaitKind::kStanding;
  p.phase_offset = 0.0;
  p.duty_cycle = 0.5;
  p.fixed_phases = std::array<double, 2>{0.25, 0.25};
  return p;
}

GaitPreset hopping_preset(Foot flying_leg) {
  GaitPreset p;
  p.kind = GaitKind::kHopping;
  p.phase_offset = 0.0;
  p.duty_cycle = 0.5;
  p.hopping_flying_leg = flying_leg;
  return p;
}

GaitPreset preset_for(GaitKind kind, Foot hopping_flying_leg) {
  switch (kind) {
    case GaitKind::kWalking:
      return walking_preset();
    case GaitKind::kJumping:
      return jumping_preset();
    case GaitKind::kStanding:
      return standing_preset();
    case GaitKind::kHopping:
      return hopping_preset(hopping_flying_leg);
  }
  throw std::invalid_argument("unknown gait kind");
}

void validate(const GaitPreset& preset) {
  if (!(preset.phase_offset >= 0.0 && preset.phase_offset < 1.0)) {
    throw std::invalid_argument("phase offset must be in [0, 1)");
  }
  if (!(preset.duty_cycle >= 0.0 && preset.duty_cycle <= 1.0)) {
    throw std::invalid_argument("duty cycle must be in [0, 1]");
  }
  if (preset.fixed_phases) {
    for (double phi : *preset.fixed_phases) {
      if (!(phi >= 0.0 && phi < 1.0)) {
        throw std::invalid_argument("fixed phase must be in [0, 1)");
      }
    }
  }
  switch (preset.kind) {
    case GaitKind::kWalking:
      if (preset.phase_offset != 0.5) {
        throw std::invalid_argument("walking requires a half-cycle offset");
      }
      break;
    case GaitKind::kJumping:
      if (preset.phase_offset != 0.0) {
        throw std::invalid_argument("jumping requires zero offset");
      }
      break;
    case GaitKind::kStanding:
      if (!preset.fixed_phases || (*preset.fixed_phases)[0] != 0.25 ||
          (*preset.fixed_phases)[1] != 0.25) {
        throw std::invalid_argument("standing pins both phases at 0.25");
      }
      break;
    case GaitKind::kHopping:
      if (preset.fixed_phases) {
        throw std::invalid_argument(
            "hopping freezes only the flying leg, not both");
      }
      break;
  }
}

PhaseState make_phase_state(const GaitPreset& preset, double frequency_hz,
                            double dt_s) {
  validate(preset);
  PhaseState state;
  state.preset = preset;
  state.frequency_hz = frequency_hz;
  state.dt_s = dt_s;
  if (preset.fixed_phases) {
    state.phase = *preset.fixed_phases;
  } else if (preset.kind == GaitKind::kHopping) {
    const int flying = static_cast<int>(preset.hopping_flying_leg);
    state.phase[flying] = 0.75;
    state.phase[1 - flying] = 0.0;
  } else {
    state.phase[0] = 0.0;
    state.phase[1] = wrap_unit(preset.phase_offset);
  }
  validate(state);
  return state;
}

void validate(const PhaseState& state) {
  validate(state.preset);
  if (!std::isfinite(state.frequency_hz) || state.frequency_hz <= 0.0) {
    throw std::invalid_argument("gait frequency must be finite and positive");
  }
  if (!std::isfinite(state.dt_s) || state.dt_s <= 0.0) {
    throw std::invalid_argument("dt must be finite and positive");
  }
  for (double phi : state.phase) {
    if (!(phi >= 0.0 && phi < 1.0)) {
      throw std::invalid_argument("phase out of [0, 1)");
    }
  }
}

PhaseState advance_phase(const PhaseState& state) {
  validate(state);
  PhaseState next = state;
  const GaitPreset& preset = state.preset;
  const double step = state.frequency_hz * state.dt_s;

  if (preset.fixed_phases) {
    return next;  // both legs pinned
  }
  if (preset.kind == GaitKind::kHopping) {
    const int flying = static_cast<int>(preset.hopping_flying_leg);
    next.phase[1 - flying] = wrap_unit(state.phase[1 - flying] + step);
    return next;
  }
  // Offset gaits: left advances, right is re-derived from the updated left.
  next.phase[0] = wrap_unit(state.phase[0] + step);
  next.phase[1] = wrap_unit(next.phase[0] + preset.phase_offset);
  return next;
}

void validate(const ContactModelParams& params) {
  if (!std::isfinite(params.sigma) || params.sigma <= 0.0 ||
      params.sigma > 0.1) {
    throw std::invalid_argument(
        "contact sigma must be in (0, 0.1] so the switching interval stays "
        "inside the half-cycle");
  }
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / 1.41421356237309504880);
}

double homogenize_phase(double phi, double phi_stance) {
  if (!(phi >= 0.0 && phi < 1.0)) {
    throw std::invalid_argument("phase out of [0, 1)");
  }
  if (!(phi_stance > 0.0 && phi_stance < 1.0)) {
    throw std::invalid_argument("duty cycle must be strictly inside (0, 1)");
  }
  if (phi < phi_stance) {
    return 0.5 * phi / phi_stance;
  }
  return 0.5 + 0.5 * (phi - phi_stance) / (1.0 - phi_stance);
}

double contact_probability(double phi_bar, const ContactModelParams& params) {
  validate(params);
  if (!(phi_bar >= 0.0 && phi_bar <= 1.0)) {
    throw std::invalid_argument("homogenized phase out of [0, 1]");
  }
  const double s = params.sigma;
  const double first =
      normal_cdf(phi_bar / s) * (1.0 - normal_cdf((phi_bar - 0.5) / s));
  const double second = normal_cdf((phi_bar - 1.0) / s) *
                        (1.0 - normal_cdf((phi_bar - 1.5) / s));
  return first + second;
}

std::array<double, 2> homogenized_phases(const PhaseState& state) {
  validate(state);
  return {homogenize_phase(state.phase[0], state.preset.duty_cycle),
          homogenize_phase(state.phase[1], state.preset.duty_cycle)};
}

std::array<double, 2> clock_values(const PhaseState& state) {
  const auto bars = homogenized_phases(state);
  return {std::sin(kTwoPi * bars[0]), std::sin(kTwoPi * bars[1])};
}

std::array<double, 2> contact_probabilities(const PhaseState& state,
                                            const ContactModelParams& params) {
  const auto bars = homogenized_phases(state);
  return {contact_probability(bars[0], params),
          contact_probability(bars[1], params)};
}

}  // namespace gaitkit
