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

#include "gaitkit/swing.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace gaitkit {

namespace {

// Quintic smoothstep and derivatives on the unit interval; zero velocity
// and acceleration at both ends.
double smoothstep(double u) { return u * u * u * (10.0 + u * (-15.0 + 6.0 * u)); }
double smoothstep_d1(double u) { return 30.0 * u * u * (1.0 - u) * (1.0 - u); }
double smoothstep_d2(double u) { return 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u); }

void check_phase(double phi_bar) {
  if (!(phi_bar >= 0.0 && phi_bar <= 1.0)) {
    throw std::invalid_argument("homogenized phase out of [0, 1]");
  }
}

}  // namespace

void validate(const SwingProfile& profile) {
  if (!std::isfinite(profile.peak_height_m) ||
      !std::isfinite(profile.start_height_m) ||
      !std::isfinite(profile.end_height_m)) {
    throw std::invalid_argument("swing profile heights must be finite");
  }
  if (profile.peak_height_m < 0.0) {
    throw std::invalid_argument("swing peak height must be non-negative");
  }
  if (profile.peak_height_m <
      std::max(profile.start_height_m, profile.end_height_m)) {
    throw std::invalid_argument("swing peak must not be below the endpoints");
  }
  if (!(profile.phi_stance > 0.0 && profile.phi_stance < 1.0)) {
    throw std::invalid_argument("duty cycle must be strictly inside (0, 1)");
  }
}

double QuinticSegment::position(double phi_bar) const {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * phi_bar + c;
  return acc;
}

double QuinticSegment::velocity(double phi_bar) const {
  const auto& a = coeffs;
  return ((((5.0 * a[0]) * phi_bar + 4.0 * a[1]) * phi_bar + 3.0 * a[2]) *
              phi_bar +
          2.0 * a[3]) *
             phi_bar +
         a[4];
}

double QuinticSegment::acceleration(double phi_bar) const {
  const auto& a = coeffs;
  return ((20.0 * a[0] * phi_bar + 12.0 * a[1]) * phi_bar + 6.0 * a[2]) *
             phi_bar +
         2.0 * a[3];
}

double target_height(double phi_bar, const SwingProfile& profile) {
  check_phase(phi_bar);
  validate(profile);
  const SwingKnots k{};
  if (phi_bar < k.start) return 0.0;
  if (phi_bar <= k.peak) {
    const double u = (phi_bar - k.start) / (k.peak - k.start);
    return profile.start_height_m +
           (profile.peak_height_m - profile.start_height_m) * smoothstep(u);
  }
  const double u = (phi_bar - k.peak) / (k.end - k.peak);
  return profile.peak_height_m +
         (profile.end_height_m - profile.peak_height_m) * smoothstep(u);
}

std::pair<double, double> target_derivatives(double phi_bar,
                                             const SwingProfile& profile) {
  check_phase(phi_bar);
  validate(profile);
  const SwingKnots k{};
  if (phi_bar < k.start) return {0.0, 0.0};
  double span, rise, u;
  if (phi_bar <= k.peak) {
    span = k.peak - k.start;
    rise = profile.peak_height_m - profile.start_height_m;
    u = (phi_bar - k.start) / span;
  } else {
    span = k.end - k.peak;
    rise = profile.end_height_m - profile.peak_height_m;
    u = (phi_bar - k.peak) / span;
  }
  return {rise * smoothstep_d1(u) / span,
          rise * smoothstep_d2(u) / (span * span)};
}

std::pair<QuinticSegment, QuinticSegment> solve_quintic_oracle(
    const SwingProfile& profile, const SwingKnots& knots) {
  validate(profile);
  if (!(knots.start < knots.peak && knots.peak < knots.end)) {
    throw std::invalid_argument("degenerate swing knot interval");
  }

  const auto boundary_row = [](double x, int order) {
    Eigen::Matrix<double, 1, 6> row;
    switch (order) {
      case 0:
        row << x * x * x * x * x, x * x * x * x, x * x * x, x * x, x, 1.0;
        break;
      case 1:
        row << 5.0 * x * x * x * x, 4.0 * x * x * x, 3.0 * x * x, 2.0 * x,
            1.0, 0.0;
        break;
      default:
        row << 20.0 * x * x * x, 12.0 * x * x, 6.0 * x, 2.0, 0.0, 0.0;
        break;
    }
    return row;
  };

  const auto solve_segment = [&](double lo, double hi, double p_lo,
                                 double p_hi) {
    Eigen::Matrix<double, 6, 6> system;
    system.row(0) = boundary_row(lo, 0);
    system.row(1) = boundary_row(hi, 0);
    system.row(2) = boundary_row(lo, 1);
    system.row(3) = boundary_row(hi, 1);
    system.row(4) = boundary_row(lo, 2);
    system.row(5) = boundary_row(hi, 2);
    Eigen::Matrix<double, 6, 1> rhs;
    rhs << p_lo, p_hi, 0.0, 0.0, 0.0, 0.0;

    Eigen::FullPivLU<Eigen::Matrix<double, 6, 6>> lu(system);
    if (!lu.isInvertible()) {
      throw std::invalid_argument("singular swing boundary system");
    }
    const Eigen::Matrix<double, 6, 1> sol = lu.solve(rhs);

    QuinticSegment segment;
    segment.lo = lo;
    segment.hi = hi;
    for (int i = 0; i < 6; ++i) segment.coeffs[i] = sol(i);
    return segment;
  };

  return {solve_segment(knots.start, knots.peak, profile.start_height_m,
                        profile.peak_height_m),
          solve_segment(knots.peak, knots.end, profile.peak_height_m,
                        profile.end_height_m)};
}

}  // namespace gaitkit
