// Copyright 2026 The Scissors Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scissors/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace scissors {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Cplx pure_gain_residual(const BeamSplitter& bs) {
  Cplx tt = bs.t * bs.t_prime;
  Cplx rr = bs.r * bs.r_prime;
  Cplx sum = tt + rr;
  return sum * sum - tt * rr;
}

double lossless_condition_discriminant() {
  // x^2 - x + 1.
  double a = 1.0, b = -1.0, c = 1.0;
  return b * b - 4.0 * a * c;
}

ConditionReport lossless_infeasibility_proof(int scan_points) {
  ConditionReport report;
  report.feasible = false;
  report.solutions = {};

  int per_axis = std::max(4, static_cast<int>(std::ceil(
                                  std::cbrt(static_cast<double>(scan_points)))));
  double floor = std::numeric_limits<double>::infinity();
  for (int it = 0; it < per_axis; ++it) {
    double theta = (it + 0.5) * (kPi / 2.0) / per_axis;
    for (int ip = 0; ip < per_axis; ++ip) {
      double phi_t = 2.0 * kPi * ip / per_axis;
      for (int iq = 0; iq < per_axis; ++iq) {
        double phi_r = 2.0 * kPi * iq / per_axis;
        // phi_t' = 0; phi_r' fixed by the unitarity phase relation.
        double phi_r_prime = phi_t - phi_r + kPi;
        BeamSplitter bs{std::polar(std::cos(theta), phi_t), std::cos(theta),
                        std::polar(std::sin(theta), phi_r),
                        std::polar(std::sin(theta), phi_r_prime)};
        floor = std::min(floor, std::abs(pure_gain_residual(bs)));
      }
    }
  }
  report.residual = floor;
  report.notes =
      "x^2 - x + 1 has discriminant -3, so no real |r r'|/|t t'| satisfies "
      "the pure-gain condition; scanned lossless splitters bottom out at "
      "residual " +
      std::to_string(floor);
  return report;
}

std::pair<double, double> sign_shift_roots() {
  double half_span = std::sqrt(5.0) / 10.0;
  return {0.5 + half_span, 0.5 - half_span};
}

double lossy_phase_bound(double t_mag2, double r_mag2) {
  if (t_mag2 <= 0.0 || r_mag2 <= 0.0) {
    throw std::invalid_argument("lossy_phase_bound: magnitudes must be > 0");
  }
  double loss = 1.0 - t_mag2 - r_mag2;
  if (loss < -1e-12) {
    throw std::invalid_argument(
        "lossy_phase_bound: magnitudes exceed unity (t^2 + r^2 > 1)");
  }
  double denom = 2.0 * std::sqrt(t_mag2 * r_mag2);
  return std::min(1.0, std::max(0.0, loss) / denom);
}

double min_loss_for_pure_amp() {
  // The pure amplifier needs phase offset 2pi/3, i.e. bound cos(pi/3).
  const double target = std::cos(kPi / 3.0);
  double lo = 0.25, hi = 0.5;  // bound(lo) = 1, bound(hi) = 0; decreasing
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (lossy_phase_bound(mid, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double t2 = 0.5 * (lo + hi);
  return 1.0 - 2.0 * t2;
}

double max_photon_ratio_over_phases(const BeamSplitter& bs, int grid_points) {
  if (grid_points < 8) grid_points = 8;
  // Equal-magnitude coherent inputs alpha = e^{i delta}, beta = 1 give the
  // tightest case; only the relative phase matters.
  auto ratio = [&bs](double delta) {
    Cplx alpha = std::polar(1.0, delta);
    Cplx beta = 1.0;
    double out = std::norm(bs.t_prime * beta + bs.r * alpha) +
                 std::norm(bs.t * alpha + bs.r_prime * beta);
    return out / 2.0;
  };
  double best = 0.0;
  double best_delta = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    double delta = 2.0 * kPi * i / grid_points;
    double v = ratio(delta);
    if (v > best) {
      best = v;
      best_delta = delta;
    }
  }
  // Golden-section refinement around the best grid point.
  double a = best_delta - 2.0 * kPi / grid_points;
  double b = best_delta + 2.0 * kPi / grid_points;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  for (int i = 0; i < 160; ++i) {
    if (ratio(c) > ratio(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  return std::max(best, ratio(0.5 * (a + b)));
}

}  // namespace scissors
