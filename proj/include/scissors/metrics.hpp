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

#ifndef SCISSORS_METRICS_HPP
#define SCISSORS_METRICS_HPP

#include <span>
#include <vector>

#include "scissors/amplifiers.hpp"

namespace scissors {

/// One evaluated point of a merit curve.
struct MeritPoint {
  double intensity_gain = 0.0;    // g^2
  double fidelity = 0.0;          // F
  double defect = 0.0;            // 1 - F
  double log_recip_defect = 0.0;  // -log10(1 - F)
  double probability = 0.0;       // P
  double utility = 0.0;           // U = P / (1 - F)
};

/// Reference cutoff guaranteeing the truncated |g alpha> norm deficit stays
/// below 1e-10 across the working parameter range.
int reference_cutoff_for(double g_alpha_sq);

/// Squared overlap of a normalized single-mode output with the coherent
/// state |g alpha> truncated at reference_cutoff.  Throws when the reference
/// cutoff leaves a norm deficit above 1e-10.
double fidelity_vs_amplified_coherent(const MultimodeState& output,
                                      Cplx g_alpha, int reference_cutoff);

/// Fidelity of an output against the target with its two-photon amplitude
/// negated, the natural reference for the sign-shift device.
double fidelity_vs_sign_flipped_coherent(const MultimodeState& output,
                                         Cplx g_alpha, int reference_cutoff);

/// Fidelity of the recombined N-arm network output against |g alpha>.
double n_network_fidelity(Cplx alpha, double intensity_gain, int n_arms,
                          int cutoff);

/// Evaluates one merit point for the configured variant at the given
/// intensity gain, using the closed-form path (simulation for the
/// input-swapped variant, which has no closed form of its own).
MeritPoint merit_point(const AmplifierConfig& config, double intensity_gain,
                       bool sign_flipped_target = false);

/// One MeritPoint per grid value.  Grid values must be positive.
std::vector<MeritPoint> merit_curve(const AmplifierConfig& config,
                                    std::span<const double> gain_grid,
                                    bool sign_flipped_target = false);

}  // namespace scissors

#endif  // SCISSORS_METRICS_HPP
