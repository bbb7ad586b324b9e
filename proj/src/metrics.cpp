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

#include "scissors/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace scissors {

namespace {

double overlap_fidelity(const MultimodeState& output,
                        const MultimodeState& reference) {
  if (output.mode_count() != 1) {
    throw std::invalid_argument("fidelity expects a single-mode output");
  }
  double out_norm = output.norm2();
  if (std::abs(out_norm - 1.0) > 1e-8) {
    throw std::invalid_argument("fidelity expects a normalized output");
  }
  double deficit = 1.0 - reference.norm2();
  if (deficit > 1e-10) {
    throw std::invalid_argument(
        "reference cutoff insufficient: coherent norm deficit " +
        std::to_string(deficit));
  }
  MultimodeState padded = output.cutoff() < reference.cutoff()
                              ? with_cutoff(output, reference.cutoff())
                              : output;
  return std::norm(inner_product(reference, padded));
}

}  // namespace

int reference_cutoff_for(double g_alpha_sq) {
  double y = std::max(0.0, g_alpha_sq);
  int needed = static_cast<int>(std::ceil(y + 8.0 * std::sqrt(y) + 10.0));
  return std::max(12, needed);
}

double fidelity_vs_amplified_coherent(const MultimodeState& output,
                                      Cplx g_alpha, int reference_cutoff) {
  return overlap_fidelity(output,
                          coherent_truncated(g_alpha, reference_cutoff));
}

double fidelity_vs_sign_flipped_coherent(const MultimodeState& output,
                                         Cplx g_alpha, int reference_cutoff) {
  MultimodeState reference = coherent_truncated(g_alpha, reference_cutoff);
  reference.set_amp({2}, -reference.amp({2}));
  return overlap_fidelity(output, reference);
}

double n_network_fidelity(Cplx alpha, double intensity_gain, int n_arms,
                          int cutoff) {
  NNetworkResult net = n_network(alpha, intensity_gain, n_arms, cutoff);
  Cplx g_alpha = std::sqrt(intensity_gain) * alpha;
  return fidelity_vs_amplified_coherent(net.output, g_alpha,
                                        reference_cutoff_for(std::norm(g_alpha)));
}

MeritPoint merit_point(const AmplifierConfig& config, double intensity_gain,
                       bool sign_flipped_target) {
  if (!(intensity_gain > 0.0)) {
    throw std::invalid_argument("intensity gain must be positive");
  }
  AmplifierConfig point = config;
  point.intensity_gain = intensity_gain;

  double probability = 0.0;
  MultimodeState output(1, 1);
  if (config.variant == AmplifierVariant::n_network) {
    NNetworkResult net =
        n_network(point.alpha, intensity_gain, point.n_arms, point.cutoff);
    probability = net.probability;
    output = net.output;
  } else {
    HeraldOutcome outcome = closed_form_outcome(point);
    probability = outcome.probability;
    output = outcome.output;
  }

  Cplx g_alpha = device_gain(point) * point.alpha;
  int ref_cutoff = reference_cutoff_for(std::norm(g_alpha));
  double fidelity =
      sign_flipped_target
          ? fidelity_vs_sign_flipped_coherent(output, g_alpha, ref_cutoff)
          : fidelity_vs_amplified_coherent(output, g_alpha, ref_cutoff);

  MeritPoint mp;
  mp.intensity_gain = intensity_gain;
  mp.fidelity = fidelity;
  mp.defect = 1.0 - fidelity;
  mp.log_recip_defect = mp.defect > 0.0
                            ? -std::log10(mp.defect)
                            : std::numeric_limits<double>::infinity();
  mp.probability = probability;
  mp.utility = mp.defect > 0.0 ? probability / mp.defect
                               : std::numeric_limits<double>::infinity();
  return mp;
}

std::vector<MeritPoint> merit_curve(const AmplifierConfig& config,
                                    std::span<const double> gain_grid,
                                    bool sign_flipped_target) {
  std::vector<MeritPoint> curve;
  curve.reserve(gain_grid.size());
  for (double g2 : gain_grid) {
    curve.push_back(merit_point(config, g2, sign_flipped_target));
  }
  return curve;
}

}  // namespace scissors
