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

#ifndef SCISSORS_AMPLIFIERS_HPP
#define SCISSORS_AMPLIFIERS_HPP

#include <map>
#include <string>

#include "scissors/optics.hpp"

namespace scissors {

enum class AmplifierVariant {
  one_photon,
  n_network,
  two_photon_pure,
  two_photon_sign_shift,
  two_photon_variant_ii,
};

struct AmplifierConfig {
  AmplifierVariant variant = AmplifierVariant::two_photon_pure;
  Cplx alpha = 0.0;              // input coherent amplitude
  double intensity_gain = 1.0;   // g^2
  int n_arms = 2;                // N, n_network only
  int cutoff = 10;
};

/// One post-selection result: the detector pattern, its probability, and the
/// conditional output state.
struct HeraldOutcome {
  /// Mode index (0-based, simulation layout) -> photon count.  Mode 0 is
  /// always the device output and never appears here.
  std::map<int, int> herald;
  /// Squared norm of raw_branch.  With the sub-normalized coherent input
  /// convention this is the absolute success probability of the device.
  double probability = 0.0;
  /// Renormalized single-mode output.
  MultimodeState output;
  /// Unnormalized heralded branch.
  MultimodeState raw_branch;
};

// ---------------------------------------------------------------------------
// Default splitter builders.  Simulation layout for the scissors devices:
// mode 0 = device output, mode 1 = internal (first splitter to second),
// mode 2 = coherent input / detector, mode 3 = loss ancilla when present.
// The first splitter couples (0,1); the second couples (1,2) and is applied
// in the reversed direction, which is the orientation that reproduces the
// closed forms below.
// ---------------------------------------------------------------------------

/// 50/50 splitter with real coefficients, the default BS1 of the one-photon
/// scissors.
BeamSplitter fifty_fifty_bs1();

/// Output-side splitter realizing amplitude gain g = t/r' = sqrt(g2) > 0:
/// |t|^2 = g2/(1 + g2) with real coefficients.
BeamSplitter gain_bs2(double intensity_gain);

/// The 33/33 lossy splitter (|t|^2 = |r|^2 = 1/3, phase sums offset by
/// 2pi/3, canonical phase split) that makes the two-photon scissors a pure
/// amplifier.  Sits exactly on the passive phase bound, so it embeds in a
/// tritter.
BeamSplitter pure_amp_bs1();

/// Lossless symmetric splitter at one of the two transmittance roots of the
/// sign-shift condition, (5 + sqrt 5)/10 by default.
BeamSplitter sign_shift_bs1(bool larger_root = true);

// ---------------------------------------------------------------------------
// One-photon scissors and the N-arm network.
// ---------------------------------------------------------------------------

/// Complex gain t1 t2 / (r1 r2') of the one-photon scissors.
Cplx one_photon_gain(const BeamSplitter& bs1, const BeamSplitter& bs2);

/// Closed-form heralded output e^{-|a|^2/2} r1 r2' (|0> + g a |1>) with the
/// detector pattern (0 photons at the internal port, 1 at the coherent
/// port).  Throws when r1 r2' = 0 (gain undefined).
HeraldOutcome one_photon_closed_form(Cplx alpha, const BeamSplitter& bs1,
                                     const BeamSplitter& bs2);

/// Full three-mode simulation of the same device.  With pre_truncate the
/// coherent input is cut at one photon, matching the closed form exactly;
/// without it the full input is used (the success herald is insensitive to
/// the extra components, since the output mode can carry at most one
/// photon).
HeraldOutcome one_photon_simulated(Cplx alpha, const BeamSplitter& bs1,
                                   const BeamSplitter& bs2, int cutoff,
                                   bool pre_truncate = true);

struct NNetworkResult {
  /// Product of the N arm herald probabilities,
  /// e^{-|a|^2} 2^{-N} (1+g^2)^{-N} (1 + |g a|^2 / N)^N.
  double probability = 0.0;
  /// Arms recombined through the inverse splitting network with vacuum
  /// heralded on the N-1 ancilla ports, renormalized.
  MultimodeState output;
};

/// N one-photon amplifiers acting on an evenly split coherent state, each
/// with 50/50 input splitter and gain g per arm.
NNetworkResult n_network(Cplx alpha, double intensity_gain, int n_arms,
                         int cutoff);

// ---------------------------------------------------------------------------
// Two-photon devices.
// ---------------------------------------------------------------------------

/// Heralded two-photon scissors output for arbitrary splitters:
/// sqrt(2) e^{-|a|^2/2} [ t1' r1 r2'^2 |0>
///                       + a (t1 t1' + r1 r1') t2 r2' |1>
///                       + (a^2/sqrt 2) r1' t1 t2^2 |2> ],
/// detector pattern (0, 2).
HeraldOutcome two_photon_closed_form(Cplx alpha, const BeamSplitter& bs1,
                                     const BeamSplitter& bs2);

/// Pure two-photon amplifier: 33/33 lossy first splitter, gain splitter at
/// the output.  Both gain correction factors equal one under the canonical
/// phase split, so the branch is proportional to
/// |0> + g a |1> + (g^2 a^2 / sqrt 2) |2> with g = sqrt(intensity_gain),
/// and the probability is
/// (2/9) e^{-|a|^2} (1+g^2)^{-2} (1 + |g a|^2 + |g a|^4 / 2).
HeraldOutcome two_photon_pure_closed_form(Cplx alpha, double intensity_gain);

/// Four-mode simulation with the tritter-embedded lossy splitter; heralds
/// (internal: 0, coherent: 2, ancilla: 0).
HeraldOutcome two_photon_pure_simulated(Cplx alpha, double intensity_gain,
                                        int cutoff, bool pre_truncate = true);

/// Sign-shift amplifier: lossless symmetric first splitter at a sign-shift
/// root.  Output proportional to |0> + ga |1> - (g^2 a^2/sqrt 2) |2> with
/// g = -i t2/r2'; the probability prefactor becomes 0.4.
HeraldOutcome two_photon_sign_shift_closed_form(Cplx alpha,
                                                double intensity_gain,
                                                bool larger_root = true);
HeraldOutcome two_photon_sign_shift_simulated(Cplx alpha,
                                              double intensity_gain,
                                              int cutoff,
                                              bool pre_truncate = true,
                                              bool larger_root = true);

/// Input-swapped device: |2> and vacuum into a lossless first splitter, a
/// 33/33 lossy splitter at the output, one count in each detector, ancilla
/// vacuum.  Reproduces the pure-amplifier output family with
/// g = sqrt(intensity_gain).
HeraldOutcome two_photon_variant_ii(Cplx alpha, double intensity_gain,
                                    int cutoff, bool pre_truncate = true);

/// Complex one- and two-photon gains fitted from a heralded single-mode
/// output: g1 = a1/(alpha a0), g2 = sqrt(2) a2/(alpha^2 a0).  The residual
/// |g2 - g1^2| / (1 + |g1|^2) measures distance from the pure-amplifier
/// family.
struct GainFit {
  Cplx g1;
  Cplx g2;
  double residual = 0.0;
};
GainFit fit_gains(const MultimodeState& output, Cplx alpha);

/// Bounded numerical search for output-splitter parameters (equal squared
/// magnitude, canonical split, phase offset delta) that let the
/// input-swapped device amplify purely.  Scans a coarse grid of valid lossy
/// settings, then refines; lands on t^2 = 1/3, delta = 2pi/3.
struct VariantIISearchResult {
  double t_mag2 = 0.0;
  double delta = 0.0;       // Phi_t - Phi_r
  double fit_residual = 0.0;
  double probability = 0.0;  // success probability at the refined point
};
VariantIISearchResult variant_ii_search(Cplx alpha, double intensity_gain);

/// Smallest pure-gain fit residual reachable by the input-swapped device
/// with a lossless output splitter, over a scan grid; bounded away from
/// zero, mirroring the lossless infeasibility of the direct device.
double variant_ii_lossless_scan_floor(Cplx alpha, double intensity_gain,
                                      int per_axis = 12);

/// Device amplitude gain by variant (the g whose |g|^2 is the configured
/// intensity gain; complex for the sign-shift device).
Cplx device_gain(const AmplifierConfig& config);

/// Closed-form heralded outcome for the scissors variants; n_network is not
/// a single-herald device and is rejected.
HeraldOutcome closed_form_outcome(const AmplifierConfig& config);

/// Full-simulation outcome for the scissors variants.
HeraldOutcome simulated_outcome(const AmplifierConfig& config,
                                bool pre_truncate = true);

}  // namespace scissors

#endif  // SCISSORS_AMPLIFIERS_HPP
