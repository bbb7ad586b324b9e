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

#ifndef SCISSORS_CONDITIONS_HPP
#define SCISSORS_CONDITIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "scissors/optics.hpp"

namespace scissors {

struct ConditionReport {
  bool feasible = false;
  double residual = 0.0;
  std::vector<double> solutions;
  std::string notes;
};

/// Residual of the equal one- and two-photon gain condition for a splitter
/// feeding the two-photon scissors: (t t' + r r')^2 - t t' r r'.  Vanishes
/// exactly when |t t'| = |r r'| and the phase sums differ by +-2pi/3, which
/// no lossless splitter can reach.  Returned as a complex value so sweeps
/// can plot distance to feasibility.
Cplx pure_gain_residual(const BeamSplitter& bs);

/// Discriminant of x^2 - x + 1, the reduced form of the pure-gain condition
/// under the lossless phase relation.  Equals -3: no real ratio
/// |r r'| / |t t'| satisfies it.
double lossless_condition_discriminant();

/// Certifies that no lossless splitter allows pure two-photon gain: records
/// the quadratic's discriminant and scans at least `scan_points` lossless
/// parameter sets for the smallest |pure_gain_residual|.
ConditionReport lossless_infeasibility_proof(int scan_points = 10000);

/// Transmittances solving 5 u^2 - 5 u + 1 = 0, larger root first:
/// ((5 + sqrt 5)/10, (5 - sqrt 5)/10).  These are the lossless splitter
/// settings of the sign-shift amplifier.
std::pair<double, double> sign_shift_roots();

/// Maximal allowed |cos((Phi_r - Phi_t)/2)| for a lossy splitter with the
/// given squared magnitudes: min(1, (1 - t^2 - r^2) / (2 |t| |r|)).  For the
/// equal-magnitude case this is (1 - 2 t^2) / (2 t^2); t^2 = 1/4 frees the
/// phase entirely and t^2 = 1/2 pins it to the lossless value.  Throws when
/// t_mag2 + r_mag2 > 1.
double lossy_phase_bound(double t_mag2, double r_mag2);

/// Minimum loss a splitter needs before the +-2pi/3 phase offset of the
/// pure two-photon amplifier becomes reachable.  Solved numerically by
/// inverting lossy_phase_bound at cos(pi/3); comes out at 1/3.
double min_loss_for_pure_amp();

/// Largest ratio of output to input mean photon number over relative phases
/// of two equal-magnitude coherent inputs sent through the splitter.  A
/// physical splitter never exceeds one; the bound is saturated exactly on
/// the phase-bound boundary.
double max_photon_ratio_over_phases(const BeamSplitter& bs,
                                    int grid_points = 4096);

}  // namespace scissors

#endif  // SCISSORS_CONDITIONS_HPP
