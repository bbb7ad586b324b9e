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

#ifndef SCISSORS_OPTICS_HPP
#define SCISSORS_OPTICS_HPP

#include <array>
#include <span>
#include <vector>

#include "scissors/fock.hpp"

namespace scissors {

enum class PhaseConvention { symmetric, real_t };

/// Two-port coupler with independent coefficients for the two incidence
/// directions: an input photon in the first port picks up t towards the
/// first output and r towards the second; one in the second port picks up
/// t_prime and r_prime.
///
/// Energy conservation forces |t_prime| = |t| and |r_prime| = |r|.  A
/// lossless splitter additionally obeys the unitarity phase relation
/// phi_r + phi_r' +- pi = phi_t + phi_t'; a lossy one only has to keep the
/// phase sums within the bound enforced by make_lossy (no passive device may
/// emit more light than it receives).
struct BeamSplitter {
  Cplx t;
  Cplx t_prime;
  Cplx r;
  Cplx r_prime;

  /// Absorbed fraction 1 - |t|^2 - |r|^2.
  double loss() const;

  /// Phase sums Phi_t = phi_t + phi_t' and Phi_r = phi_r + phi_r'.
  double phi_t_sum() const;
  double phi_r_sum() const;

  /// Overlap of the two columns of the coupling matrix,
  /// conj(t) r' + conj(r) t'.  Its modulus never exceeds loss() for a
  /// physical splitter, with equality exactly when a single loss mode
  /// suffices to restore unitarity.
  Cplx column_overlap() const;

  /// Coupling matrix [out][in] = [[t, r'], [r, t']]; creation operators
  /// transform as a_in^dag -> sum_out M[out][in] b_out^dag.
  std::array<std::array<Cplx, 2>, 2> coupling() const;

  /// Same splitter traversed in the opposite direction (t <-> t',
  /// r <-> r').
  BeamSplitter reversed() const;

  /// Conjugate-transpose coefficients; undoes a lossless splitter.
  BeamSplitter inverse() const;

  /// Throws unless the moduli, loss range, and phase constraints hold.
  void validate() const;
};

/// Lossless splitter with |t|^2 = cos^2(theta).  The symmetric convention
/// sets t = t' = cos(theta), r = r' = i sin(theta); real_t sets
/// t = t' = cos(theta), r = sin(theta), r' = -sin(theta).
BeamSplitter make_lossless(double theta, PhaseConvention convention);

/// Lossy splitter from magnitudes and phase sums, using the canonical phase
/// split phi_t = phi_t' = Phi_t/2, phi_r = phi_r' = Phi_r/2.  Throws when
/// the magnitudes exceed unity or the requested phases violate the passive
/// bound; the error message reports the maximal allowed
/// |cos((Phi_r - Phi_t)/2)|.
BeamSplitter make_lossy(double t_mag, double r_mag, double phi_t_sum,
                        double phi_r_sum);

/// Unitary three-mode coupler (signal 1, signal 2, loss ancilla) whose
/// signal block reproduces a lossy beam splitter.
struct TritterEmbedding {
  std::array<std::array<Cplx, 3>, 3> matrix;  // [out][in]
};

/// Completes bs's coupling matrix to a 3x3 unitary by Gram-Schmidt.  Throws
/// when bs is lossless (nothing to embed), when the signal block has a
/// singular value above one (phases outside the passive bound), or when the
/// loss defect has rank two, in which case one ancilla mode cannot carry it
/// and the splitter is not realizable as a tritter.
TritterEmbedding embed_tritter(const BeamSplitter& bs);

/// Rewrites the coupled modes by substituting creation operators through the
/// matrix u ([out][in], square, one row per coupled mode) and expanding
/// multinomially.  Output components above the cutoff are dropped and their
/// squared norm added to the state's truncation leakage.
MultimodeState apply_coupling(const MultimodeState& state,
                              const std::vector<std::vector<Cplx>>& u,
                              std::span<const int> modes);

/// Applies bs to modes (mode_i, mode_j).  For a lossless splitter this is
/// unitary on the coupled pair; for a lossy one it implements the
/// conditional no-photon-lost branch and shrinks the norm accordingly.  Use
/// apply_lossy_bs for probability-correct lossy evolution.
MultimodeState apply_bs(const MultimodeState& state, const BeamSplitter& bs,
                        int mode_i, int mode_j);

/// Applies the tritter embedding of a lossy bs to (mode_i, mode_j) with
/// mode_ancilla as the loss port.  The ancilla must hold vacuum on input;
/// heralding or tracing it out afterwards is the caller's choice.
MultimodeState apply_lossy_bs(const MultimodeState& state,
                              const BeamSplitter& bs, int mode_i, int mode_j,
                              int mode_ancilla);

}  // namespace scissors

#endif  // SCISSORS_OPTICS_HPP
