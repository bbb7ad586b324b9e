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

#ifndef SCISSORS_FOCK_HPP
#define SCISSORS_FOCK_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace scissors {

using Cplx = std::complex<double>;

/// Pure state of one or more bosonic modes in the photon-number basis with a
/// shared per-mode cutoff.
///
/// Amplitudes are stored densely over all occupation tuples (n_1,...,n_m)
/// with n_i <= cutoff.  States may be sub-normalized: a conditional branch of
/// a measurement keeps its raw weight so that herald probabilities can be
/// read off directly as squared norms.  A zero-mode state is a scalar and
/// arises when the last mode of a state is projected out.
///
/// States are immutable values in practice: every operation below returns a
/// new state, so parallel evaluation over parameter grids is safe.
class MultimodeState {
 public:
  MultimodeState(int mode_count, int cutoff);
  MultimodeState() : MultimodeState(0, 0) {}

  static MultimodeState vacuum(int mode_count, int cutoff);

  int mode_count() const { return mode_count_; }
  int cutoff() const { return cutoff_; }
  std::size_t dimension() const { return amps_.size(); }

  Cplx amp(std::span<const int> occupation) const;
  Cplx amp(std::initializer_list<int> occupation) const;
  void set_amp(std::span<const int> occupation, Cplx value);
  void set_amp(std::initializer_list<int> occupation, Cplx value);

  Cplx amp_at(std::size_t index) const { return amps_[index]; }
  void set_amp_at(std::size_t index, Cplx value) { amps_[index] = value; }
  std::vector<int> decode(std::size_t index) const;
  std::size_t encode(std::span<const int> occupation) const;

  /// Sum of squared moduli over all stored amplitudes.
  double norm2() const;

  /// True when the state is known to have unit norm.
  bool is_normalized() const { return normalized_; }
  void mark_normalized(bool flag) { normalized_ = flag; }

  /// True when every amplitude vanishes, e.g. the conditional state of a
  /// zero-probability herald.
  bool is_zero() const;

  /// Unit-norm copy.  A zero state is returned unchanged (still flagged
  /// unnormalized) so that parameter sweeps never abort on dead branches.
  MultimodeState normalized() const;

  MultimodeState scaled(Cplx factor) const;

  /// Total squared norm pushed above the cutoff by mode-coupling operations
  /// applied so far in this state's history.
  double truncation_leakage() const { return leakage_; }
  void accumulate_leakage(double mass) { leakage_ += mass; }

  /// Checks the representation invariants: finite amplitudes, squared norm
  /// not exceeding one, and a truthful normalization flag.  Throws on
  /// violation.
  void validate() const;

 private:
  int mode_count_;
  int cutoff_;
  std::vector<std::size_t> strides_;
  std::vector<Cplx> amps_;
  bool normalized_ = false;
  double leakage_ = 0.0;
};

/// |n> of a single mode.
MultimodeState number_state(int n, int cutoff);

/// Coherent state truncated at `cutoff` photons: amplitude of |n> is
/// exp(-|alpha|^2/2) alpha^n / sqrt(n!).  The Gaussian prefactor is kept, so
/// the state is sub-normalized; branch probabilities computed downstream then
/// match the analytic success probabilities without correction factors.
MultimodeState coherent_truncated(Cplx alpha, int cutoff);

/// Tensor product.  All factors must share one cutoff; mode indices of the
/// result follow the argument order.
MultimodeState tensor(std::span<const MultimodeState> states);
MultimodeState tensor(const MultimodeState& a, const MultimodeState& b);
MultimodeState tensor(const MultimodeState& a, const MultimodeState& b,
                      const MultimodeState& c);
MultimodeState tensor(const MultimodeState& a, const MultimodeState& b,
                      const MultimodeState& c, const MultimodeState& d);

/// <a|b>, conjugate-linear in the first argument.
Cplx inner_product(const MultimodeState& a, const MultimodeState& b);

struct Projection {
  /// Squared norm of the selected branch divided by the squared norm of the
  /// input, so probabilities over all counts sum to one even for
  /// sub-normalized inputs.
  double probability = 0.0;
  /// Renormalized branch with the measured mode removed; a flagged zero
  /// state when the branch has no weight.
  MultimodeState conditional;
  /// Unnormalized branch (mode removed), for composing sequential heralds.
  MultimodeState branch;
};

/// Projects one mode onto a definite photon count.  The measured mode is
/// removed from the returned states; when projecting several modes, project
/// the highest index first so the remaining indices stay put.
Projection project_mode(const MultimodeState& state, int mode, int count);

/// Mean photon number of one mode, per unit norm of the state.
double mean_photon_number(const MultimodeState& state, int mode);

/// Mean total photon number over all modes, per unit norm.
double total_mean_photon(const MultimodeState& state);

/// Same amplitudes embedded at a larger cutoff.
MultimodeState with_cutoff(const MultimodeState& state, int cutoff);

}  // namespace scissors

#endif  // SCISSORS_FOCK_HPP
