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

#include "scissors/optics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace scissors {

namespace {

constexpr double kCoeffTol = 1e-12;
constexpr double kPhaseTol = 1e-9;
// Tolerance on |column_overlap| - loss for treating a lossy splitter as
// exactly tritter-embeddable; chosen so the completed matrix stays unitary
// to 1e-10.
constexpr double kRankTol = 1e-11;

double factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(64);
    t[0] = 1.0;
    for (int i = 1; i < 64; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

// All ways of distributing `total` photons over k output slots.
void compositions(int total, int k, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(current.size()) == k - 1) {
    current.push_back(total);
    emit(current);
    current.pop_back();
    return;
  }
  for (int take = 0; take <= total; ++take) {
    current.push_back(take);
    compositions(total - take, k, current, emit);
    current.pop_back();
  }
}

using Transition = std::vector<std::pair<std::vector<int>, Cplx>>;

// Amplitudes <p|U|n> of the induced map on occupation vectors:
// sqrt(prod p_i! prod n_j!) * sum over distribution matrices m of
// prod u[i][j]^m_ij / m_ij!.
Transition expand_occupancy(const std::vector<std::vector<Cplx>>& u,
                            const std::vector<int>& n) {
  const int k = static_cast<int>(n.size());
  std::map<std::vector<int>, Cplx> acc;
  acc[std::vector<int>(k, 0)] = 1.0;
  std::vector<int> scratch;
  for (int j = 0; j < k; ++j) {
    std::map<std::vector<int>, Cplx> next;
    compositions(n[j], k, scratch, [&](const std::vector<int>& m) {
      Cplx factor = 1.0;
      for (int i = 0; i < k; ++i) {
        for (int q = 0; q < m[i]; ++q) factor *= u[i][j];
        factor /= factorial(m[i]);
      }
      if (factor == Cplx(0.0, 0.0)) return;
      for (const auto& [p, c] : acc) {
        std::vector<int> p2 = p;
        for (int i = 0; i < k; ++i) p2[i] += m[i];
        next[p2] += c * factor;
      }
    });
    acc = std::move(next);
  }
  double n_fact = 1.0;
  for (int j = 0; j < k; ++j) n_fact *= factorial(n[j]);
  Transition out;
  out.reserve(acc.size());
  for (const auto& [p, c] : acc) {
    double p_fact = 1.0;
    for (int i = 0; i < k; ++i) p_fact *= factorial(p[i]);
    out.emplace_back(p, c * std::sqrt(p_fact * n_fact));
  }
  return out;
}

double wrap_phase_distance_from_pi(double delta) {
  double d = std::remainder(delta, 2.0 * std::numbers::pi);
  return std::abs(std::abs(d) - std::numbers::pi);
}

}  // namespace

double BeamSplitter::loss() const {
  return 1.0 - std::norm(t) - std::norm(r);
}

double BeamSplitter::phi_t_sum() const {
  return std::arg(t) + std::arg(t_prime);
}

double BeamSplitter::phi_r_sum() const {
  return std::arg(r) + std::arg(r_prime);
}

Cplx BeamSplitter::column_overlap() const {
  return std::conj(t) * r_prime + std::conj(r) * t_prime;
}

std::array<std::array<Cplx, 2>, 2> BeamSplitter::coupling() const {
  return {{{t, r_prime}, {r, t_prime}}};
}

BeamSplitter BeamSplitter::reversed() const {
  return BeamSplitter{t_prime, t, r_prime, r};
}

BeamSplitter BeamSplitter::inverse() const {
  return BeamSplitter{std::conj(t), std::conj(t_prime), std::conj(r_prime),
                      std::conj(r)};
}

void BeamSplitter::validate() const {
  for (Cplx c : {t, t_prime, r, r_prime}) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("beam splitter: non-finite coefficient");
    }
  }
  if (std::abs(std::abs(t_prime) - std::abs(t)) > kCoeffTol ||
      std::abs(std::abs(r_prime) - std::abs(r)) > kCoeffTol) {
    throw std::invalid_argument(
        "beam splitter: |t'| != |t| or |r'| != |r|");
  }
  double l = loss();
  if (l < -kCoeffTol || l > 1.0 + kCoeffTol) {
    throw std::invalid_argument("beam splitter: loss outside [0, 1]");
  }
  double tr = std::abs(t) * std::abs(r);
  if (l <= kCoeffTol) {
    // Unitarity pins the phase sums: Phi_r +- pi = Phi_t, checked only when
    // both coefficients carry a meaningful phase.
    if (tr > 1e-9 &&
        wrap_phase_distance_from_pi(phi_t_sum() - phi_r_sum()) > kPhaseTol) {
      throw std::invalid_argument(
          "lossless beam splitter: phase sums violate unitarity");
    }
  } else {
    if (std::abs(column_overlap()) > l + 1e-10) {
      throw std::invalid_argument(
          "lossy beam splitter: phases violate the passive bound");
    }
  }
}

BeamSplitter make_lossless(double theta, PhaseConvention convention) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
    throw std::invalid_argument("theta outside [0, pi/2]");
  }
  double c = std::cos(theta);
  double s = std::sin(theta);
  BeamSplitter bs;
  switch (convention) {
    case PhaseConvention::symmetric:
      bs = BeamSplitter{c, c, Cplx(0.0, s), Cplx(0.0, s)};
      break;
    case PhaseConvention::real_t:
      bs = BeamSplitter{c, c, s, -s};
      break;
    default:
      throw std::invalid_argument("unknown phase convention");
  }
  bs.validate();
  return bs;
}

BeamSplitter make_lossy(double t_mag, double r_mag, double phi_t_sum,
                        double phi_r_sum) {
  if (t_mag < 0.0 || r_mag < 0.0) {
    throw std::invalid_argument("negative coefficient magnitude");
  }
  double l = 1.0 - t_mag * t_mag - r_mag * r_mag;
  if (l < -kCoeffTol) {
    throw std::invalid_argument("coefficient magnitudes exceed unity");
  }
  double tr = t_mag * r_mag;
  if (tr > 0.0) {
    double requested = std::abs(std::cos(0.5 * (phi_r_sum - phi_t_sum)));
    double allowed = std::min(1.0, std::max(0.0, l) / (2.0 * tr));
    if (requested > allowed + 1e-12) {
      throw std::invalid_argument(
          "phases violate the passive bound: |cos((Phi_r - Phi_t)/2)| = " +
          std::to_string(requested) + " but at most " +
          std::to_string(allowed) + " is allowed at this loss");
    }
  }
  Cplx et = std::polar(t_mag, 0.5 * phi_t_sum);
  Cplx er = std::polar(r_mag, 0.5 * phi_r_sum);
  BeamSplitter bs{et, et, er, er};
  bs.validate();
  return bs;
}

TritterEmbedding embed_tritter(const BeamSplitter& bs) {
  double l = bs.loss();
  if (l <= kCoeffTol) {
    throw std::invalid_argument(
        "embed_tritter: splitter is lossless, nothing to embed");
  }
  Cplx c01 = bs.column_overlap();
  double gap = std::abs(c01) - l;
  if (gap > 1e-12) {
    throw std::invalid_argument(
        "embed_tritter: signal block has a singular value above one "
        "(phases outside the passive bound)");
  }
  if (gap < -kRankTol) {
    throw std::invalid_argument(
        "embed_tritter: loss defect has rank two; a single ancilla mode "
        "cannot complete this splitter to a unitary (the phase bound must "
        "be saturated)");
  }
  double w0 = std::sqrt(l);
  Cplx w1 = -c01 / w0;
  TritterEmbedding tri;
  tri.matrix[0] = {bs.t, bs.r_prime, 0.0};
  tri.matrix[1] = {bs.r, bs.t_prime, 0.0};
  tri.matrix[2] = {w0, w1, 0.0};
  // Third column: Gram-Schmidt a basis vector against the two signal
  // columns.
  for (int seed = 2; seed >= 0; --seed) {
    std::array<Cplx, 3> v{0.0, 0.0, 0.0};
    v[seed] = 1.0;
    for (int col = 0; col < 2; ++col) {
      Cplx overlap(0.0, 0.0);
      for (int row = 0; row < 3; ++row) {
        overlap += std::conj(tri.matrix[row][col]) * v[row];
      }
      for (int row = 0; row < 3; ++row) {
        v[row] -= overlap * tri.matrix[row][col];
      }
    }
    double n2 = 0.0;
    for (const Cplx& x : v) n2 += std::norm(x);
    if (n2 > 1e-6) {
      double inv = 1.0 / std::sqrt(n2);
      for (int row = 0; row < 3; ++row) tri.matrix[row][2] = v[row] * inv;
      return tri;
    }
  }
  throw std::logic_error("embed_tritter: Gram-Schmidt found no completion");
}

MultimodeState apply_coupling(const MultimodeState& state,
                              const std::vector<std::vector<Cplx>>& u,
                              std::span<const int> modes) {
  const int k = static_cast<int>(modes.size());
  if (static_cast<int>(u.size()) != k) {
    throw std::invalid_argument("coupling matrix size does not match modes");
  }
  for (const auto& row : u) {
    if (static_cast<int>(row.size()) != k) {
      throw std::invalid_argument("coupling matrix is not square");
    }
  }
  std::vector<bool> seen(state.mode_count(), false);
  for (int m : modes) {
    if (m < 0 || m >= state.mode_count()) {
      throw std::invalid_argument("coupled mode out of range");
    }
    if (seen[m]) throw std::invalid_argument("coupled modes must be distinct");
    seen[m] = true;
  }

  MultimodeState out(state.mode_count(), state.cutoff());
  std::map<std::vector<int>, Transition> cache;
  std::map<std::vector<int>, Cplx> overflow;
  std::vector<int> key(k);
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    Cplx a = state.amp_at(idx);
    if (a == Cplx(0.0, 0.0)) continue;
    std::vector<int> occ = state.decode(idx);
    for (int q = 0; q < k; ++q) key[q] = occ[modes[q]];
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, expand_occupancy(u, key)).first;
    }
    for (const auto& [p, coeff] : it->second) {
      Cplx contribution = a * coeff;
      if (contribution == Cplx(0.0, 0.0)) continue;
      bool fits = true;
      for (int q = 0; q < k; ++q) {
        occ[modes[q]] = p[q];
        if (p[q] > state.cutoff()) fits = false;
      }
      if (fits) {
        std::size_t j = out.encode(std::span<const int>(occ.data(), occ.size()));
        out.set_amp_at(j, out.amp_at(j) + contribution);
      } else {
        overflow[occ] += contribution;
      }
    }
  }
  double leaked = 0.0;
  for (const auto& [occ, amp] : overflow) leaked += std::norm(amp);
  out.accumulate_leakage(state.truncation_leakage() + leaked);
  out.mark_normalized(state.is_normalized() &&
                      std::abs(out.norm2() - 1.0) < 1e-12);
  return out;
}

MultimodeState apply_bs(const MultimodeState& state, const BeamSplitter& bs,
                        int mode_i, int mode_j) {
  if (mode_i == mode_j) {
    throw std::invalid_argument("apply_bs: modes must differ");
  }
  auto m = bs.coupling();
  std::vector<std::vector<Cplx>> u = {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
  const int modes[] = {mode_i, mode_j};
  return apply_coupling(state, u, std::span<const int>(modes, 2));
}

MultimodeState apply_lossy_bs(const MultimodeState& state,
                              const BeamSplitter& bs, int mode_i, int mode_j,
                              int mode_ancilla) {
  if (mode_ancilla == mode_i || mode_ancilla == mode_j) {
    throw std::invalid_argument("apply_lossy_bs: ancilla must be distinct");
  }
  if (bs.loss() <= kCoeffTol) {
    throw std::invalid_argument("apply_lossy_bs: splitter is lossless");
  }
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    if (state.amp_at(idx) == Cplx(0.0, 0.0)) continue;
    if (state.decode(idx)[mode_ancilla] != 0) {
      throw std::invalid_argument(
          "apply_lossy_bs: ancilla mode must hold vacuum on input");
    }
  }
  TritterEmbedding tri = embed_tritter(bs);
  std::vector<std::vector<Cplx>> u(3, std::vector<Cplx>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) u[i][j] = tri.matrix[i][j];
  }
  const int modes[] = {mode_i, mode_j, mode_ancilla};
  return apply_coupling(state, u, std::span<const int>(modes, 3));
}

}  // namespace scissors
