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

#include "scissors/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace scissors {

namespace {

constexpr double kNormTol = 1e-10;

void check_finite(Cplx value, const char* what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument(std::string(what) + ": non-finite amplitude");
  }
}

}  // namespace

MultimodeState::MultimodeState(int mode_count, int cutoff)
    : mode_count_(mode_count), cutoff_(cutoff) {
  if (mode_count < 0) throw std::invalid_argument("negative mode count");
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");
  strides_.resize(mode_count);
  std::size_t dim = 1;
  for (int m = mode_count - 1; m >= 0; --m) {
    strides_[m] = dim;
    dim *= static_cast<std::size_t>(cutoff) + 1;
  }
  amps_.assign(dim, Cplx(0.0, 0.0));
}

MultimodeState MultimodeState::vacuum(int mode_count, int cutoff) {
  MultimodeState s(mode_count, cutoff);
  s.amps_[0] = 1.0;
  s.normalized_ = true;
  return s;
}

std::size_t MultimodeState::encode(std::span<const int> occupation) const {
  if (static_cast<int>(occupation.size()) != mode_count_) {
    throw std::invalid_argument("occupation arity does not match mode count");
  }
  std::size_t index = 0;
  for (int m = 0; m < mode_count_; ++m) {
    if (occupation[m] < 0 || occupation[m] > cutoff_) {
      throw std::out_of_range("occupation exceeds cutoff");
    }
    index += static_cast<std::size_t>(occupation[m]) * strides_[m];
  }
  return index;
}

std::vector<int> MultimodeState::decode(std::size_t index) const {
  std::vector<int> occ(mode_count_);
  for (int m = 0; m < mode_count_; ++m) {
    occ[m] = static_cast<int>(index / strides_[m]);
    index %= strides_[m];
  }
  return occ;
}

Cplx MultimodeState::amp(std::span<const int> occupation) const {
  return amps_[encode(occupation)];
}

Cplx MultimodeState::amp(std::initializer_list<int> occupation) const {
  return amp(std::span<const int>(occupation.begin(), occupation.size()));
}

void MultimodeState::set_amp(std::span<const int> occupation, Cplx value) {
  check_finite(value, "set_amp");
  amps_[encode(occupation)] = value;
}

void MultimodeState::set_amp(std::initializer_list<int> occupation,
                             Cplx value) {
  set_amp(std::span<const int>(occupation.begin(), occupation.size()), value);
}

double MultimodeState::norm2() const {
  double total = 0.0;
  for (const Cplx& a : amps_) total += std::norm(a);
  return total;
}

bool MultimodeState::is_zero() const {
  for (const Cplx& a : amps_) {
    if (a != Cplx(0.0, 0.0)) return false;
  }
  return true;
}

MultimodeState MultimodeState::normalized() const {
  double n2 = norm2();
  if (n2 <= 0.0) return *this;
  MultimodeState out = scaled(1.0 / std::sqrt(n2));
  out.normalized_ = true;
  return out;
}

MultimodeState MultimodeState::scaled(Cplx factor) const {
  MultimodeState out = *this;
  for (Cplx& a : out.amps_) a *= factor;
  out.normalized_ = false;
  return out;
}

void MultimodeState::validate() const {
  for (const Cplx& a : amps_) check_finite(a, "state");
  double n2 = norm2();
  if (n2 > 1.0 + kNormTol) {
    throw std::logic_error("state norm exceeds unity: " + std::to_string(n2));
  }
  if (normalized_ && std::abs(n2 - 1.0) > kNormTol) {
    throw std::logic_error("state flagged normalized but has norm^2 " +
                           std::to_string(n2));
  }
}

MultimodeState number_state(int n, int cutoff) {
  if (n < 0 || n > cutoff) {
    throw std::invalid_argument("photon number outside [0, cutoff]");
  }
  MultimodeState s(1, cutoff);
  s.set_amp({n}, 1.0);
  s.mark_normalized(true);
  return s;
}

MultimodeState coherent_truncated(Cplx alpha, int cutoff) {
  check_finite(alpha, "coherent_truncated");
  MultimodeState s(1, cutoff);
  Cplx a = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n <= cutoff; ++n) {
    s.set_amp({n}, a);
    a *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  s.mark_normalized(false);
  return s;
}

MultimodeState tensor(std::span<const MultimodeState> states) {
  if (states.empty()) throw std::invalid_argument("empty tensor product");
  int cutoff = states[0].cutoff();
  int modes = 0;
  bool normalized = true;
  double leakage = 0.0;
  for (const MultimodeState& s : states) {
    if (s.cutoff() != cutoff) {
      throw std::invalid_argument("tensor factors must share one cutoff");
    }
    modes += s.mode_count();
    normalized = normalized && s.is_normalized();
    leakage += s.truncation_leakage();
  }
  MultimodeState out(modes, cutoff);
  std::vector<int> occ(modes);
  // Recursive cartesian walk over factor indices.
  struct Walker {
    std::span<const MultimodeState> states;
    MultimodeState& out;
    std::vector<int>& occ;
    void walk(std::size_t factor, int offset, Cplx acc) {
      if (acc == Cplx(0.0, 0.0)) return;
      if (factor == states.size()) {
        out.set_amp(std::span<const int>(occ.data(), occ.size()), acc);
        return;
      }
      const MultimodeState& s = states[factor];
      for (std::size_t i = 0; i < s.dimension(); ++i) {
        Cplx a = s.amp_at(i);
        if (a == Cplx(0.0, 0.0)) continue;
        std::vector<int> sub = s.decode(i);
        for (int m = 0; m < s.mode_count(); ++m) occ[offset + m] = sub[m];
        walk(factor + 1, offset + s.mode_count(), acc * a);
      }
    }
  } walker{states, out, occ};
  walker.walk(0, 0, Cplx(1.0, 0.0));
  out.mark_normalized(normalized);
  out.accumulate_leakage(leakage);
  return out;
}

MultimodeState tensor(const MultimodeState& a, const MultimodeState& b) {
  const MultimodeState arr[] = {a, b};
  return tensor(std::span<const MultimodeState>(arr, 2));
}

MultimodeState tensor(const MultimodeState& a, const MultimodeState& b,
                      const MultimodeState& c) {
  const MultimodeState arr[] = {a, b, c};
  return tensor(std::span<const MultimodeState>(arr, 3));
}

MultimodeState tensor(const MultimodeState& a, const MultimodeState& b,
                      const MultimodeState& c, const MultimodeState& d) {
  const MultimodeState arr[] = {a, b, c, d};
  return tensor(std::span<const MultimodeState>(arr, 4));
}

Cplx inner_product(const MultimodeState& a, const MultimodeState& b) {
  if (a.mode_count() != b.mode_count() || a.cutoff() != b.cutoff()) {
    throw std::invalid_argument("inner product of mismatched shapes");
  }
  Cplx total(0.0, 0.0);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    total += std::conj(a.amp_at(i)) * b.amp_at(i);
  }
  return total;
}

Projection project_mode(const MultimodeState& state, int mode, int count) {
  if (mode < 0 || mode >= state.mode_count()) {
    throw std::invalid_argument("projection mode out of range");
  }
  if (count < 0 || count > state.cutoff()) {
    throw std::invalid_argument("projection count outside [0, cutoff]");
  }
  Projection result{0.0, MultimodeState(state.mode_count() - 1, state.cutoff()),
                    MultimodeState(state.mode_count() - 1, state.cutoff())};
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    Cplx a = state.amp_at(i);
    if (a == Cplx(0.0, 0.0)) continue;
    std::vector<int> occ = state.decode(i);
    if (occ[mode] != count) continue;
    occ.erase(occ.begin() + mode);
    result.branch.set_amp(std::span<const int>(occ.data(), occ.size()), a);
  }
  result.branch.accumulate_leakage(state.truncation_leakage());
  double branch_n2 = result.branch.norm2();
  double input_n2 = state.norm2();
  result.probability = input_n2 > 0.0 ? branch_n2 / input_n2 : 0.0;
  if (branch_n2 > 0.0) {
    result.conditional = result.branch.normalized();
  } else {
    result.conditional = result.branch;  // flagged zero state
  }
  return result;
}

double mean_photon_number(const MultimodeState& state, int mode) {
  if (mode < 0 || mode >= state.mode_count()) {
    throw std::invalid_argument("mode out of range");
  }
  double weighted = 0.0;
  double n2 = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    double w = std::norm(state.amp_at(i));
    if (w == 0.0) continue;
    n2 += w;
    weighted += w * state.decode(i)[mode];
  }
  return n2 > 0.0 ? weighted / n2 : 0.0;
}

double total_mean_photon(const MultimodeState& state) {
  double weighted = 0.0;
  double n2 = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    double w = std::norm(state.amp_at(i));
    if (w == 0.0) continue;
    n2 += w;
    std::vector<int> occ = state.decode(i);
    int total = 0;
    for (int n : occ) total += n;
    weighted += w * total;
  }
  return n2 > 0.0 ? weighted / n2 : 0.0;
}

MultimodeState with_cutoff(const MultimodeState& state, int cutoff) {
  if (cutoff < state.cutoff()) {
    throw std::invalid_argument("with_cutoff only embeds at a larger cutoff");
  }
  MultimodeState out(state.mode_count(), cutoff);
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    Cplx a = state.amp_at(i);
    if (a == Cplx(0.0, 0.0)) continue;
    std::vector<int> occ = state.decode(i);
    out.set_amp(std::span<const int>(occ.data(), occ.size()), a);
  }
  out.mark_normalized(state.is_normalized());
  out.accumulate_leakage(state.truncation_leakage());
  return out;
}

}  // namespace scissors
