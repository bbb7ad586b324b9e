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

#include "scissors/amplifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "scissors/conditions.hpp"

namespace scissors {

namespace {

constexpr double kPi = std::numbers::pi;

MultimodeState coherent_input(Cplx alpha, int cutoff, int pre_truncate_at) {
  if (pre_truncate_at >= 0 && pre_truncate_at < cutoff) {
    return with_cutoff(coherent_truncated(alpha, pre_truncate_at), cutoff);
  }
  return coherent_truncated(alpha, cutoff);
}

HeraldOutcome make_outcome(std::map<int, int> herald,
                           MultimodeState raw_branch) {
  HeraldOutcome out{std::move(herald), raw_branch.norm2(),
                    raw_branch.normalized(), std::move(raw_branch)};
  if (out.probability <= 0.0) out.output.mark_normalized(false);
  return out;
}

}  // namespace

BeamSplitter fifty_fifty_bs1() {
  return make_lossless(kPi / 4.0, PhaseConvention::real_t);
}

BeamSplitter gain_bs2(double intensity_gain) {
  if (!(intensity_gain > 0.0)) {
    throw std::invalid_argument("intensity gain must be positive");
  }
  double theta = std::atan2(1.0, std::sqrt(intensity_gain));
  // Reversing the real_t splitter puts the positive reflection coefficient
  // on the primed side, so the device gain t/r' comes out real positive.
  return make_lossless(theta, PhaseConvention::real_t).reversed();
}

BeamSplitter pure_amp_bs1() {
  double mag = std::sqrt(1.0 / 3.0);
  return make_lossy(mag, mag, 2.0 * kPi / 3.0, 0.0);
}

BeamSplitter sign_shift_bs1(bool larger_root) {
  auto [hi, lo] = sign_shift_roots();
  double t2 = larger_root ? hi : lo;
  return make_lossless(std::acos(std::sqrt(t2)), PhaseConvention::symmetric);
}

Cplx one_photon_gain(const BeamSplitter& bs1, const BeamSplitter& bs2) {
  Cplx denom = bs1.r * bs2.r_prime;
  if (std::abs(denom) < 1e-300) {
    throw std::invalid_argument("one-photon gain undefined: r1 r2' = 0");
  }
  return bs1.t * bs2.t / denom;
}

HeraldOutcome one_photon_closed_form(Cplx alpha, const BeamSplitter& bs1,
                                     const BeamSplitter& bs2) {
  Cplx g = one_photon_gain(bs1, bs2);  // throws on r1 r2' = 0
  Cplx prefactor = std::exp(-0.5 * std::norm(alpha)) * bs1.r * bs2.r_prime;
  MultimodeState raw(1, 1);
  raw.set_amp({0}, prefactor);
  raw.set_amp({1}, prefactor * g * alpha);
  return make_outcome({{1, 0}, {2, 1}}, std::move(raw));
}

HeraldOutcome one_photon_simulated(Cplx alpha, const BeamSplitter& bs1,
                                   const BeamSplitter& bs2, int cutoff,
                                   bool pre_truncate) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  MultimodeState in =
      tensor(number_state(1, cutoff), number_state(0, cutoff),
             coherent_input(alpha, cutoff, pre_truncate ? 1 : -1));
  MultimodeState s = apply_bs(in, bs1, 0, 1);
  s = apply_bs(s, bs2.reversed(), 1, 2);
  MultimodeState branch = project_mode(s, 2, 1).branch;
  branch = project_mode(branch, 1, 0).branch;
  return make_outcome({{1, 0}, {2, 1}}, std::move(branch));
}

NNetworkResult n_network(Cplx alpha, double intensity_gain, int n_arms,
                         int cutoff) {
  if (n_arms < 1) throw std::invalid_argument("n_arms must be >= 1");
  if (!(intensity_gain > 0.0)) {
    throw std::invalid_argument("intensity gain must be positive");
  }
  const double g2 = intensity_gain;
  const double a2 = std::norm(alpha);
  const double x = g2 * a2;
  const int n = n_arms;

  NNetworkResult result;
  result.probability = std::exp(-a2) * std::pow(2.0, -n) *
                       std::pow(1.0 + g2, -n) * std::pow(1.0 + x / n, n);

  // Each arm holds the normalized one-photon amplifier output for input
  // alpha / sqrt(N).
  Cplx beta = std::sqrt(g2) * alpha / std::sqrt(static_cast<double>(n));
  int arm_cutoff = std::max(1, n);
  MultimodeState arm(1, arm_cutoff);
  double arm_norm = std::sqrt(1.0 + std::norm(beta));
  arm.set_amp({0}, 1.0 / arm_norm);
  arm.set_amp({1}, beta / arm_norm);
  arm.mark_normalized(true);

  std::vector<MultimodeState> arms(static_cast<std::size_t>(n), arm);
  MultimodeState s = tensor(std::span<const MultimodeState>(arms));

  // Fold arm k+1 into the symmetric combination held in mode 0; the angle
  // keeps every arm's weight on mode 0 equal.
  for (int k = 1; k < n; ++k) {
    double theta = std::atan(1.0 / std::sqrt(static_cast<double>(k)));
    s = apply_bs(s, make_lossless(theta, PhaseConvention::real_t), k, 0);
  }
  for (int m = n - 1; m >= 1; --m) {
    s = project_mode(s, m, 0).conditional;
  }
  result.output = s.normalized();
  if (cutoff > arm_cutoff) {
    result.output = with_cutoff(result.output, cutoff);
  }
  return result;
}

HeraldOutcome two_photon_closed_form(Cplx alpha, const BeamSplitter& bs1,
                                     const BeamSplitter& bs2) {
  Cplx pref = std::sqrt(2.0) * std::exp(-0.5 * std::norm(alpha));
  Cplx amp0 = pref * bs1.t_prime * bs1.r * bs2.r_prime * bs2.r_prime;
  Cplx amp1 = pref * alpha * (bs1.t * bs1.t_prime + bs1.r * bs1.r_prime) *
              bs2.t * bs2.r_prime;
  Cplx amp2 = alpha * alpha * bs1.r_prime * bs1.t * bs2.t * bs2.t;
  MultimodeState raw(1, 2);
  raw.set_amp({0}, amp0);
  raw.set_amp({1}, amp1);
  raw.set_amp({2}, amp2);
  return make_outcome({{1, 0}, {2, 2}}, std::move(raw));
}

HeraldOutcome two_photon_pure_closed_form(Cplx alpha, double intensity_gain) {
  HeraldOutcome out =
      two_photon_closed_form(alpha, pure_amp_bs1(), gain_bs2(intensity_gain));
  out.herald[3] = 0;  // loss ancilla of the tritter realization
  return out;
}

HeraldOutcome two_photon_pure_simulated(Cplx alpha, double intensity_gain,
                                        int cutoff, bool pre_truncate) {
  if (cutoff < 2) throw std::invalid_argument("cutoff must be >= 2");
  MultimodeState in =
      tensor(number_state(1, cutoff), number_state(1, cutoff),
             coherent_input(alpha, cutoff, pre_truncate ? 2 : -1),
             number_state(0, cutoff));
  MultimodeState s = apply_lossy_bs(in, pure_amp_bs1(), 0, 1, 3);
  s = apply_bs(s, gain_bs2(intensity_gain).reversed(), 1, 2);
  MultimodeState branch = project_mode(s, 3, 0).branch;
  branch = project_mode(branch, 2, 2).branch;
  branch = project_mode(branch, 1, 0).branch;
  HeraldOutcome out = make_outcome({{1, 0}, {2, 2}, {3, 0}}, std::move(branch));
  return out;
}

HeraldOutcome two_photon_sign_shift_closed_form(Cplx alpha,
                                                double intensity_gain,
                                                bool larger_root) {
  return two_photon_closed_form(alpha, sign_shift_bs1(larger_root),
                                gain_bs2(intensity_gain));
}

HeraldOutcome two_photon_sign_shift_simulated(Cplx alpha,
                                              double intensity_gain,
                                              int cutoff, bool pre_truncate,
                                              bool larger_root) {
  if (cutoff < 2) throw std::invalid_argument("cutoff must be >= 2");
  MultimodeState in =
      tensor(number_state(1, cutoff), number_state(1, cutoff),
             coherent_input(alpha, cutoff, pre_truncate ? 2 : -1));
  MultimodeState s = apply_bs(in, sign_shift_bs1(larger_root), 0, 1);
  s = apply_bs(s, gain_bs2(intensity_gain).reversed(), 1, 2);
  MultimodeState branch = project_mode(s, 2, 2).branch;
  branch = project_mode(branch, 1, 0).branch;
  return make_outcome({{1, 0}, {2, 2}}, std::move(branch));
}

HeraldOutcome two_photon_variant_ii(Cplx alpha, double intensity_gain,
                                    int cutoff, bool pre_truncate) {
  if (cutoff < 2) throw std::invalid_argument("cutoff must be >= 2");
  if (!(intensity_gain > 0.0)) {
    throw std::invalid_argument("intensity gain must be positive");
  }
  // Lossless input splitter tuned so t1/r1 = sqrt(intensity_gain); the
  // lossy 33/33 splitter moves to the output side.
  double theta = std::atan2(1.0, std::sqrt(intensity_gain));
  BeamSplitter bs1 = make_lossless(theta, PhaseConvention::real_t);
  MultimodeState in =
      tensor(number_state(2, cutoff), number_state(0, cutoff),
             coherent_input(alpha, cutoff, pre_truncate ? 2 : -1),
             number_state(0, cutoff));
  MultimodeState s = apply_bs(in, bs1, 0, 1);
  s = apply_lossy_bs(s, pure_amp_bs1().reversed(), 1, 2, 3);
  MultimodeState branch = project_mode(s, 3, 0).branch;
  branch = project_mode(branch, 2, 1).branch;
  branch = project_mode(branch, 1, 1).branch;
  return make_outcome({{1, 1}, {2, 1}, {3, 0}}, std::move(branch));
}

GainFit fit_gains(const MultimodeState& output, Cplx alpha) {
  if (output.mode_count() != 1 || output.cutoff() < 2) {
    throw std::invalid_argument("fit_gains needs a single mode with >= 2 "
                                "photon support");
  }
  Cplx a0 = output.amp({0});
  if (std::abs(a0) < 1e-300 || std::abs(alpha) < 1e-300) {
    throw std::invalid_argument("fit_gains: vacuum amplitude or alpha is 0");
  }
  GainFit fit;
  fit.g1 = output.amp({1}) / (alpha * a0);
  fit.g2 = std::sqrt(2.0) * output.amp({2}) / (alpha * alpha * a0);
  fit.residual = std::abs(fit.g2 - fit.g1 * fit.g1) / (1.0 + std::norm(fit.g1));
  return fit;
}

namespace {

// Pure-gain fit residual of the input-swapped device for a given output
// splitter, evaluated on the conditional no-photon-lost branch (three
// modes, so it works for any passive splitter, on or off the tritter
// manifold).
double variant_ii_fit_residual(Cplx alpha, double intensity_gain,
                               const BeamSplitter& bs2) {
  const int cutoff = 4;
  double theta = std::atan2(1.0, std::sqrt(intensity_gain));
  BeamSplitter bs1 = make_lossless(theta, PhaseConvention::real_t);
  MultimodeState in = tensor(number_state(2, cutoff), number_state(0, cutoff),
                             coherent_input(alpha, cutoff, 2));
  MultimodeState s = apply_bs(in, bs1, 0, 1);
  s = apply_bs(s, bs2.reversed(), 1, 2);
  MultimodeState branch = project_mode(s, 2, 1).branch;
  branch = project_mode(branch, 1, 1).branch;
  if (branch.norm2() <= 0.0) return 1e6;
  return fit_gains(branch, alpha).residual;
}

}  // namespace

VariantIISearchResult variant_ii_search(Cplx alpha, double intensity_gain) {
  if (std::abs(alpha) < 1e-12) {
    throw std::invalid_argument("variant_ii_search needs alpha != 0");
  }
  VariantIISearchResult best;
  best.fit_residual = 1e6;
  // Coarse grid over valid lossy settings (equal squared magnitudes,
  // canonical split).  Residual-equivalent solutions form a line in t^2, so
  // ties go to the higher success probability, i.e. the largest t^2.
  for (int it = 1; it <= 48; ++it) {
    double t2 = 0.01 + (0.49 - 0.01) * it / 48.0;
    for (int id = 0; id <= 48; ++id) {
      double delta = kPi * id / 48.0;
      double bound = lossy_phase_bound(t2, t2);
      if (std::abs(std::cos(0.5 * delta)) > bound + 1e-12) continue;
      BeamSplitter bs2 = make_lossy(std::sqrt(t2), std::sqrt(t2), delta, 0.0);
      double res = variant_ii_fit_residual(alpha, intensity_gain, bs2);
      bool better = res < best.fit_residual - 1e-12;
      bool tie = std::abs(res - best.fit_residual) <= 1e-12 &&
                 t2 > best.t_mag2;
      if (better || tie) {
        best.fit_residual = res;
        best.t_mag2 = t2;
        best.delta = delta;
      }
    }
  }
  // Local refinement by coordinate descent on (t^2, delta).
  double span_t = 0.02, span_d = kPi / 24.0;
  for (int round = 0; round < 160; ++round) {
    bool improved = false;
    for (double dt : {-span_t, span_t}) {
      double t2 = best.t_mag2 + dt;
      if (t2 <= 0.0 || t2 > 0.4999) continue;
      double bound = lossy_phase_bound(t2, t2);
      if (std::abs(std::cos(0.5 * best.delta)) > bound + 1e-12) continue;
      BeamSplitter bs2 =
          make_lossy(std::sqrt(t2), std::sqrt(t2), best.delta, 0.0);
      double res = variant_ii_fit_residual(alpha, intensity_gain, bs2);
      if (res < best.fit_residual ||
          (res <= best.fit_residual + 1e-14 && t2 > best.t_mag2)) {
        best.fit_residual = res;
        best.t_mag2 = t2;
        improved = true;
      }
    }
    for (double dd : {-span_d, span_d}) {
      double delta = best.delta + dd;
      if (delta < 0.0 || delta > kPi) continue;
      double bound = lossy_phase_bound(best.t_mag2, best.t_mag2);
      if (std::abs(std::cos(0.5 * delta)) > bound + 1e-12) continue;
      BeamSplitter bs2 = make_lossy(std::sqrt(best.t_mag2),
                                    std::sqrt(best.t_mag2), delta, 0.0);
      double res = variant_ii_fit_residual(alpha, intensity_gain, bs2);
      if (res < best.fit_residual) {
        best.fit_residual = res;
        best.delta = delta;
        improved = true;
      }
    }
    if (!improved) {
      span_t *= 0.5;
      span_d *= 0.5;
    }
    if (span_t < 1e-12 && span_d < 1e-12) break;
  }
  // Success probability at the refined point, via the full tritter path
  // when the refined splitter saturates the phase bound (it does at the
  // optimum t^2 = 1/3, delta = 2pi/3).
  BeamSplitter bs2 = make_lossy(std::sqrt(best.t_mag2), std::sqrt(best.t_mag2),
                                best.delta, 0.0);
  if (std::abs(std::abs(bs2.column_overlap()) - bs2.loss()) < 1e-5) {
    best.probability =
        two_photon_variant_ii(alpha, intensity_gain, 6).probability;
  }
  return best;
}

double variant_ii_lossless_scan_floor(Cplx alpha, double intensity_gain,
                                      int per_axis) {
  double floor = std::numeric_limits<double>::infinity();
  for (int it = 1; it < per_axis; ++it) {
    double theta = it * (kPi / 2.0) / per_axis;
    for (int ip = 0; ip < per_axis; ++ip) {
      double phi_t = 2.0 * kPi * ip / per_axis;
      for (int iq = 0; iq < per_axis; ++iq) {
        double phi_r = 2.0 * kPi * iq / per_axis;
        double phi_r_prime = phi_t - phi_r + kPi;  // phi_t' = 0
        BeamSplitter bs2{std::polar(std::cos(theta), phi_t), std::cos(theta),
                         std::polar(std::sin(theta), phi_r),
                         std::polar(std::sin(theta), phi_r_prime)};
        floor = std::min(floor,
                         variant_ii_fit_residual(alpha, intensity_gain, bs2));
      }
    }
  }
  return floor;
}

Cplx device_gain(const AmplifierConfig& config) {
  double g = std::sqrt(config.intensity_gain);
  switch (config.variant) {
    case AmplifierVariant::one_photon:
    case AmplifierVariant::n_network:
    case AmplifierVariant::two_photon_pure:
    case AmplifierVariant::two_photon_variant_ii:
      return g;
    case AmplifierVariant::two_photon_sign_shift:
      return Cplx(0.0, -1.0) * g;  // phase factor from the symmetric splitter
  }
  throw std::invalid_argument("unknown amplifier variant");
}

HeraldOutcome closed_form_outcome(const AmplifierConfig& config) {
  switch (config.variant) {
    case AmplifierVariant::one_photon:
      return one_photon_closed_form(config.alpha, fifty_fifty_bs1(),
                                    gain_bs2(config.intensity_gain));
    case AmplifierVariant::two_photon_pure:
      return two_photon_pure_closed_form(config.alpha, config.intensity_gain);
    case AmplifierVariant::two_photon_sign_shift:
      return two_photon_sign_shift_closed_form(config.alpha,
                                               config.intensity_gain);
    case AmplifierVariant::two_photon_variant_ii:
      // The heralded branch coincides with the pure-amplifier family; the
      // simulated path is the ground truth for this device.
      return two_photon_variant_ii(config.alpha, config.intensity_gain,
                                   std::max(config.cutoff, 4));
    case AmplifierVariant::n_network:
      throw std::invalid_argument(
          "n_network is not a single-herald device; use n_network()");
  }
  throw std::invalid_argument("unknown amplifier variant");
}

HeraldOutcome simulated_outcome(const AmplifierConfig& config,
                                bool pre_truncate) {
  switch (config.variant) {
    case AmplifierVariant::one_photon:
      return one_photon_simulated(config.alpha, fifty_fifty_bs1(),
                                  gain_bs2(config.intensity_gain),
                                  config.cutoff, pre_truncate);
    case AmplifierVariant::two_photon_pure:
      return two_photon_pure_simulated(config.alpha, config.intensity_gain,
                                       config.cutoff, pre_truncate);
    case AmplifierVariant::two_photon_sign_shift:
      return two_photon_sign_shift_simulated(
          config.alpha, config.intensity_gain, config.cutoff, pre_truncate);
    case AmplifierVariant::two_photon_variant_ii:
      return two_photon_variant_ii(config.alpha, config.intensity_gain,
                                   config.cutoff, pre_truncate);
    case AmplifierVariant::n_network:
      throw std::invalid_argument(
          "n_network is not a single-herald device; use n_network()");
  }
  throw std::invalid_argument("unknown amplifier variant");
}

}  // namespace scissors
