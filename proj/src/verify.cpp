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

#include "scissors/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scissors/amplifiers.hpp"
#include "scissors/conditions.hpp"
#include "scissors/metrics.hpp"

namespace scissors {

namespace {

constexpr double kGridAlpha2[] = {0.02, 0.1, 0.2, 0.3, 0.5};
constexpr double kGridGain2[] = {1.0, 2.0, 4.0, 6.0, 10.0};

double max_amp_diff(const MultimodeState& a, const MultimodeState& b) {
  int n = std::max(a.cutoff(), b.cutoff());
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    Cplx av = i <= a.cutoff() ? a.amp({i}) : Cplx(0.0, 0.0);
    Cplx bv = i <= b.cutoff() ? b.amp({i}) : Cplx(0.0, 0.0);
    worst = std::max(worst, std::abs(av - bv));
  }
  return worst;
}

double outcome_diff(const HeraldOutcome& closed, const HeraldOutcome& sim) {
  return std::max(max_amp_diff(closed.raw_branch, sim.raw_branch),
                  std::abs(closed.probability - sim.probability));
}

CheckResult grid_equivalence(const std::string& name, AmplifierVariant variant,
                             int cutoff, bool wrong_herald) {
  CheckResult check{name, false, 0.0, ""};
  for (double a2 : kGridAlpha2) {
    for (double g2 : kGridGain2) {
      AmplifierConfig config{variant, std::sqrt(a2), g2, 2, cutoff};
      HeraldOutcome closed = closed_form_outcome(config);
      HeraldOutcome sim = simulated_outcome(config);
      if (wrong_herald && variant == AmplifierVariant::two_photon_pure) {
        // Herald one count in each detector instead: the branch is not the
        // amplified family and cannot match the closed form.
        MultimodeState in = tensor(
            number_state(1, cutoff), number_state(1, cutoff),
            with_cutoff(coherent_truncated(config.alpha, 2), cutoff),
            number_state(0, cutoff));
        MultimodeState s = apply_lossy_bs(in, pure_amp_bs1(), 0, 1, 3);
        s = apply_bs(s, gain_bs2(g2).reversed(), 1, 2);
        MultimodeState branch = project_mode(s, 3, 0).branch;
        branch = project_mode(branch, 2, 1).branch;
        branch = project_mode(branch, 1, 1).branch;
        sim.raw_branch = branch;
        sim.probability = branch.norm2();
      }
      check.max_residual = std::max(check.max_residual, outcome_diff(closed, sim));
    }
  }
  check.pass = check.max_residual < 1e-10;
  return check;
}

CheckResult n_network_consistency() {
  CheckResult check{"n-network N=1 matches the one-photon device", false, 0.0,
                    ""};
  for (double a2 : kGridAlpha2) {
    for (double g2 : kGridGain2) {
      NNetworkResult net = n_network(std::sqrt(a2), g2, 1, 6);
      HeraldOutcome one = one_photon_closed_form(std::sqrt(a2),
                                                 fifty_fifty_bs1(),
                                                 gain_bs2(g2));
      double d = std::abs(net.probability - one.probability);
      d = std::max(d, max_amp_diff(net.output, one.output));
      check.max_residual = std::max(check.max_residual, d);
    }
  }
  check.pass = check.max_residual < 1e-10;
  return check;
}

CheckResult herald_completeness(int cutoff) {
  CheckResult check{"herald probabilities sum to one", false, 0.0, ""};
  for (double a2 : {0.1, 0.5}) {
    for (double g2 : {1.0, 6.0}) {
      MultimodeState in = tensor(number_state(1, cutoff),
                                 number_state(1, cutoff),
                                 coherent_truncated(std::sqrt(a2), cutoff),
                                 number_state(0, cutoff));
      double input_norm2 = in.norm2();
      MultimodeState s = apply_lossy_bs(in, pure_amp_bs1(), 0, 1, 3);
      s = apply_bs(s, gain_bs2(g2).reversed(), 1, 2);
      // Group the final amplitudes by detector/ancilla counts.
      double total = 0.0;
      for (std::size_t i = 0; i < s.dimension(); ++i) {
        total += std::norm(s.amp_at(i));
      }
      double leak_adjusted = total / input_norm2;
      check.max_residual =
          std::max(check.max_residual, std::abs(leak_adjusted - 1.0));
    }
  }
  check.pass = check.max_residual < 1e-8;
  return check;
}

CheckResult norm_preservation(int cutoff) {
  CheckResult check{"lossless splitters preserve the norm", false, 0.0, ""};
  for (double a2 : kGridAlpha2) {
    MultimodeState in = tensor(coherent_truncated(std::sqrt(a2), cutoff),
                               coherent_truncated(0.3, cutoff));
    double before = in.norm2();
    MultimodeState out =
        apply_bs(in, make_lossless(0.7, PhaseConvention::symmetric), 0, 1);
    double after = out.norm2() + out.truncation_leakage();
    check.max_residual =
        std::max(check.max_residual, std::abs(after - before));
  }
  check.pass = check.max_residual < 1e-10;
  return check;
}

CheckResult tritter_unitarity() {
  CheckResult check{"tritter embeddings are unitary", false, 0.0, ""};
  // Phase-bound boundary family: |cos(delta/2)| = (1 - 2 t^2) / (2 t^2).
  for (double t2 : {0.26, 0.30, 1.0 / 3.0, 0.40, 0.45}) {
    double c = std::min(1.0, (1.0 - 2.0 * t2) / (2.0 * t2));
    double delta = 2.0 * std::acos(c);
    TritterEmbedding tri =
        embed_tritter(make_lossy(std::sqrt(t2), std::sqrt(t2), delta, 0.0));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Cplx dot(0.0, 0.0);
        for (int k = 0; k < 3; ++k) {
          dot += std::conj(tri.matrix[k][i]) * tri.matrix[k][j];
        }
        double expected = i == j ? 1.0 : 0.0;
        check.max_residual =
            std::max(check.max_residual, std::abs(dot - Cplx(expected, 0.0)));
      }
    }
  }
  check.pass = check.max_residual < 1e-10;
  return check;
}

CheckResult mean_photon_inequality() {
  CheckResult check{"lossy splitters never gain mean photons", false, 0.0, ""};
  for (double t2 : {0.05, 0.15, 0.25, 1.0 / 3.0, 0.45}) {
    double bound = lossy_phase_bound(t2, t2);
    for (double frac : {0.0, 0.5, 1.0}) {
      double delta = 2.0 * std::acos(std::min(1.0, bound * frac));
      BeamSplitter bs = make_lossy(std::sqrt(t2), std::sqrt(t2), delta, 0.0);
      double ratio = max_photon_ratio_over_phases(bs);
      check.max_residual =
          std::max(check.max_residual, std::max(0.0, ratio - 1.0));
    }
  }
  check.pass = check.max_residual < 1e-8;
  return check;
}

CheckResult coherent_ratio_structure() {
  CheckResult check{"pure amplifier output keeps coherent amplitude ratios",
                    false, 0.0, ""};
  for (double a2 : kGridAlpha2) {
    for (double g2 : kGridGain2) {
      HeraldOutcome out = two_photon_pure_closed_form(std::sqrt(a2), g2);
      Cplx a0 = out.raw_branch.amp({0});
      Cplx a1 = out.raw_branch.amp({1});
      Cplx a2c = out.raw_branch.amp({2});
      Cplx lhs = a2c / a0;
      Cplx rhs = (a1 / a0) * (a1 / a0) / std::sqrt(2.0);
      check.max_residual = std::max(check.max_residual, std::abs(lhs - rhs));
    }
  }
  check.pass = check.max_residual < 1e-10;
  return check;
}

CheckResult variant_ii_fit(int cutoff) {
  CheckResult check{"input-swapped device admits a pure-gain solution", false,
                    0.0, ""};
  for (double g2 : {1.0, 4.0}) {
    HeraldOutcome out = two_photon_variant_ii(std::sqrt(0.1), g2, cutoff);
    GainFit fit = fit_gains(out.output, std::sqrt(0.1));
    check.max_residual = std::max(check.max_residual, fit.residual);
    check.max_residual = std::max(
        check.max_residual, std::abs(fit.g1 - Cplx(std::sqrt(g2), 0.0)));
  }
  check.pass = check.max_residual < 1e-10;
  return check;
}

CheckResult leakage_probe(const VerifyOptions& options) {
  CheckResult check{"truncation leakage stays below 1e-8", false, 0.0, ""};
  HeraldOutcome out = two_photon_pure_simulated(std::sqrt(options.alpha2),
                                                4.0, options.cutoff, false);
  check.max_residual = out.raw_branch.truncation_leakage();
  check.pass = check.max_residual < 1e-8;
  if (!check.pass) {
    check.note = "WARNING: raise the cutoff; dropped squared norm " +
                 std::to_string(check.max_residual);
  }
  return check;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> checks;
  checks.push_back(grid_equivalence("one-photon closed form vs simulation",
                                    AmplifierVariant::one_photon,
                                    options.cutoff, false));
  checks.push_back(grid_equivalence(
      "two-photon pure closed form vs simulation",
      AmplifierVariant::two_photon_pure, options.cutoff,
      options.inject_wrong_herald));
  checks.push_back(grid_equivalence("sign-shift closed form vs simulation",
                                    AmplifierVariant::two_photon_sign_shift,
                                    options.cutoff, false));
  checks.push_back(n_network_consistency());
  checks.push_back(variant_ii_fit(options.cutoff));
  checks.push_back(herald_completeness(options.cutoff));
  checks.push_back(norm_preservation(options.cutoff));
  checks.push_back(tritter_unitarity());
  checks.push_back(mean_photon_inequality());
  checks.push_back(coherent_ratio_structure());
  checks.push_back(leakage_probe(options));
  return checks;
}

}  // namespace scissors
