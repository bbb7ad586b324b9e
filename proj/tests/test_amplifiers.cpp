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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "scissors/amplifiers.hpp"
#include "scissors/conditions.hpp"

using namespace scissors;

namespace {

constexpr double kPi = std::numbers::pi;
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

double binomial(int n, int k) {
  double value = 1.0;
  for (int i = 1; i <= k; ++i) value *= static_cast<double>(n - k + i) / i;
  return value;
}

}  // namespace

TEST_CASE("one-photon closed form") {
  SUBCASE("two balanced splitters give unit gain magnitude") {
    BeamSplitter fifty = fifty_fifty_bs1();
    CHECK(std::abs(one_photon_gain(fifty, gain_bs2(1.0))) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("vacuum input heralds to vacuum") {
    HeraldOutcome out =
        one_photon_closed_form(0.0, fifty_fifty_bs1(), gain_bs2(3.0));
    CHECK(std::abs(out.output.amp({0})) == doctest::Approx(1.0));
    CHECK(out.probability ==
          doctest::Approx(std::norm(fifty_fifty_bs1().r * gain_bs2(3.0).r_prime))
              .epsilon(1e-12));
  }
  SUBCASE("probability at |t2/r2'|^2 = 2, |alpha|^2 = 0.1") {
    HeraldOutcome out = one_photon_closed_form(std::sqrt(0.1),
                                               fifty_fifty_bs1(), gain_bs2(2.0));
    double expected = std::exp(-0.1) * 0.5 * (1.0 / 3.0) * 1.2;
    CHECK(out.probability == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("vanishing r1 r2' has no defined gain") {
    BeamSplitter identity = make_lossless(0.0, PhaseConvention::real_t);
    CHECK_THROWS_AS(one_photon_closed_form(0.1, identity, gain_bs2(2.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("one-photon simulation matches the closed form on the grid") {
  double worst = 0.0;
  for (double a2 : kGridAlpha2) {
    for (double g2 : kGridGain2) {
      HeraldOutcome closed = one_photon_closed_form(
          std::sqrt(a2), fifty_fifty_bs1(), gain_bs2(g2));
      HeraldOutcome sim = one_photon_simulated(
          std::sqrt(a2), fifty_fifty_bs1(), gain_bs2(g2), 10);
      worst = std::max(worst, max_amp_diff(closed.raw_branch, sim.raw_branch));
      worst = std::max(worst, std::abs(closed.probability - sim.probability));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("one-photon success herald is blind to the coherent tail") {
  // Photon bookkeeping: the output mode can hold at most the one photon
  // injected at the first splitter, so coherent components above one photon
  // cannot reach the (0, 1) herald.  The full-input branch equals the
  // pre-truncated one exactly.
  for (double a2 : {0.1, 0.5}) {
    HeraldOutcome truncated = one_photon_simulated(
        std::sqrt(a2), fifty_fifty_bs1(), gain_bs2(4.0), 12, true);
    HeraldOutcome full = one_photon_simulated(
        std::sqrt(a2), fifty_fifty_bs1(), gain_bs2(4.0), 12, false);
    CHECK(max_amp_diff(truncated.raw_branch, full.raw_branch) < 1e-12);
    CHECK(std::abs(truncated.probability - full.probability) < 1e-12);
  }
}

TEST_CASE("n-network") {
  SUBCASE("N = 1 reduces to the one-photon device") {
    for (double g2 : kGridGain2) {
      NNetworkResult net = n_network(std::sqrt(0.2), g2, 1, 6);
      HeraldOutcome one = one_photon_closed_form(std::sqrt(0.2),
                                                 fifty_fifty_bs1(),
                                                 gain_bs2(g2));
      CHECK(std::abs(net.probability - one.probability) < 1e-12);
      CHECK(max_amp_diff(net.output, one.output) < 1e-12);
    }
  }
  SUBCASE("N = 2 probability at |alpha|^2 = 0.1, g^2 = 2") {
    NNetworkResult net = n_network(std::sqrt(0.1), 2.0, 2, 6);
    double expected = std::exp(-0.1) / 36.0 * 1.21;
    CHECK(net.probability == doctest::Approx(expected).epsilon(1e-12));
    CHECK(net.probability == doctest::Approx(0.0304).epsilon(1e-3));
  }
  SUBCASE("recombined output matches the binomial closed form") {
    for (int n = 1; n <= 5; ++n) {
      for (double g2 : {1.0, 4.0}) {
        Cplx alpha = std::sqrt(0.3);
        NNetworkResult net = n_network(alpha, g2, n, 8);
        Cplx g_alpha = std::sqrt(g2) * alpha;
        // Arm k of the recombined branch carries C(N,k) (g a / N)^k sqrt(k!).
        MultimodeState expected(1, 8);
        for (int k = 0; k <= n; ++k) {
          Cplx amp = binomial(n, k) * std::sqrt(std::tgamma(k + 1.0));
          for (int q = 0; q < k; ++q) amp *= g_alpha / static_cast<double>(n);
          expected.set_amp({k}, amp);
        }
        expected = expected.normalized();
        CHECK(max_amp_diff(net.output, expected) < 1e-12);
      }
    }
  }
  SUBCASE("invalid arm count") {
    CHECK_THROWS_AS(n_network(0.1, 2.0, 0, 4), std::invalid_argument);
  }
}

TEST_CASE("two-photon pure amplifier closed form") {
  SUBCASE("default first splitter satisfies the pure-gain condition") {
    CHECK(std::abs(pure_gain_residual(pure_amp_bs1())) < 1e-12);
  }
  SUBCASE("vacuum input") {
    for (double g2 : kGridGain2) {
      HeraldOutcome out = two_photon_pure_closed_form(0.0, g2);
      double expected = (2.0 / 9.0) / ((1.0 + g2) * (1.0 + g2));
      CHECK(out.probability == doctest::Approx(expected).epsilon(1e-12));
      CHECK(std::abs(out.output.amp({0})) == doctest::Approx(1.0));
    }
  }
  SUBCASE("probability formula and the quoted value at g^2 = 2") {
    double a2 = 0.1, g2 = 2.0;
    HeraldOutcome out = two_photon_pure_closed_form(std::sqrt(a2), g2);
    double x = g2 * a2;
    double expected = (2.0 / 9.0) * std::exp(-a2) /
                      ((1.0 + g2) * (1.0 + g2)) *
                      (1.0 + x + 0.5 * x * x);
    CHECK(out.probability == doctest::Approx(expected).epsilon(1e-12));
    CHECK(out.probability == doctest::Approx(0.0273).epsilon(2e-3));
  }
  SUBCASE("one- and two-photon gains are both g") {
    double g2 = 5.0;
    Cplx alpha = std::sqrt(0.2);
    HeraldOutcome out = two_photon_pure_closed_form(alpha, g2);
    Cplx a0 = out.raw_branch.amp({0});
    Cplx a1 = out.raw_branch.amp({1});
    Cplx a2 = out.raw_branch.amp({2});
    Cplx g(std::sqrt(g2), 0.0);
    CHECK(std::abs(a1 / a0 - g * alpha) < 1e-12);
    CHECK(std::abs(a2 / a0 - g * g * alpha * alpha / std::sqrt(2.0)) < 1e-12);
  }
}

TEST_CASE("two-photon pure simulation matches the closed form on the grid") {
  double worst = 0.0;
  for (double a2 : kGridAlpha2) {
    for (double g2 : kGridGain2) {
      HeraldOutcome closed = two_photon_pure_closed_form(std::sqrt(a2), g2);
      HeraldOutcome sim = two_photon_pure_simulated(std::sqrt(a2), g2, 10);
      worst = std::max(worst, max_amp_diff(closed.raw_branch, sim.raw_branch));
      worst = std::max(worst, std::abs(closed.probability - sim.probability));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("heralding one count in each detector does not amplify") {
  // With single photons in both input ports the (1,1) detector pattern
  // leaves a state outside the amplified family.
  int cutoff = 8;
  double g2 = 2.0;
  Cplx alpha = std::sqrt(0.2);
  MultimodeState in = tensor(number_state(1, cutoff), number_state(1, cutoff),
                             with_cutoff(coherent_truncated(alpha, 2), cutoff),
                             number_state(0, cutoff));
  MultimodeState s = apply_lossy_bs(in, pure_amp_bs1(), 0, 1, 3);
  s = apply_bs(s, gain_bs2(g2).reversed(), 1, 2);
  MultimodeState branch = project_mode(s, 3, 0).branch;
  branch = project_mode(branch, 2, 1).branch;
  branch = project_mode(branch, 1, 1).branch;
  REQUIRE(branch.norm2() > 0.0);
  GainFit fit = fit_gains(branch, alpha);
  CHECK(fit.residual > 1e-2);
}

TEST_CASE("complete herald set of the two-photon pure device sums to one") {
  int cutoff = 10;
  for (double a2 : {0.1, 0.5}) {
    MultimodeState in = tensor(number_state(1, cutoff), number_state(1, cutoff),
                               coherent_truncated(std::sqrt(a2), cutoff),
                               number_state(0, cutoff));
    double input_norm2 = in.norm2();
    MultimodeState s = apply_lossy_bs(in, pure_amp_bs1(), 0, 1, 3);
    s = apply_bs(s, gain_bs2(4.0).reversed(), 1, 2);
    double total = s.norm2() / input_norm2;  // heralds partition the basis
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    // A lost photon must show up on the ancilla: with two input photons and
    // one third absorbed each, the no-loss weight is 5/9.
    double kept = 0.0;
    for (int c = 1; c <= cutoff; ++c) {
      kept += project_mode(s, 3, c).probability;
    }
    CHECK(kept == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
  }
}

TEST_CASE("sign-shift amplifier") {
  SUBCASE("prefactor 0.4 from the transmittance roots") {
    auto [hi, lo] = sign_shift_roots();
    CHECK(2.0 * hi * (1.0 - hi) == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(2.0 * lo * (1.0 - lo) == doctest::Approx(0.4).epsilon(1e-14));
  }
  SUBCASE("vacuum input") {
    for (double g2 : {1.0, 6.0}) {
      HeraldOutcome out = two_photon_sign_shift_closed_form(0.0, g2);
      double expected = 0.4 / ((1.0 + g2) * (1.0 + g2));
      CHECK(out.probability == doctest::Approx(expected).epsilon(1e-12));
      CHECK(std::abs(out.output.amp({0})) == doctest::Approx(1.0));
    }
  }
  SUBCASE("two-photon amplitude carries the sign flip") {
    double g2 = 3.0;
    Cplx alpha = std::sqrt(0.2);
    HeraldOutcome out = two_photon_sign_shift_closed_form(alpha, g2);
    Cplx a0 = out.raw_branch.amp({0});
    Cplx a1 = out.raw_branch.amp({1});
    Cplx a2 = out.raw_branch.amp({2});
    Cplx g_tilde = a1 / (a0 * alpha);
    CHECK(std::abs(g_tilde - Cplx(0.0, -std::sqrt(g2))) < 1e-12);
    Cplx expected_two =
        -g_tilde * g_tilde * alpha * alpha / std::sqrt(2.0) * a0;
    CHECK(std::abs(a2 - expected_two) < 1e-12);
  }
  SUBCASE("simulation matches the closed form on the grid, both roots") {
    double worst = 0.0;
    for (bool larger : {true, false}) {
      for (double a2 : kGridAlpha2) {
        for (double g2 : kGridGain2) {
          HeraldOutcome closed =
              two_photon_sign_shift_closed_form(std::sqrt(a2), g2, larger);
          HeraldOutcome sim = two_photon_sign_shift_simulated(
              std::sqrt(a2), g2, 10, true, larger);
          worst = std::max(worst,
                           max_amp_diff(closed.raw_branch, sim.raw_branch));
          worst = std::max(worst,
                           std::abs(closed.probability - sim.probability));
        }
      }
    }
    CHECK(worst < 1e-10);
  }
  SUBCASE("sign-shift succeeds 1.8 times as often as the pure device") {
    for (double a2 : kGridAlpha2) {
      for (double g2 : kGridGain2) {
        double p_pure =
            two_photon_pure_closed_form(std::sqrt(a2), g2).probability;
        double p_sign =
            two_photon_sign_shift_closed_form(std::sqrt(a2), g2).probability;
        CHECK(p_sign / p_pure == doctest::Approx(1.8).epsilon(1e-12));
        CHECK(p_pure <= p_sign);
      }
    }
  }
}

TEST_CASE("input-swapped device") {
  SUBCASE("vacuum input heralds to vacuum") {
    HeraldOutcome out = two_photon_variant_ii(0.0, 2.0, 6);
    CHECK(std::abs(out.output.amp({0})) == doctest::Approx(1.0));
  }
  SUBCASE("simulation matches the exchanged-role closed form") {
    // Same algebra as the direct device with the splitters swapped: the
    // heralded amplitudes are sqrt2 e^{-|a|^2/2} [ r1^2 t2' r2' |0>
    // + a t1 r1 (t2 t2' + r2 r2') |1> + (a^2/sqrt2) t1^2 r2 t2 |2> ].
    double worst = 0.0;
    for (double a2 : kGridAlpha2) {
      for (double g2 : kGridGain2) {
        Cplx alpha = std::sqrt(a2);
        HeraldOutcome sim = two_photon_variant_ii(alpha, g2, 8);
        BeamSplitter bs1 = make_lossless(std::atan2(1.0, std::sqrt(g2)),
                                         PhaseConvention::real_t);
        BeamSplitter bs2 = pure_amp_bs1();
        Cplx pref = std::sqrt(2.0) * std::exp(-0.5 * a2);
        MultimodeState expected(1, 2);
        expected.set_amp({0}, pref * bs1.r * bs1.r * bs2.t_prime * bs2.r_prime);
        expected.set_amp({1}, pref * alpha * bs1.t * bs1.r *
                                  (bs2.t * bs2.t_prime + bs2.r * bs2.r_prime));
        expected.set_amp({2}, pref * alpha * alpha / std::sqrt(2.0) * bs1.t *
                                  bs1.t * bs2.r * bs2.t);
        worst = std::max(worst, max_amp_diff(sim.raw_branch, expected));
        worst = std::max(worst,
                         std::abs(sim.probability - expected.norm2()));
      }
    }
    CHECK(worst < 1e-10);
  }
  SUBCASE("success probability equals the direct pure device") {
    for (double a2 : {0.1, 0.3}) {
      for (double g2 : {1.0, 4.0}) {
        double p_ii = two_photon_variant_ii(std::sqrt(a2), g2, 8).probability;
        double p_direct =
            two_photon_pure_closed_form(std::sqrt(a2), g2).probability;
        CHECK(p_ii == doctest::Approx(p_direct).epsilon(1e-12));
      }
    }
  }
  SUBCASE("fitted gains recover pure amplification") {
    for (double g2 : {1.0, 2.0, 6.0}) {
      HeraldOutcome out = two_photon_variant_ii(std::sqrt(0.1), g2, 8);
      GainFit fit = fit_gains(out.output, std::sqrt(0.1));
      CHECK(fit.residual < 1e-10);
      CHECK(std::abs(fit.g1 - Cplx(std::sqrt(g2), 0.0)) < 1e-10);
    }
  }
  SUBCASE("parameter search lands on the 33/33 boundary point") {
    VariantIISearchResult best = variant_ii_search(std::sqrt(0.1), 2.0);
    CHECK(best.fit_residual < 1e-10);
    CHECK(best.t_mag2 == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
    CHECK(best.delta == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-5));
    CHECK(best.probability ==
          doctest::Approx(
              two_photon_pure_closed_form(std::sqrt(0.1), 2.0).probability)
              .epsilon(1e-9));
  }
  SUBCASE("no lossless output splitter reaches pure gain") {
    double floor = variant_ii_lossless_scan_floor(std::sqrt(0.1), 2.0, 10);
    CHECK(floor > 0.1);
  }
}

TEST_CASE("two-photon success heralds are blind to the coherent tail") {
  for (double a2 : {0.1, 0.5}) {
    HeraldOutcome truncated =
        two_photon_pure_simulated(std::sqrt(a2), 4.0, 10, true);
    HeraldOutcome full =
        two_photon_pure_simulated(std::sqrt(a2), 4.0, 10, false);
    CHECK(max_amp_diff(truncated.raw_branch, full.raw_branch) < 1e-12);
    CHECK(std::abs(truncated.probability - full.probability) < 1e-12);
  }
}

TEST_CASE("herald outcome bookkeeping") {
  HeraldOutcome out = two_photon_pure_simulated(std::sqrt(0.2), 3.0, 8);
  CHECK(out.probability ==
        doctest::Approx(out.raw_branch.norm2()).epsilon(1e-12));
  CHECK(out.output.norm2() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.herald.at(1) == 0);
  CHECK(out.herald.at(2) == 2);
  CHECK(out.herald.at(3) == 0);
  double scale = std::sqrt(out.probability);
  CHECK(max_amp_diff(out.output.scaled(scale), out.raw_branch) < 1e-12);
}
