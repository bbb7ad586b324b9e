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

#include "scissors/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "scissors/conditions.hpp"
#include "scissors/metrics.hpp"
#include "scissors/verify.hpp"

namespace scissors::cli {

namespace {

std::string fmt9(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

void write_atomically(const std::string& path, const std::string& text) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open output path: " + path);
    }
    out << text;
    if (!out) {
      throw std::runtime_error("write failed: " + path);
    }
  }
  std::filesystem::rename(tmp, target);
}

void validate_grid(const RunSpec& spec) {
  if (!(spec.gain_min > 0.0)) {
    throw std::invalid_argument("gain-min must be positive");
  }
  if (spec.gain_max < spec.gain_min) {
    throw std::invalid_argument("gain-max must be >= gain-min");
  }
  if (spec.points < 2) {
    throw std::invalid_argument("points must be >= 2");
  }
}

std::vector<double> make_grid(const RunSpec& spec) {
  std::vector<double> grid(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        spec.gain_min +
        (spec.gain_max - spec.gain_min) * i / (spec.points - 1);
  }
  return grid;
}

}  // namespace

AmplifierVariant parse_variant(const std::string& name) {
  static const std::map<std::string, AmplifierVariant> table = {
      {"one-photon", AmplifierVariant::one_photon},
      {"n-network", AmplifierVariant::n_network},
      {"two-photon-pure", AmplifierVariant::two_photon_pure},
      {"two-photon-sign-shift", AmplifierVariant::two_photon_sign_shift},
      {"two-photon-variant-ii", AmplifierVariant::two_photon_variant_ii},
  };
  auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown amplifier variant: " + name);
  }
  return it->second;
}

std::string curve_csv(const RunSpec& spec) {
  validate_grid(spec);
  AmplifierConfig config;
  config.variant = parse_variant(spec.amplifier);
  config.alpha = std::sqrt(spec.alpha2);
  config.n_arms = spec.n_arms;
  config.cutoff = spec.cutoff;

  std::string text = spec.gain_axis == GainAxis::intensity
                         ? "gain_intensity"
                         : "gain_amplitude";
  text += ",fidelity,defect,log_recip_defect,probability,utility\n";
  for (double gval : make_grid(spec)) {
    double g2 = spec.gain_axis == GainAxis::intensity ? gval : gval * gval;
    MeritPoint mp = merit_point(config, g2, spec.sign_flipped_target);
    text += fmt9(gval);
    text += ',';
    text += fmt9(mp.fidelity);
    text += ',';
    text += fmt9(mp.defect);
    text += ',';
    text += fmt9(mp.log_recip_defect);
    text += ',';
    text += fmt9(mp.probability);
    text += ',';
    text += fmt9(mp.utility);
    text += '\n';
  }
  return text;
}

std::string herald_table_csv(const RunSpec& spec) {
  AmplifierVariant variant = parse_variant(spec.amplifier);
  if (variant == AmplifierVariant::n_network) {
    throw std::invalid_argument(
        "herald-table needs a single-herald device; n-network is not one");
  }
  AmplifierConfig config{variant, std::sqrt(spec.alpha2), 1.0, spec.n_arms,
                         spec.cutoff};
  double g2 = spec.gain_axis == GainAxis::intensity
                  ? spec.gain_min
                  : spec.gain_min * spec.gain_min;
  config.intensity_gain = g2;

  // Full coherent input: the outcome table partitions all the probability.
  const int cutoff = spec.cutoff;
  MultimodeState in(0, 0);
  bool has_ancilla = false;
  switch (variant) {
    case AmplifierVariant::one_photon: {
      in = tensor(number_state(1, cutoff), number_state(0, cutoff),
                  coherent_truncated(config.alpha, cutoff));
      in = apply_bs(in, fifty_fifty_bs1(), 0, 1);
      in = apply_bs(in, gain_bs2(g2).reversed(), 1, 2);
      break;
    }
    case AmplifierVariant::two_photon_pure: {
      has_ancilla = true;
      in = tensor(number_state(1, cutoff), number_state(1, cutoff),
                  coherent_truncated(config.alpha, cutoff),
                  number_state(0, cutoff));
      in = apply_lossy_bs(in, pure_amp_bs1(), 0, 1, 3);
      in = apply_bs(in, gain_bs2(g2).reversed(), 1, 2);
      break;
    }
    case AmplifierVariant::two_photon_sign_shift: {
      in = tensor(number_state(1, cutoff), number_state(1, cutoff),
                  coherent_truncated(config.alpha, cutoff));
      in = apply_bs(in, sign_shift_bs1(), 0, 1);
      in = apply_bs(in, gain_bs2(g2).reversed(), 1, 2);
      break;
    }
    case AmplifierVariant::two_photon_variant_ii: {
      has_ancilla = true;
      double theta = std::atan2(1.0, std::sqrt(g2));
      in = tensor(number_state(2, cutoff), number_state(0, cutoff),
                  coherent_truncated(config.alpha, cutoff),
                  number_state(0, cutoff));
      in = apply_bs(in, make_lossless(theta, PhaseConvention::real_t), 0, 1);
      in = apply_lossy_bs(in, pure_amp_bs1().reversed(), 1, 2, 3);
      break;
    }
    default:
      throw std::invalid_argument("unsupported variant for herald-table");
  }

  // Group amplitudes by detector/ancilla counts.
  struct Row {
    double weight = 0.0;
    MultimodeState conditional;
  };
  std::map<std::vector<int>, Row> rows;
  double input_norm2 = 0.0;
  for (std::size_t i = 0; i < in.dimension(); ++i) {
    Cplx a = in.amp_at(i);
    if (a == Cplx(0.0, 0.0)) continue;
    input_norm2 += std::norm(a);
    std::vector<int> occ = in.decode(i);
    std::vector<int> key(occ.begin() + 1, occ.end());
    auto [it, inserted] = rows.try_emplace(key);
    if (inserted) it->second.conditional = MultimodeState(1, cutoff);
    it->second.weight += std::norm(a);
    it->second.conditional.set_amp({occ[0]}, a);
  }

  Cplx g_alpha = device_gain(config) * config.alpha;
  int ref_cutoff = reference_cutoff_for(std::norm(g_alpha));

  std::string text = "n_det1,n_det2,n_loss,probability,overlap_with_target\n";
  for (auto& [key, row] : rows) {
    double probability = row.weight / input_norm2;
    double overlap = 0.0;
    if (row.weight > 0.0) {
      overlap = fidelity_vs_amplified_coherent(row.conditional.normalized(),
                                               g_alpha, ref_cutoff);
    }
    text += std::to_string(key[0]);
    text += ',';
    text += std::to_string(key[1]);
    text += ',';
    text += std::to_string(has_ancilla ? key[2] : 0);
    text += ',';
    text += fmt9(probability);
    text += ',';
    text += fmt9(overlap);
    text += '\n';
  }
  return text;
}

int cmd_curve(const RunSpec& spec, std::ostream& err) {
  try {
    std::string text = curve_csv(spec);
    if (spec.output_path.empty()) {
      throw std::invalid_argument("curve needs an output path (-o)");
    }
    write_atomically(spec.output_path, text);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_solve(std::ostream& out) {
  auto [hi, lo] = sign_shift_roots();
  char line[160];
  std::snprintf(line, sizeof line,
                "sign-shift splitter transmittance roots |t1|^2: %.6f and "
                "%.6f\n",
                hi, lo);
  out << line;
  std::snprintf(line, sizeof line,
                "lossless pure-gain quadratic x^2 - x + 1: discriminant %g "
                "(no real solution)\n",
                lossless_condition_discriminant());
  out << line;
  std::snprintf(line, sizeof line,
                "minimum splitter loss for pure two-photon gain: %.6f\n",
                min_loss_for_pure_amp());
  out << line;
  out << "phase bound, max |cos((Phi_r - Phi_t)/2)| by |t|^2:\n";
  for (double t2 : {0.25, 1.0 / 3.0, 0.5}) {
    std::snprintf(line, sizeof line, "  |t|^2 = %.6f -> %.6f\n", t2,
                  lossy_phase_bound(t2, t2));
    out << line;
  }
  return kExitOk;
}

int cmd_verify(const RunSpec& spec, std::ostream& out) {
  VerifyOptions options;
  options.cutoff = spec.cutoff;
  options.alpha2 = spec.alpha2;
  options.inject_wrong_herald = spec.inject_wrong_herald;
  bool all_pass = true;
  for (const CheckResult& check : run_verification(options)) {
    char line[256];
    std::snprintf(line, sizeof line, "%s %s (max residual %.3g)\n",
                  check.pass ? "PASS" : "FAIL", check.name.c_str(),
                  check.max_residual);
    out << line;
    if (!check.note.empty()) out << "  " << check.note << "\n";
    all_pass = all_pass && check.pass;
  }
  out << (all_pass ? "verification passed\n" : "verification FAILED\n");
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_herald_table(const RunSpec& spec, std::ostream& err) {
  try {
    std::string text = herald_table_csv(spec);
    if (spec.output_path.empty()) {
      throw std::invalid_argument("herald-table needs an output path (-o)");
    }
    write_atomically(spec.output_path, text);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "scissors: quantum-scissors noiseless-amplifier simulator and "
      "figure-data generator"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string gain_axis = "intensity";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--amplifier", spec.amplifier,
                    "one-photon | n-network | two-photon-pure | "
                    "two-photon-sign-shift | two-photon-variant-ii");
    cmd->add_option("--alpha2", spec.alpha2, "input |alpha|^2");
    cmd->add_option("--gain-min", spec.gain_min, "low end of the gain grid");
    cmd->add_option("--gain-max", spec.gain_max, "high end of the gain grid");
    cmd->add_option("--points", spec.points, "grid points");
    cmd->add_option("--n,--n-arms", spec.n_arms, "arm count for n-network");
    cmd->add_option("--cutoff", spec.cutoff, "per-mode photon cutoff");
    cmd->add_option("-o,--output", spec.output_path, "output CSV path");
    cmd->add_option("--gain-axis", gain_axis,
                    "intensity (g^2) or amplitude (g)")
        ->check(CLI::IsMember({"intensity", "amplitude"}));
    cmd->set_config("--config", "", "key=value config file");
    return cmd;
  };

  CLI::App* curve = add_common(app.add_subcommand(
      "curve", "write merit-curve CSV (fidelity, probability, utility)"));
  curve->add_flag("--sign-flipped-target", spec.sign_flipped_target,
                  "score against the target with negated two-photon "
                  "amplitude");
  add_common(app.add_subcommand(
      "herald-table", "write per-herald probabilities and overlaps"));
  CLI::App* verify = add_common(app.add_subcommand(
      "verify", "run closed-form/simulation equivalences and invariants"));
  verify->add_flag("--inject-wrong-herald", spec.inject_wrong_herald,
                   "negative control: herald (1,1) on the two-photon pure "
                   "device");
  app.add_subcommand("solve",
                     "print splitter-condition roots, discriminant, and "
                     "phase bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  spec.gain_axis =
      gain_axis == "amplitude" ? GainAxis::amplitude : GainAxis::intensity;

  try {
    if (app.got_subcommand("curve")) {
      spec.command = Command::curve;
      return cmd_curve(spec, err);
    }
    if (app.got_subcommand("solve")) {
      spec.command = Command::solve;
      return cmd_solve(out);
    }
    if (app.got_subcommand("verify")) {
      spec.command = Command::verify;
      return cmd_verify(spec, out);
    }
    if (app.got_subcommand("herald-table")) {
      spec.command = Command::herald_table;
      return cmd_herald_table(spec, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace scissors::cli
