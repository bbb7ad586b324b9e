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

#ifndef SCISSORS_CLI_HPP
#define SCISSORS_CLI_HPP

#include <iosfwd>
#include <string>

#include "scissors/amplifiers.hpp"

namespace scissors::cli {

enum class Command { curve, solve, verify, herald_table };
enum class GainAxis { intensity, amplitude };

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunSpec {
  Command command = Command::curve;
  std::string amplifier = "two-photon-pure";
  double alpha2 = 0.1;    // |alpha|^2
  double gain_min = 1.0;  // in units of the selected gain axis
  double gain_max = 10.0;
  int points = 200;
  int n_arms = 2;
  int cutoff = 10;
  std::string output_path;
  GainAxis gain_axis = GainAxis::intensity;
  bool sign_flipped_target = false;
  bool inject_wrong_herald = false;
};

/// Maps a CLI variant name ("two-photon-pure", "n-network", ...) to the
/// enum; throws std::invalid_argument on unknown names.
AmplifierVariant parse_variant(const std::string& name);

/// Deterministic CSV text for the merit curve described by spec: header
/// gain_intensity (or gain_amplitude),fidelity,defect,log_recip_defect,
/// probability,utility, one row per grid point at nine significant digits.
std::string curve_csv(const RunSpec& spec);

/// Deterministic CSV over all herald outcomes of a simulated variant:
/// detector and loss-ancilla counts, outcome probability (summing to one),
/// and the conditional output's overlap with the amplified target.
std::string herald_table_csv(const RunSpec& spec);

int cmd_curve(const RunSpec& spec, std::ostream& err);
int cmd_solve(std::ostream& out);
int cmd_verify(const RunSpec& spec, std::ostream& out);
int cmd_herald_table(const RunSpec& spec, std::ostream& err);

/// Full argv-level entry point (flag parsing, config file, dispatch).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace scissors::cli

#endif  // SCISSORS_CLI_HPP
