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

#ifndef SCISSORS_VERIFY_HPP
#define SCISSORS_VERIFY_HPP

#include <string>
#include <vector>

namespace scissors {

struct VerifyOptions {
  int cutoff = 10;
  double alpha2 = 0.5;  // |alpha|^2 used for the leakage probe
  /// Negative control: heralds one count in each detector of the two-photon
  /// pure device instead of the working pattern, which must break the
  /// closed-form equivalence.
  bool inject_wrong_herald = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_residual = 0.0;
  std::string note;
};

/// Runs the closed-form/simulation equivalences and the structural
/// invariants over the standard parameter grid
/// (|alpha|^2 in {0.02, 0.1, 0.2, 0.3, 0.5} x g^2 in {1, 2, 4, 6, 10}).
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace scissors

#endif  // SCISSORS_VERIFY_HPP
