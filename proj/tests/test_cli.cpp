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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "scissors/cli.hpp"

using namespace scissors;
using namespace scissors::cli;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::vector<const char*> argv;
  argv.push_back("scissors");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> split_row(const std::string& line) {
  std::vector<double> values;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) values.push_back(std::stod(field));
  return values;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "scissors_cli_test";
    std::filesystem::create_directories(path);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("curve CSV shape and determinism") {
  RunSpec spec;
  spec.amplifier = "two-photon-pure";
  spec.alpha2 = 0.1;
  spec.gain_min = 1.0;
  spec.gain_max = 10.0;
  spec.points = 20;
  std::string first = curve_csv(spec);
  std::string second = curve_csv(spec);
  CHECK(first == second);  // byte-identical
  std::vector<std::string> lines = split_lines(first);
  REQUIRE(lines.size() == 21);
  CHECK(lines[0] ==
        "gain_intensity,fidelity,defect,log_recip_defect,probability,utility");
  std::vector<double> row = split_row(lines[1]);
  REQUIRE(row.size() == 6);
  CHECK(row[0] == doctest::Approx(1.0));
  CHECK(row[1] + row[2] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degenerate two-point grid repeats one row") {
  RunSpec spec;
  spec.gain_min = 3.0;
  spec.gain_max = 3.0;
  spec.points = 2;
  std::vector<std::string> lines = split_lines(curve_csv(spec));
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == lines[2]);
}

TEST_CASE("amplitude gain axis relabels and squares the grid") {
  RunSpec intensity;
  intensity.gain_min = 4.0;
  intensity.gain_max = 4.0;
  intensity.points = 2;
  RunSpec amplitude = intensity;
  amplitude.gain_axis = GainAxis::amplitude;
  amplitude.gain_min = 2.0;
  amplitude.gain_max = 2.0;
  std::vector<std::string> li = split_lines(curve_csv(intensity));
  std::vector<std::string> la = split_lines(curve_csv(amplitude));
  CHECK(la[0] ==
        "gain_amplitude,fidelity,defect,log_recip_defect,probability,utility");
  std::vector<double> ri = split_row(li[1]);
  std::vector<double> ra = split_row(la[1]);
  CHECK(ra[0] == doctest::Approx(2.0));
  for (std::size_t c = 1; c < 6; ++c) {
    CHECK(ra[c] == doctest::Approx(ri[c]).epsilon(1e-12));
  }
}

TEST_CASE("grid validation") {
  RunSpec spec;
  spec.gain_min = 0.0;
  CHECK_THROWS_AS(curve_csv(spec), std::invalid_argument);
  spec.gain_min = 2.0;
  spec.gain_max = 1.0;
  CHECK_THROWS_AS(curve_csv(spec), std::invalid_argument);
  spec.gain_max = 3.0;
  spec.points = 1;
  CHECK_THROWS_AS(curve_csv(spec), std::invalid_argument);
  spec.points = 2;
  spec.amplifier = "no-such-device";
  CHECK_THROWS_AS(curve_csv(spec), std::invalid_argument);
}

TEST_CASE("solve report pins the algebraic constants") {
  std::string out;
  CHECK(run({"solve"}, &out) == kExitOk);
  CHECK(out.find("0.723607") != std::string::npos);
  CHECK(out.find("0.276393") != std::string::npos);
  CHECK(out.find("discriminant -3") != std::string::npos);
  CHECK(out.find("0.333333") != std::string::npos);
  CHECK(out.find("1.000000") != std::string::npos);  // bound at t^2 = 1/4
  CHECK(out.find("0.500000") != std::string::npos);  // bound at t^2 = 1/3
  CHECK(out.find("0.000000") != std::string::npos);  // bound at t^2 = 1/2
}

TEST_CASE("herald table partitions the probability") {
  TempDir dir;
  std::string path = dir.file("heralds.csv");
  CHECK(run({"herald-table", "--amplifier", "two-photon-pure", "--alpha2",
             "0.1", "--gain-min", "2", "-o", path}) == kExitOk);
  std::vector<std::string> lines = split_lines(slurp(path));
  REQUIRE(lines.size() > 2);
  CHECK(lines[0] == "n_det1,n_det2,n_loss,probability,overlap_with_target");
  double total = 0.0;
  double success_probability = 0.0;
  double lost_probability = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<double> row = split_row(lines[i]);
    REQUIRE(row.size() == 5);
    total += row[3];
    if (row[0] == 0.0 && row[1] == 2.0 && row[2] == 0.0) {
      success_probability = row[3];
    }
    if (row[2] >= 1.0) lost_probability += row[3];
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  // Success row carries the closed-form weight.
  double x = 2.0 * 0.1;
  double expected = (2.0 / 9.0) * std::exp(-0.1) / 9.0 *
                    (1.0 + x + 0.5 * x * x);
  CHECK(success_probability == doctest::Approx(expected).epsilon(1e-8));
  // One third of each input photon is absorbed, so a fixed share of the
  // outcomes excites the loss port.
  CHECK(lost_probability == doctest::Approx(4.0 / 9.0).epsilon(1e-8));
  CHECK(lost_probability >= 1.0 / 3.0 - 0.1);
}

TEST_CASE("herald table rejects the n-network") {
  TempDir dir;
  std::string err;
  CHECK(run({"herald-table", "--amplifier", "n-network", "-o",
             dir.file("x.csv")},
            nullptr, &err) == kExitUsage);
  CHECK(err.find("n-network") != std::string::npos);
}

TEST_CASE("curve command writes files and reports usage errors") {
  TempDir dir;
  SUBCASE("writes byte-identical files on repeated runs") {
    std::string a = dir.file("a.csv"), b = dir.file("b.csv");
    CHECK(run({"curve", "--amplifier", "two-photon-pure", "--points", "11",
               "-o", a}) == kExitOk);
    CHECK(run({"curve", "--amplifier", "two-photon-pure", "--points", "11",
               "-o", b}) == kExitOk);
    CHECK(slurp(a) == slurp(b));
  }
  SUBCASE("invalid variant") {
    std::string err;
    CHECK(run({"curve", "--amplifier", "bogus", "-o", dir.file("c.csv")},
              nullptr, &err) == kExitUsage);
    CHECK(err.find("bogus") != std::string::npos);
  }
  SUBCASE("unwritable path") {
    CHECK(run({"curve", "-o", "/nonexistent-dir/x/out.csv"}) == kExitUsage);
  }
  SUBCASE("missing output path") {
    CHECK(run({"curve"}) == kExitUsage);
  }
  SUBCASE("unknown flag") {
    CHECK(run({"curve", "--frobnicate"}) == kExitUsage);
  }
}

TEST_CASE("config file supplies defaults and flags override it") {
  TempDir dir;
  std::string config_path = dir.file("run.conf");
  {
    std::ofstream config(config_path);
    config << "alpha2=0.3\npoints=5\ngain-min=2\ngain-max=6\n";
  }
  std::string a = dir.file("from_config.csv");
  CHECK(run({"curve", "--config", config_path, "-o", a}) == kExitOk);
  std::vector<std::string> lines = split_lines(slurp(a));
  REQUIRE(lines.size() == 6);  // header + 5 points
  CHECK(split_row(lines[1])[0] == doctest::Approx(2.0));
  CHECK(split_row(lines[5])[0] == doctest::Approx(6.0));

  std::string b = dir.file("override.csv");
  CHECK(run({"curve", "--config", config_path, "--points", "3", "-o", b}) ==
        kExitOk);
  CHECK(split_lines(slurp(b)).size() == 4);
}

TEST_CASE("verify passes by default and fails the negative control") {
  std::string out;
  CHECK(run({"verify"}, &out) == kExitOk);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("PASS") != std::string::npos);

  std::string sabotaged;
  CHECK(run({"verify", "--inject-wrong-herald"}, &sabotaged) ==
        kExitVerifyFailed);
  CHECK(sabotaged.find("FAIL two-photon pure closed form vs simulation") !=
        std::string::npos);
}

TEST_CASE("verify warns about truncation leakage at a starved cutoff") {
  std::string out;
  CHECK(run({"verify", "--cutoff", "2", "--alpha2", "0.5"}, &out) ==
        kExitVerifyFailed);
  CHECK(out.find("WARNING") != std::string::npos);
  CHECK(out.find("leakage") != std::string::npos);
}
