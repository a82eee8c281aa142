// Copyright 2026 The telegain Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "sweep.hpp"
#include "telegain/errors.hpp"

namespace telegain::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& report, const std::string& key) {
  std::istringstream is(report);
  for (std::string line; std::getline(is, line);) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "<missing>";
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("telegain_test_" + name);
}

TEST(CliChannel, Reports) {
  auto r = call({"channel", "--r", "1.0", "--l", "0", "--g", "0.761594"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(value_of(r.out, "lambda"), "1.000000");
  EXPECT_EQ(value_of(r.out, "g_att"), "0.761594");
  EXPECT_EQ(value_of(r.out, "g_amp"), "1.313035");
  EXPECT_EQ(value_of(r.out, "regime"), "attenuation-like");
  r = call({"channel", "--r", "1.0", "--l", "0", "--g", "1.0"});
  EXPECT_EQ(value_of(r.out, "tau"), "0.135335");
  EXPECT_EQ(value_of(r.out, "regime"), "unit");
  r = call({"channel", "--r", "1.0", "--l", "0.2", "--g", "1.0"});
  EXPECT_NEAR(std::stod(value_of(r.out, "tau")), 0.308269, 1.5e-6);
}

TEST(CliChannel, DomainErrorsExitTwo) {
  const auto r = call({"channel", "--r", "1.0", "--g", "50"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(call({"channel"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
}

TEST(Cli, HelpForEveryCommand) {
  for (const char* cmd : {"channel", "sweep", "optimize", "swap", "verify"}) {
    const auto r = call({cmd, "--help"});
    EXPECT_EQ(r.code, 0) << cmd;
    EXPECT_NE(r.out.find("Usage"), std::string::npos) << cmd;
  }
}

TEST(CliConfig, FileValuesAndOverrides) {
  const auto path = temp_path("opt.cfg");
  {
    std::ofstream os(path);
    os << "# optimal squeezing\neta = 0.7\nl = 0.2\noptimize-r = true\n";
  }
  auto r = call({"optimize", "--config", path.string(), "--metric", "fstate"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(value_of(r.out, "r_opt")), 0.91, 0.01);
  r = call({"optimize", "--metric", "fstate", "--config", path.string(),
            "--optimize-r=false", "--r", "1.0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(value_of(r.out, "r_opt"), "<missing>");
  EXPECT_NEAR(std::stod(value_of(r.out, "g_opt")), 0.748, 1e-3);
  std::filesystem::remove(path);
}

TEST(CliConfig, UnknownKeyIsAnError) {
  const auto path = temp_path("bad.cfg");
  {
    std::ofstream os(path);
    os << "g = 1.0\nsqueeze = 2\n";
  }
  const auto r = call({"channel", "--config", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("squeeze"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliEnv, CutoffOverride) {
  ::setenv("TELEGAIN_CUTOFF", "12", 1);
  EXPECT_EQ(value_of(call({"channel", "--r", "1", "--g", "1"}).out, "cutoff"), "12");
  ::setenv("TELEGAIN_CUTOFF", "99", 1);
  const auto r = call({"channel", "--r", "1", "--g", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  ::unsetenv("TELEGAIN_CUTOFF");
}

TEST(CliOptimize, Reports) {
  const auto r = call({"optimize", "--metric", "fstate", "--eta", "0.7", "--l", "0.2",
                       "--optimize-r"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(value_of(r.out, "r_opt")), 0.91, 0.01);
  EXPECT_EQ(value_of(r.out, "at_bracket_edge"), "false");
  EXPECT_EQ(call({"optimize", "--metric", "fstate", "--g-max", "0.3", "--eta", "0.7",
                  "--l", "0.2"}).code, 2);
}

TEST(CliSwap, Reports) {
  const auto r = call({"swap", "--eta", "0.8", "--r", "1.0", "--l", "0.2",
                       "--optimize-gain"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(value_of(r.out, "g_ln_opt")), 0.90, 0.01);
  EXPECT_NEAR(std::stod(value_of(r.out, "e_ln_max")), 0.30, 0.01);
  EXPECT_EQ(value_of(r.out, "ppt_violated"), "true");
  EXPECT_NE(r.out.find("k a_k b_k c_k lambda_minus lambda_plus"), std::string::npos);
  EXPECT_EQ(call({"swap", "--eta", "0.8"}).code, 2);
}

TEST(CliVerify, ExitCodes) {
  auto r = call({"verify", "--suite", "channel"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("suite channel: PASS"), std::string::npos);
  r = call({"verify", "--suite", "channel", "--tol", "1e-30"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("channel / composition associativity"), std::string::npos);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, 2);
}

SweepSpec gain_sweep(std::vector<Metric> metrics, double eta, double r, double l,
                     int steps) {
  SweepSpec s;
  s.metrics = std::move(metrics);
  s.eta = eta;
  s.r = r;
  s.l = l;
  s.steps = steps;
  return s;
}

TEST(Sweep, CsvRoundTripIsExact) {
  const auto rows =
      compute_sweep(gain_sweep({Metric::kFState, Metric::kFQubit, Metric::kLogNegativity},
                               0.7, 1.0, 0.2, 64));
  for (const Format f : {Format::kCsv, Format::kJsonl}) {
    const auto path = temp_path(f == Format::kCsv ? "rt.csv" : "rt.jsonl");
    write_sweep_file(path.string(), rows, f);
    EXPECT_EQ(read_sweep_file(path.string(), f), rows);
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".partial"));
    std::filesystem::remove(path);
  }
}

TEST(Sweep, UnrequestedMetricsAreEmpty) {
  std::ostringstream os;
  write_sweep(os, compute_sweep(gain_sweep({Metric::kLogNegativity}, 1.0, 1.0, 0.0, 2)),
              Format::kCsv);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), kCsvHeader);
  EXPECT_NE(os.str().find("0.05,,,,"), std::string::npos);
}

TEST(Sweep, ThreadsDoNotChangeOutput) {
  const auto spec = gain_sweep({Metric::kFState, Metric::kLogNegativity}, 0.8, 1.0, 0.2, 101);
  std::ostringstream a, b;
  write_sweep(a, compute_sweep(spec, 1), Format::kCsv);
  write_sweep(b, compute_sweep(spec, 4), Format::kCsv);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Sweep, FStateHasSingleInteriorMaximum) {
  const auto rows = compute_sweep(gain_sweep({Metric::kFState}, 0.7, 1.0, 0.2, 256));
  int peaks = 0;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    if (*rows[i].f_state > *rows[i - 1].f_state && *rows[i].f_state >= *rows[i + 1].f_state)
      ++peaks;
  }
  EXPECT_EQ(peaks, 1);
  EXPECT_LT(*rows.front().f_state, *rows[128].f_state);
  EXPECT_LT(*rows.back().f_state, *rows[128].f_state);
}

TEST(Sweep, QubitFidelityPeaksAtBothCanonicalGains) {
  const auto rows = compute_sweep(gain_sweep({Metric::kFQubit}, 1.0, 1.0, 0.0, 1024));
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    if (*rows[i].f_qubit > *rows[i - 1].f_qubit && *rows[i].f_qubit >= *rows[i + 1].f_qubit) {
      peaks.push_back(rows[i].axis);
      EXPECT_GT(*rows[i].f_qubit, 0.99);
    }
  }
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_NEAR(peaks[0], 0.76, 0.01);
  EXPECT_NEAR(peaks[1], 1.31, 0.01);
}

TEST(Sweep, LogNegativityPositiveInsideWindow) {
  const auto rows = compute_sweep(gain_sweep({Metric::kLogNegativity}, 1.0, 1.0, 0.0, 512));
  for (const auto& r : rows) {
    const double g = r.axis;
    if (std::abs(g - 0.462117) < 1e-4 || std::abs(g - 2.163953) < 1e-4) continue;
    EXPECT_EQ(*r.e_ln > 0.0, g > 0.462117 && g < 2.163953) << g;
  }
}

TEST(Sweep, SpecValidation) {
  auto s = gain_sweep({Metric::kFState}, 0.7, 1.0, 0.2, 1);
  EXPECT_THROW(compute_sweep(s), DomainError);
  s.steps = 10;
  s.axis = Axis::kSqueezing;
  s.min = 0.0;
  s.max = 2.0;
  EXPECT_THROW(compute_sweep(s), DomainError);
  s.gain = 0.9;
  EXPECT_NO_THROW(compute_sweep(s));
}

TEST(CliSweep, FailureLeavesNoFile) {
  const auto path = temp_path("fail.csv");
  const auto r = call({"sweep", "--metric", "fstate", "--steps", "1", "--out", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(std::filesystem::exists(path));
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".partial"));
}

TEST(CliSweep, ByteIdenticalReruns) {
  const auto a = temp_path("a.csv"), b = temp_path("b.csv");
  const std::vector<std::string> base{"sweep", "--metric", "fstate,fqubit,ln", "--eta", "0.7",
                                      "--l", "0.2", "--steps", "50"};
  auto args = base;
  args.insert(args.end(), {"--out", a.string(), "--threads", "3"});
  ASSERT_EQ(call(args).code, 0);
  args = base;
  args.insert(args.end(), {"--out", b.string()});
  ASSERT_EQ(call(args).code, 0);
  std::ifstream ia(a, std::ios::binary), ib(b, std::ios::binary);
  const std::string sa((std::istreambuf_iterator<char>(ia)), {});
  const std::string sb((std::istreambuf_iterator<char>(ib)), {});
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(sa.find('\r'), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

}  // namespace
}  // namespace telegain::cli
