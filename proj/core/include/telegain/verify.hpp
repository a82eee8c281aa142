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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "telegain/phasespace.hpp"

namespace telegain {

struct CheckResult {
  std::string invariant;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool exact = false;  // compared against exact zero; tolerance overrides skip it
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  double max_error() const;
};

struct VerifyOptions {
  std::optional<double> tolerance;  // replaces every non-exact tolerance
  std::uint64_t seed = 20240611;
  GridLayout grid{};
};

/// "channel", "transition", "oracle", "swap", "qubit".
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

/// One suite, or all of them for "all".
std::vector<SuiteResult> run_verification(const std::string& name,
                                          const VerifyOptions& options = {});

/// (lambda, g) pairs covered by the oracle suite.
std::vector<std::pair<double, double>> oracle_channels();

/// Channel with the given lambda and gain.
GaussianChannel channel_from_lambda(double lambda, double gain);

}  // namespace telegain
