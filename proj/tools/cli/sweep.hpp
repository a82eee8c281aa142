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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "telegain/channel.hpp"
#include "telegain/fock.hpp"
#include "telegain/optimize.hpp"

namespace telegain::cli {

enum class Axis { kGain, kSqueezing };
enum class Format { kCsv, kJsonl };

/// One row of a sweep. Metrics that were not requested stay empty.
struct SweepRecord {
  double axis = 0.0;
  std::optional<double> f_state;
  std::optional<double> f_qubit;
  std::optional<double> p_qubit;
  std::optional<double> e_ln;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepSpec {
  std::vector<Metric> metrics;
  double eta = 1.0;                  // split-photon efficiency for ln
  std::optional<double> eta1;        // qubit single-photon weight (default eta)
  double eta2 = 0.0;                 // qubit two-photon weight
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
  double r = 1.0;                    // fixed when sweeping g
  double l = 0.0;
  std::optional<double> gain;        // fixed when sweeping r
  Axis axis = Axis::kGain;
  double min = 0.05;
  double max = 2.0;
  int steps = 256;

  void validate() const;
};

inline const char* const kCsvHeader = "g_or_r,f_state,f_qubit,p_qubit,e_ln";

/// Rounds to the 9 significant digits written to disk, so that records read
/// back compare equal to the ones computed.
double quantize(double v);

/// Rows in axis order; `threads` workers share the points.
std::vector<SweepRecord> compute_sweep(const SweepSpec& spec, int threads = 1);

void write_sweep(std::ostream& os, const std::vector<SweepRecord>& rows,
                 Format format);

/// Writes to a sibling temporary file and renames it into place; nothing is
/// left behind on failure.
void write_sweep_file(const std::string& path,
                      const std::vector<SweepRecord>& rows, Format format);

std::vector<SweepRecord> read_sweep(std::istream& is, Format format);
std::vector<SweepRecord> read_sweep_file(const std::string& path, Format format);

}  // namespace telegain::cli
