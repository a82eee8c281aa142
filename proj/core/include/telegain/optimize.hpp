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

#include <functional>

#include "telegain/channel.hpp"

namespace telegain {

struct Bracket {
  double lo;
  double hi;

  void validate() const;
};

struct ScanOptions {
  int coarse_points = 64;
  int dense_points = 1024;
  double x_tol = 1e-9;
};

struct Maximum {
  double x = 0.0;
  double value = 0.0;
  bool at_edge = false;     // the scan maximum is a bracket endpoint
  bool multimodal = false;  // the dense scan was needed
};

/// Grid scan followed by golden-section refinement around the best node.
/// The coarse scan is replaced by a dense one when it shows two or more
/// local maxima more than two cells apart.
Maximum maximize(const std::function<double(double)>& f, const Bracket& bracket,
                 const ScanOptions& options = {});

enum class Metric { kFState, kFQubit, kLogNegativity };

const char* to_string(Metric metric);

/// Metric for an eta-model dual-rail input (or the split photon for
/// kLogNegativity) through teleport_channel(p, gain). kFQubit is 0 where the
/// qubit subspace is empty.
double evaluate_metric(Metric metric, double eta, const ResourceParams& p,
                       double gain);

struct GainOptimum {
  double gain;
  double value;
};

inline constexpr Bracket kGainBracket{0.05, 2.0};
inline constexpr Bracket kSqueezingBracket{0.05, 3.0};

/// Throws BracketError when the maximum sits on the bracket edge.
GainOptimum optimize_gain(Metric metric, double eta, const ResourceParams& p,
                          const Bracket& bracket = kGainBracket,
                          const ScanOptions& options = {});

struct SqueezingOptimum {
  double r;
  double gain;
  double value;
  bool at_bracket_edge;  // the outer maximum sits on an end of the r bracket
};

/// Maximizes over r the gain-optimized metric. Does not throw at bracket
/// edges; the flag reports them instead.
SqueezingOptimum optimize_squeezing(Metric metric, double eta, double l,
                                    const Bracket& r_bracket = kSqueezingBracket,
                                    const Bracket& gain_bracket = kGainBracket,
                                    const ScanOptions& options = {});

}  // namespace telegain
