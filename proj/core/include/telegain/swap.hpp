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

#include <optional>
#include <vector>

#include "telegain/channel.hpp"
#include "telegain/fock.hpp"
#include "telegain/optimize.hpp"

namespace telegain {

/// (1 - eta)|0,0><0,0| + eta |psi+><psi+| with psi+ = (|0,1> + |1,0>)/sqrt 2.
TwoModeOperator initial_swap_state(double eta);

/// State of X and the teleported output Z after mode Y of the split photon
/// goes through `ch`. Mode X is truncated at one photon.
TwoModeOperator swapped_state(double eta, const GaussianChannel& ch,
                              int cutoff);

/// Block k of the partial transpose acts on {|0,k>, |1,k+1>}:
///   [[a_k, b_k], [b_k, c_k]].
struct PptBlock {
  int k = 0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
};

/// Blocks k = 0..k_max. The 1x1 block on |1,0> (entry c_{-1}) is positive and
/// not listed.
std::vector<PptBlock> ppt_blocks(double eta, const GaussianChannel& ch,
                                 int k_max);

/// (3 eta - 2)/(2 - eta) - (2 tau - 1/g^2); PPT is violated iff positive.
double ppt_margin(double eta, const GaussianChannel& ch);
bool ppt_violated(double eta, const GaussianChannel& ch);
bool ppt_violated(double eta, const ResourceParams& p, double gain);

/// Open gain interval on which PPT is violated; hi is +inf when the window
/// is unbounded above. Empty when no gain violates PPT.
struct GainWindow {
  double lo;
  double hi;
};
std::optional<GainWindow> violation_window(double eta, const ResourceParams& p);

struct LogNegativity {
  double value = 0.0;
  int k_max = 0;            // last block included
  double tail_bound = 0.0;  // bound on the omitted sum
  bool truncated = false;   // tail_bound >= 1e-12 at the largest k_max tried
};

/// log2[1 + sum_k (|lambda_k^-| - lambda_k^-)] from the analytic blocks.
/// Starts at `k_max` and extends the series until the omitted tail is
/// below 1e-12.
LogNegativity log_negativity(double eta, const GaussianChannel& ch,
                             int k_max = 64);

/// Same quantity from the eigenvalues of the truncated partial transpose.
double log_negativity_numeric(double eta, const GaussianChannel& ch,
                              int cutoff);

/// Log-negativity of the state before swapping.
double initial_log_negativity(double eta);

struct SwapMetrics {
  bool ppt_violated = false;
  double log_negativity = 0.0;
  double g_ln_opt = 0.0;  // NaN when no gain in the bracket gives entanglement
};

/// Maximizes log_negativity over the gain. Throws BracketError when the
/// maximum sits on the bracket edge.
SwapMetrics optimize_gain_ln(double eta, const ResourceParams& p,
                             const Bracket& bracket = kGainBracket,
                             const ScanOptions& options = {});

}  // namespace telegain
