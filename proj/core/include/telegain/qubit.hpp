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

#include "telegain/channel.hpp"
#include "telegain/fock.hpp"

namespace telegain {

/// Dual-rail qubit alpha|1,0> + beta|0,1> with imperfect photon statistics:
/// the X-side source emits vacuum, one photon or two photons with weights
/// 1 - eta1 - eta2, eta1 and eta2 before the beam splitter.
struct DualRailInput {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
  double eta1 = 1.0;
  double eta2 = 0.0;

  void validate() const;
};

/// U^+ [rho_X (x) |0><0|] U with U = beam_splitter(alpha, beta).
TwoModeOperator build_input(const DualRailInput& in, int cutoff);

/// Both rails through the same channel, computed in the beam-splitter frame
/// where the input is diagonal: U^+ {[eta2 T22 + eta1 T11 + eta0 T00] (x) T00} U.
/// Each total-photon-number block is rotated as a whole, so the truncated box
/// agrees with apply_two_mode(ch, ch, build_input(in)).
TwoModeOperator teleport_dual_rail(const DualRailInput& in,
                                   const GaussianChannel& ch, int cutoff);

struct QubitMetrics {
  double f_state = 0.0;
  double f_qubit = 0.0;
  double p_trans = 0.0;
  double p_flip = 0.0;
  double p_qubit = 0.0;
};

/// Closed-form state fidelity; requires eta2 == 0. Independent of alpha, beta.
double f_state(const DualRailInput& in, const GaussianChannel& ch);

/// Closed-form qubit-subspace metrics (f_state included); requires eta2 == 0.
/// Throws DegenerateError when p_qubit < 1e-15.
QubitMetrics f_qubit(const DualRailInput& in, const GaussianChannel& ch);

enum class FidelityPath { kClosedForm, kUhlmann };

const char* to_string(FidelityPath path);

struct QubitEvaluation {
  QubitMetrics metrics;
  FidelityPath path;
};

/// Closed forms when eta2 == 0; otherwise the Uhlmann fidelity between
/// input and output and a projection of the output onto span{|0,1>, |1,0>}.
QubitEvaluation evaluate_qubit(const DualRailInput& in,
                               const GaussianChannel& ch);

}  // namespace telegain
