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

#include <array>
#include <optional>
#include <vector>

#include "telegain/channel.hpp"
#include "telegain/fock.hpp"

namespace telegain {

/// Largest trace deficit a truncated output may carry.
inline constexpr double kTailTolerance = 1e-9;

/// Input weight below which an unsupported dyad is treated as zero.
inline constexpr double kSourceTolerance = 1e-10;

/// Dyads |m><n| with closed-form coefficients: (0,0), (0,1), (1,0), (1,1)
/// and (2,2).
bool is_supported_source(int m, int n);

/// T_{mn->jk} = <j| T(|m><n|) |k>. Exactly 0.0 unless j - k = m - n.
/// Throws UnsupportedSourceError for other (m, n), DomainError for
/// lambda < 1 and IndexError for negative j, k.
double transition_coefficient(const GaussianChannel& ch, int m, int n, int j,
                              int k);

/// Smallest cutoff N with ((lambda-1)/(lambda+1))^(N+1) < 1e-12 and every
/// diagonal supported source losing at most 1e-12, clamped to [8, 40].
int default_cutoff(const GaussianChannel& ch);

/// Probability weight of T(|m><m|) above `cutoff`, 1 - sum_{k<=N} T_{mm->kk}.
/// Zero for off-diagonal sources.
double transition_tail(const GaussianChannel& ch, int m, int n, int cutoff);

/// T(|m><n|) truncated at `cutoff`; throws CutoffError when a diagonal
/// source loses more than kTailTolerance.
FockOperator transition_operator(const GaussianChannel& ch, int m, int n,
                                 int cutoff);

/// Banded storage of every supported source for one channel and cutoff.
/// Immutable after construction.
class TransitionTable {
 public:
  TransitionTable(const GaussianChannel& ch, int cutoff);

  const GaussianChannel& channel() const { return channel_; }
  int cutoff() const { return cutoff_; }

  /// Same contract as transition_coefficient, restricted to j, k <= cutoff.
  double operator()(int m, int n, int j, int k) const;

  /// Tail weight of diagonal source m (0 for off-diagonal).
  double tail(int m, int n) const;

  FockOperator op(int m, int n) const;

 private:
  static int slot(int m, int n);

  GaussianChannel channel_;
  int cutoff_;
  // slot -> coefficients along the band, indexed by min(j, k)
  std::array<std::vector<double>, 5> bands_;
  std::array<double, 5> tails_{};
};

/// rho_out = sum_{mn} rho^{mn} T(|m><n|). Linear in rho; does not require a
/// density operator. The output cutoff defaults to rho's.
FockOperator apply_channel(const GaussianChannel& ch, const FockOperator& rho,
                           std::optional<int> out_cutoff = std::nullopt);

/// Two independent channels on modes X and Y:
/// sum rho_{jkmn} T_X(|j><k|) (x) T_Y(|m><n|). Output cutoffs default to
/// rho's.
TwoModeOperator apply_two_mode(const GaussianChannel& ch_x,
                               const GaussianChannel& ch_y,
                               const TwoModeOperator& rho,
                               std::optional<int> out_cutoff_x = std::nullopt,
                               std::optional<int> out_cutoff_y = std::nullopt);

}  // namespace telegain
