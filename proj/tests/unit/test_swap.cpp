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
#include <random>

#include <gtest/gtest.h>

#include "telegain/errors.hpp"
#include "telegain/swap.hpp"
#include "telegain/transition.hpp"
#include "telegain/verify.hpp"

namespace telegain {
namespace {

TEST(Swap, InitialStateLogNegativity) {
  // 2x2 partial-transpose block evaluated by hand (mpmath)
  EXPECT_NEAR(initial_log_negativity(0.7), 0.54752614296516788, 1e-14);
  EXPECT_NEAR(initial_log_negativity(0.8), 0.70010330913411695, 1e-14);
  EXPECT_NEAR(initial_log_negativity(1.0), 1.0, 1e-15);
  EXPECT_EQ(initial_log_negativity(0.0), 0.0);
}

TEST(Swap, InitialStateMatchesIdentityChannelSwap) {
  const auto rho = initial_swap_state(0.7);
  const auto swapped = swapped_state(0.7, GaussianChannel::identity(), 1);
  EXPECT_LT((rho.matrix() - swapped.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Swap, FrozenLogNegativity) {
  // blocks summed from loss+amplifier Kraus coefficients
  EXPECT_NEAR(log_negativity(0.8, teleport_channel({1.0, 0.2}, 0.9)).value,
              0.29706638281448909, 1e-12);
  EXPECT_NEAR(log_negativity(0.9, teleport_channel({1.5, 0.05}, 1.0)).value,
              0.6738838546842002, 1e-12);
  EXPECT_NEAR(log_negativity(1.0, teleport_channel({0.5, 0.0}, 0.8)).value,
              0.47376470286594023, 1e-12);
  EXPECT_EQ(log_negativity(0.5, teleport_channel({0.7, 0.1}, 1.1)).value, 0.0);
}

TEST(Swap, SeriesTruncationIsReported) {
  const auto ln = log_negativity(0.8, teleport_channel({1.0, 0.2}, 0.9));
  EXPECT_FALSE(ln.truncated);
  EXPECT_LT(ln.tail_bound, 1e-12);
  EXPECT_GE(ln.k_max, 64);
  const auto wide = log_negativity(0.8, channel_from_lambda(6.0, 1.0));
  EXPECT_FALSE(wide.truncated);
  EXPECT_GT(wide.k_max, 64);
}

TEST(Swap, NumericSpectrumAgrees) {
  for (const auto& ch : {teleport_channel({1.0, 0.2}, 0.9), teleport_channel({0.5, 0.0}, 0.8)}) {
    EXPECT_NEAR(log_negativity_numeric(0.8, ch, default_cutoff(ch)),
                log_negativity(0.8, ch).value, 1e-9);
  }
}

TEST(Swap, SeparableWithoutPhoton) {
  EXPECT_EQ(log_negativity(0.0, teleport_channel({1.0, 0.2}, 0.9)).value, 0.0);
}

TEST(Swap, IdealChannelGivesBellState) {
  const auto ch = teleport_channel({30.0, 0.0}, 1.0);
  const auto rho = swapped_state(1.0, ch, 4);
  EXPECT_NEAR(rho(0, 1, 0, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(rho(1, 0, 1, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(rho(0, 1, 1, 0).real(), 0.5, 1e-12);
  const auto blocks = ppt_blocks(1.0, GaussianChannel::identity(), 3);
  EXPECT_DOUBLE_EQ(blocks[0].lambda_minus, -0.5);
  EXPECT_NEAR(log_negativity(1.0, ch).value, 1.0, 1e-12);
}

TEST(Swap, SwappedStateIsRealDensity) {
  const auto ch = teleport_channel({1.0, 0.2}, 0.90);
  const auto rho = swapped_state(0.8, ch, default_cutoff(ch));
  EXPECT_NEAR(trace(rho).real(), 1.0, kTailTolerance);
  EXPECT_EQ(rho.matrix().imag().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_GE(eigvals_hermitian(rho).front(), -1e-12);
  // coherences only between |0,k+1> and |1,k>
  EXPECT_GT(rho(0, 1, 1, 0).real(), 0.0);
  EXPECT_GT(rho(0, 3, 1, 2).real(), 0.0);
  EXPECT_EQ(rho(0, 2, 1, 0), Complex(0.0));
}

TEST(Swap, BlockInvariants) {
  for (const auto& blk : ppt_blocks(0.8, teleport_channel({1.0, 0.2}, 0.9), 12)) {
    EXPECT_GE(blk.lambda_plus, 0.0);
    EXPECT_NEAR(blk.lambda_plus + blk.lambda_minus, blk.a + blk.c, 1e-15);
    EXPECT_NEAR(blk.lambda_plus * blk.lambda_minus, blk.a * blk.c - blk.b * blk.b, 1e-16);
  }
}

TEST(Swap, BlockSignIsIndependentOfK) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double eta = u(rng);
    const auto ch = teleport_channel({0.05 + 2 * u(rng), 0.5 * u(rng)}, 0.2 + 2 * u(rng));
    if (std::abs(ppt_margin(eta, ch)) < 1e-6) continue;
    const auto blocks = ppt_blocks(eta, ch, 12);
    const bool first = blocks[0].lambda_minus < 0.0;
    for (const auto& b : blocks) {
      if (b.b == 0.0) continue;
      EXPECT_EQ(b.lambda_minus < 0.0, first);
    }
    EXPECT_EQ(ppt_violated(eta, ch), first);
  }
}

TEST(Swap, CanonicalGainConditionIsIndependentOfR) {
  for (double eta : {0.2, 0.5, 0.9})
    for (double l : {0.0, 0.1, 0.3, 0.6})
      for (double r : {0.2, 1.0, 2.5}) {
        if (std::abs(eta / (2 - eta) - l) < 1e-9) continue;
        EXPECT_EQ(ppt_violated(eta, {r, l}, std::tanh(r)), eta / (2 - eta) > l);
      }
}

TEST(Swap, ThresholdEfficiencyAtTwentyPercentLoss) {
  EXPECT_FALSE(ppt_violated(0.33, {1.0, 0.2}, std::tanh(1.0)));
  EXPECT_TRUE(ppt_violated(0.34, {1.0, 0.2}, std::tanh(1.0)));
}

TEST(Swap, ViolationWindowForPerfectSource) {
  for (double l : {0.0, 0.2, 0.7}) {
    const auto w = violation_window(1.0, {1.0, l});
    ASSERT_TRUE(w.has_value());
    EXPECT_NEAR(w->lo, 0.46211715726000976, 1e-12);
    EXPECT_NEAR(w->hi, 2.1639534137386528, 1e-12);
    EXPECT_TRUE(ppt_violated(1.0, {1.0, l}, w->lo + 1e-6));
    EXPECT_FALSE(ppt_violated(1.0, {1.0, l}, w->lo - 1e-6));
    EXPECT_TRUE(ppt_violated(1.0, {1.0, l}, w->hi - 1e-6));
    EXPECT_FALSE(ppt_violated(1.0, {1.0, l}, w->hi + 1e-6));
  }
  EXPECT_FALSE(violation_window(0.2, {1.0, 0.5}).has_value());
}

TEST(Swap, OptimalGainHeadline) {
  const SwapMetrics m = optimize_gain_ln(0.8, {1.0, 0.2});
  EXPECT_NEAR(m.g_ln_opt, 0.90, 0.01);
  EXPECT_NEAR(m.log_negativity, 0.30, 0.01);
  EXPECT_TRUE(m.ppt_violated);
}

TEST(Swap, OptimalGainExceedsTanhR) {
  for (double eta : {0.6, 0.8, 1.0})
    for (double l : {0.0, 0.1, 0.2})
      for (double r : {0.5, 1.0, 1.5}) {
        const SwapMetrics m = optimize_gain_ln(eta, {r, l});
        if (m.log_negativity > 0.0) EXPECT_GT(m.g_ln_opt, std::tanh(r));
      }
}

TEST(Swap, MaximumGrowsWithSqueezing) {
  double prev = 0.0;
  for (double r : {0.25, 0.5, 1.0, 2.0}) {
    const double v = optimize_gain_ln(0.8, {r, 0.2}).log_negativity;
    EXPECT_GT(v, prev);
    EXPECT_LT(v, initial_log_negativity(0.8));
    prev = v;
  }
}

TEST(Swap, NoEntanglementGivesNaNGain) {
  const SwapMetrics m = optimize_gain_ln(0.2, {1.0, 0.5});
  EXPECT_EQ(m.log_negativity, 0.0);
  EXPECT_TRUE(std::isnan(m.g_ln_opt));
  EXPECT_FALSE(m.ppt_violated);
}

TEST(Swap, Errors) {
  EXPECT_THROW(swapped_state(1.2, GaussianChannel::identity(), 3), DomainError);
  EXPECT_THROW(ppt_blocks(0.5, GaussianChannel::identity(), -1), IndexError);
}

}  // namespace
}  // namespace telegain
