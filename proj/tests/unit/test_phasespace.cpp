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
#include <numbers>

#include <gtest/gtest.h>

#include "telegain/errors.hpp"
#include "telegain/phasespace.hpp"
#include "telegain/transition.hpp"
#include "telegain/verify.hpp"

namespace telegain {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(GridLayout, Validation) {
  EXPECT_NO_THROW(GridLayout{}.validate());
  EXPECT_THROW((GridLayout{8.0, 400}.validate()), DomainError);
  EXPECT_THROW((GridLayout{0.0, 401}.validate()), DomainError);
  const GridLayout g{8.0, 401};
  EXPECT_DOUBLE_EQ(g.coordinate(200), 0.0);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.04);
}

TEST(Wigner, VacuumAndSinglePhotonAtOrigin) {
  const GridLayout g{8.0, 401};
  const auto w0 = wigner_mn(0, 0, g);
  const auto w1 = wigner_mn(1, 1, g);
  EXPECT_NEAR(w0.values()(200, 200).real(), 1.0 / kPi, 1e-15);
  EXPECT_NEAR(w1.values()(200, 200).real(), -1.0 / kPi, 1e-15);
  // off-diagonal: W^{|1><0|}(x, p) = sqrt(2) (x - i p) e^{-(x^2+p^2)} / pi
  const auto w10 = wigner_mn(1, 0, g);
  const double x = g.coordinate(225), p = g.coordinate(190);
  const Complex expect = std::sqrt(2.0) * Complex(x, -p) * std::exp(-(x * x + p * p)) / kPi;
  EXPECT_NEAR(std::abs(w10.values()(225, 190) - expect), 0.0, 1e-15);
  EXPECT_THROW(wigner_mn(31, 0, g), DomainError);
}

TEST(Wigner, OverlapIsHilbertSchmidtProduct) {
  const GridLayout g{8.0, 201};
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int j = 0; j <= 4; ++j)
        for (int k = 0; k <= 4; ++k) {
          // Tr(|m><n| |k><j|) = delta_nk delta_mj
          const Complex v = overlap(wigner_mn(m, n, g), wigner_mn(k, j, g));
          const double expect = (n == k && m == j) ? 1.0 : 0.0;
          EXPECT_NEAR(std::abs(v - expect), 0.0, 1e-10);
        }
}

TEST(Wigner, NormalizedIntegral) {
  const GridLayout g{8.0, 401};
  for (int m = 0; m <= 6; ++m) {
    EXPECT_NEAR(wigner_mn(m, m, g).integral().real(), 1.0, 1e-12);
  }
}

TEST(Wigner, FromDensityRejectsUncontainedStates) {
  FockOperator rho(30);
  rho(30, 30) = 1.0;
  EXPECT_THROW(wigner_from_density(rho, GridLayout{4.0, 101}), ExtentError);
  FockOperator small(1);
  small(0, 0) = 0.5;
  small(1, 1) = 0.5;
  EXPECT_NO_THROW(wigner_from_density(small, GridLayout{}));
}

TEST(ChannelKernel, OutputStaysNormalizedForModerateChannels) {
  const GridLayout g{};
  for (const auto& ch : {teleport_channel({1.0, 0.2}, 0.8),
                         teleport_channel({1.0, 0.0}, std::tanh(1.0)),
                         teleport_channel({0.5, 0.1}, 1.2)}) {
    const ChannelKernel k(ch, g);
    for (int m = 0; m <= 2; ++m) {
      EXPECT_NEAR(k.apply(wigner_mn(m, m, g)).integral().real(), 1.0, 1e-7);
    }
  }
}

TEST(ChannelKernel, NarrowKernelUsesBandLimitedPath) {
  // tau far below the grid spacing: the identity-like channel must
  // reproduce the input instead of aliasing it away
  const GridLayout g{8.0, 201};
  const GaussianChannel ch(1e-12, 1.0);
  const auto in = wigner_mn(2, 2, g);
  const auto out = apply_channel_numeric(ch, in);
  EXPECT_LT((out.values() - in.values()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(ChannelKernel, RejectsInputOnTheBoundary) {
  const GridLayout g{3.0, 101};
  EXPECT_THROW(apply_channel_numeric(channel_from_lambda(2.0, 0.9), wigner_mn(6, 6, g)),
               ExtentError);
}

TEST(NumericOracle, AgreesWithClosedFormOnSampleChannels) {
  for (const auto& [lam, g] : {std::pair{1.5, 0.5}, std::pair{2.5, 1.5},
                               std::pair{6.0, 2.0}}) {
    const auto ch = channel_from_lambda(lam, g);
    NumericTransitionOracle oracle(ch, GridLayout{});
    for (int j = 0; j <= 6; ++j) {
      EXPECT_NEAR(oracle.coefficient(2, 2, j, j), transition_coefficient(ch, 2, 2, j, j), 1e-6);
      EXPECT_NEAR(oracle.coefficient(1, 0, j + 1, j),
                  transition_coefficient(ch, 1, 0, j + 1, j), 1e-6);
    }
    EXPECT_NEAR(oracle.coefficient(1, 1, 2, 3), 0.0, 1e-6);
  }
}

TEST(NumericOracle, SinglePointHelper) {
  const auto ch = channel_from_lambda(2.0, 0.9);
  EXPECT_NEAR(transition_coefficient_numeric(ch, 1, 1, 2, 2, GridLayout{8.0, 201}),
              transition_coefficient(ch, 1, 1, 2, 2), 1e-6);
}

}  // namespace
}  // namespace telegain
