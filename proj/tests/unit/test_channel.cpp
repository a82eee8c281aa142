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

#include <gtest/gtest.h>

#include "telegain/channel.hpp"
#include "telegain/errors.hpp"

namespace telegain {
namespace {

TEST(Channel, TauMatchesHandEvaluation) {
  // mpmath evaluation of the teleportation variance
  EXPECT_NEAR(teleport_channel({1.0, 0.2}, 1.0).tau(), 0.30826822658929016, 1e-14);
  EXPECT_NEAR(teleport_channel({1.0, 0.0}, 1.0).tau(), 0.13533528323661269, 1e-14);
  EXPECT_NEAR(teleport_channel({1.0, 0.0}, std::tanh(1.0)).tau(),
              0.36203083048315523, 1e-14);
  const auto ch = teleport_channel({0.5, 0.1}, 1.3);
  EXPECT_NEAR(ch.tau(), 0.37125071708911532, 1e-14);
  EXPECT_NEAR(ch.lambda(), 2.94482742376121, 1e-13);
}

TEST(Channel, UnitGainNoiseIsExpMinus2r) {
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    EXPECT_NEAR(teleport_channel({r, 0.0}, 1.0).tau(), std::exp(-2.0 * r), 1e-14);
  }
}

TEST(Channel, CanonicalGainsAtROne) {
  const auto cg = canonical_gains(1.0);
  EXPECT_NEAR(cg.attenuating, 0.76, 5e-3);
  EXPECT_NEAR(cg.amplifying, 1.31, 5e-3);
  EXPECT_DOUBLE_EQ(cg.attenuating * cg.amplifying, 1.0);
  EXPECT_THROW(canonical_gains(0.0), DomainError);
}

TEST(Channel, CanonicalGainsGiveLambdaOneAndAmplifierLimit) {
  for (double r : {0.3, 1.0, 2.5}) {
    const auto cg = canonical_gains(r);
    EXPECT_NEAR(teleport_channel({r, 0.0}, cg.attenuating).lambda(), 1.0, 1e-12);
    const auto amp = teleport_channel({r, 0.0}, cg.amplifying);
    EXPECT_NEAR(amp.lambda(), 2.0 * amp.gain() * amp.gain() - 1.0, 1e-11);
  }
}

TEST(Channel, ConstructorRejectsOutOfDomain) {
  EXPECT_THROW(GaussianChannel(-0.1, 1.0), DomainError);
  EXPECT_THROW(GaussianChannel(0.1, 0.0), DomainError);
  EXPECT_THROW(teleport_channel({1.0, 0.0}, 11.0), DomainError);
  EXPECT_THROW(teleport_channel({-1.0, 0.0}, 1.0), DomainError);
  EXPECT_THROW(teleport_channel({1.0, 1.5}, 1.0), DomainError);
  EXPECT_THROW(attenuation_channel(0.0), DomainError);
  EXPECT_THROW(amplification_channel(0.5), DomainError);
}

TEST(Channel, IdentityIsNeutralForCompose) {
  const GaussianChannel ch(0.4, 1.7);
  EXPECT_TRUE(compose(GaussianChannel::identity(), ch).approx_equal(ch));
  EXPECT_TRUE(compose(ch, GaussianChannel::identity()).approx_equal(ch));
}

TEST(Channel, ComposeOrder) {
  const GaussianChannel a(0.2, 0.5);
  const GaussianChannel b(0.3, 2.0);
  const auto ab = compose(a, b);
  EXPECT_NEAR(ab.tau(), 0.2 + 0.3 / 0.25, 1e-15);
  EXPECT_NEAR(ab.gain(), 1.0, 1e-15);
}

TEST(Channel, ComposeIsAssociative) {
  const GaussianChannel a(0.7, 0.4), b(0.05, 2.2), c(1.3, 1.1);
  EXPECT_TRUE(compose(compose(a, b), c).approx_equal(compose(a, compose(b, c))));
}

TEST(Channel, PhysicalityFollowsFromResources) {
  for (double r : {0.0, 0.4, 1.2})
    for (double l : {0.0, 0.3, 1.0})
      for (double g : {0.1, 0.8, 1.0, 1.6, 4.0})
        EXPECT_TRUE(teleport_channel({r, l}, g).is_physical()) << r << " " << l << " " << g;
  EXPECT_FALSE(GaussianChannel(0.0, 1.5).is_physical());
  EXPECT_FALSE(GaussianChannel(0.1, 0.5).is_physical());
}

TEST(Channel, DecompositionRecomposes) {
  for (const auto& ch : {teleport_channel({1.0, 0.2}, 0.6),
                         teleport_channel({1.0, 0.2}, 1.0),
                         teleport_channel({0.7, 0.1}, 1.8)}) {
    const auto dec = decompose(ch);
    GaussianChannel acc = GaussianChannel::identity();
    for (const auto& s : dec.stages) acc = compose(acc, s);
    EXPECT_TRUE(acc.approx_equal(ch));
    EXPECT_GE(dec.thermal_tau, 0.0);
  }
}

TEST(Channel, DecompositionRegimes) {
  EXPECT_EQ(decompose(teleport_channel({1.0, 0.0}, 0.5)).regime, GainRegime::kAttenuating);
  EXPECT_EQ(decompose(teleport_channel({1.0, 0.0}, 1.0)).regime, GainRegime::kUnit);
  EXPECT_EQ(decompose(teleport_channel({1.0, 0.0}, 1.5)).regime, GainRegime::kAmplifying);
  EXPECT_STREQ(to_string(GainRegime::kAttenuating), "attenuation-like");
  EXPECT_STREQ(to_string(GainRegime::kAmplifying), "amplification-like");
}

TEST(Channel, PureLossAndAmplificationAtCanonicalGains) {
  const double t = std::tanh(1.3);
  EXPECT_TRUE(teleport_channel({1.3, 0.0}, t).approx_equal(attenuation_channel(t * t)));
  EXPECT_TRUE(teleport_channel({1.3, 0.0}, 1.0 / t)
                  .approx_equal(amplification_channel(1.0 / (t * t))));
  EXPECT_NEAR(decompose(teleport_channel({1.3, 0.0}, t)).thermal_tau, 0.0, 1e-14);
}

TEST(Channel, DetectorFolding) {
  const auto f = fold_detector_efficiency(0.8, {1.0, 0.2}, 0.9, 0.95);
  EXPECT_NEAR(f.eta, 0.76, 1e-15);
  EXPECT_NEAR(f.loss, 1.0 - 0.8 * 0.95, 1e-15);
  EXPECT_NEAR(f.gain, std::sqrt(0.95) * 0.9, 1e-15);
  const auto same = fold_detector_efficiency(0.8, {1.0, 0.2}, 0.9, 1.0);
  EXPECT_DOUBLE_EQ(same.loss, 0.2);
  EXPECT_THROW(fold_detector_efficiency(0.8, {1.0, 0.2}, 0.9, 0.0), DomainError);
}

}  // namespace
}  // namespace telegain
