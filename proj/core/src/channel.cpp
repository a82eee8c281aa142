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

#include "telegain/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "telegain/errors.hpp"

namespace telegain {
namespace {

void require_gain(double g) {
  if (!(g >= kMinGain && g <= kMaxGain)) {
    throw DomainError("gain " + std::to_string(g) + " outside [" +
                      std::to_string(kMinGain) + ", " +
                      std::to_string(kMaxGain) + "]");
  }
}

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(name) + " = " + std::to_string(v) +
                      " outside [0, 1]");
  }
}

// Zero for round-off sized negative variances.
double clamp_round_off(double tau) {
  return tau < 0.0 && tau > -1e-12 ? 0.0 : tau;
}

bool close(double a, double b, double rel) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

}  // namespace

void ResourceParams::validate() const {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("squeezing r = " + std::to_string(r) + " must be >= 0");
  }
  require_unit_interval(l, "loss l");
}

SqueezedVariances squeezed_variances(const ResourceParams& p) {
  p.validate();
  const double e = std::exp(-2.0 * p.r);
  return {((1.0 - p.l) * e + p.l) / 2.0, ((1.0 - p.l) / e + p.l) / 2.0};
}

GaussianChannel::GaussianChannel(double tau, double gain)
    : tau_(tau), gain_(gain) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError("channel variance tau = " + std::to_string(tau) +
                      " must be finite and >= 0");
  }
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    throw DomainError("channel gain g = " + std::to_string(gain) +
                      " must be finite and > 0");
  }
}

bool GaussianChannel::is_physical(double tol) const {
  const double lam = lambda();
  return lam >= 1.0 - tol && lam >= 2.0 * gain_ * gain_ - 1.0 - tol;
}

bool GaussianChannel::approx_equal(const GaussianChannel& other,
                                   double rel) const {
  return close(tau_, other.tau_, rel) && close(gain_, other.gain_, rel);
}

GaussianChannel teleport_channel(const ResourceParams& p, double gain) {
  require_gain(gain);
  const auto v = squeezed_variances(p);
  const double minus = 1.0 - 1.0 / gain;
  const double plus = 1.0 + 1.0 / gain;
  const double tau =
      v.antisqueezed / 2.0 * minus * minus + v.squeezed / 2.0 * plus * plus;
  return {tau, gain};
}

GaussianChannel attenuation_channel(double transmittance) {
  if (!(transmittance > 0.0 && transmittance < 1.0)) {
    throw DomainError("transmittance " + std::to_string(transmittance) +
                      " outside (0, 1)");
  }
  const double g = std::sqrt(transmittance);
  require_gain(g);
  return {(1.0 - transmittance) / (2.0 * transmittance), g};
}

GaussianChannel amplification_channel(double power_gain) {
  if (!(power_gain > 1.0)) {
    throw DomainError("power gain " + std::to_string(power_gain) +
                      " must exceed 1");
  }
  const double g = std::sqrt(power_gain);
  require_gain(g);
  return {(power_gain - 1.0) / (2.0 * power_gain), g};
}

GaussianChannel compose(const GaussianChannel& first,
                        const GaussianChannel& second) {
  const double g1 = first.gain();
  return {first.tau() + second.tau() / (g1 * g1), g1 * second.gain()};
}

CanonicalGains canonical_gains(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("canonical gains need r > 0, got " + std::to_string(r));
  }
  const double t = std::tanh(r);
  return {t, 1.0 / t};
}

FoldedParams fold_detector_efficiency(double eta_in, const ResourceParams& p,
                                      double gain, double eta_d) {
  require_unit_interval(eta_in, "input efficiency");
  p.validate();
  if (!(gain > 0.0)) {
    throw DomainError("gain must be > 0");
  }
  if (!(eta_d > 0.0 && eta_d <= 1.0)) {
    throw DomainError("detector efficiency " + std::to_string(eta_d) +
                      " outside (0, 1]");
  }
  const double loss = std::min(1.0, 1.0 - (1.0 - p.l) * eta_d);
  return {eta_in * eta_d, loss, std::sqrt(eta_d) * gain};
}

const char* to_string(GainRegime regime) {
  switch (regime) {
    case GainRegime::kAttenuating:
      return "attenuation-like";
    case GainRegime::kUnit:
      return "unit";
    case GainRegime::kAmplifying:
      return "amplification-like";
  }
  return "unknown";
}

GainRegime classify_gain(double gain, double tol) {
  if (std::abs(gain - 1.0) <= tol) return GainRegime::kUnit;
  return gain < 1.0 ? GainRegime::kAttenuating : GainRegime::kAmplifying;
}

GainDecomposition decompose(const GaussianChannel& ch) {
  const double g = ch.gain();
  const double g2 = g * g;
  const auto regime = classify_gain(g);
  switch (regime) {
    case GainRegime::kUnit:
      return {regime, ch.tau(), {ch}};
    case GainRegime::kAttenuating: {
      // unit-gain convolution, then beam-splitter loss at epsilon = g^2
      const double thermal =
          clamp_round_off(ch.tau() - (1.0 - g2) / (2.0 * g2));
      return {regime,
              thermal,
              {GaussianChannel(thermal, 1.0), attenuation_channel(g2)}};
    }
    case GainRegime::kAmplifying: {
      // pure amplification at gamma = g^2, then unit-gain convolution
      const double thermal =
          clamp_round_off(g2 * (ch.tau() - (g2 - 1.0) / (2.0 * g2)));
      return {regime,
              thermal,
              {amplification_channel(g2), GaussianChannel(thermal, 1.0)}};
    }
  }
  throw DomainError("unreachable gain regime");
}

}  // namespace telegain
