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

#include <vector>

namespace telegain {

/// Feedforward gains accepted by the public channel constructors. The
/// convolution variance grows like 1/g^2 as g -> 0.
inline constexpr double kMinGain = 1e-3;
inline constexpr double kMaxGain = 10.0;

/// Squeezing and loss of the two squeezed modes that make up the EPR
/// resource. r >= 0, 0 <= l <= 1.
struct ResourceParams {
  double r = 0.0;
  double l = 0.0;

  void validate() const;
};

struct SqueezedVariances {
  double squeezed = 0.5;
  double antisqueezed = 0.5;

  double sum() const { return antisqueezed + squeezed; }
  double difference() const { return antisqueezed - squeezed; }
};

SqueezedVariances squeezed_variances(const ResourceParams& p);

/// One-mode Gaussian channel: convolution with an isotropic Gaussian of
/// variance tau followed by the phase-space rescaling xi -> xi / g.
class GaussianChannel {
 public:
  GaussianChannel(double tau, double gain);

  static GaussianChannel identity() { return {0.0, 1.0}; }

  double tau() const { return tau_; }
  double gain() const { return gain_; }

  /// g^2 (2 tau + 1); the output photon statistics are geometric with ratio
  /// (lambda - 1) / (lambda + 1).
  double lambda() const { return gain_ * gain_ * (2.0 * tau_ + 1.0); }

  /// Completely positive: lambda >= 1 and lambda >= 2 g^2 - 1. Every channel
  /// built from physical resources lands here, and composition keeps it.
  bool is_physical(double tol = 1e-12) const;

  /// Fieldwise comparison, relative to max(1, |a|, |b|).
  bool approx_equal(const GaussianChannel& other, double rel = 1e-12) const;

 private:
  double tau_;
  double gain_;
};

GaussianChannel teleport_channel(const ResourceParams& p, double gain);
GaussianChannel attenuation_channel(double transmittance);
GaussianChannel amplification_channel(double power_gain);

/// Pipeline order: `first` acts on the input, `second` on its output.
GaussianChannel compose(const GaussianChannel& first,
                        const GaussianChannel& second);

struct CanonicalGains {
  double attenuating;  // tanh r
  double amplifying;   // 1 / tanh r
};

CanonicalGains canonical_gains(double r);

struct FoldedParams {
  double eta;
  double loss;
  double gain;
};

/// Folds a common detector efficiency eta_d into the input efficiency, the
/// resource loss and the feedforward gain.
FoldedParams fold_detector_efficiency(double eta_in, const ResourceParams& p,
                                      double gain, double eta_d);

enum class GainRegime { kAttenuating, kUnit, kAmplifying };

const char* to_string(GainRegime regime);
GainRegime classify_gain(double gain, double tol = 1e-12);

/// Splits a channel into a unit-gain thermalizing stage and a pure
/// attenuation/amplification stage. `stages` is in pipeline order and
/// composes back to the original channel.
struct GainDecomposition {
  GainRegime regime;
  double thermal_tau;  // convolution variance of the unit-gain stage
  std::vector<GaussianChannel> stages;
};

GainDecomposition decompose(const GaussianChannel& ch);

}  // namespace telegain
