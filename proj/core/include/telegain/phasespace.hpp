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

#include <map>
#include <utility>

#include <Eigen/Dense>

#include "telegain/channel.hpp"
#include "telegain/fock.hpp"

namespace telegain {

/// Uniform square sampling of (x, p) in [-L, L]^2 with an odd number of
/// points per axis so the origin is a node.
struct GridLayout {
  double half_extent = 8.0;
  int points = 401;

  void validate() const;
  double spacing() const { return 2.0 * half_extent / (points - 1); }
  double coordinate(int i) const { return -half_extent + i * spacing(); }

  friend bool operator==(const GridLayout&, const GridLayout&) = default;
};

/// A complex function sampled on a GridLayout; values(i, j) = W(x_i, p_j).
class PhaseSpaceGrid {
 public:
  explicit PhaseSpaceGrid(const GridLayout& layout);
  PhaseSpaceGrid(const GridLayout& layout, ComplexMatrix values);

  const GridLayout& layout() const { return layout_; }
  const ComplexMatrix& values() const { return values_; }
  ComplexMatrix& values() { return values_; }

  /// Trapezoid-rule integral over the grid.
  Complex integral() const;

  PhaseSpaceGrid& operator+=(const PhaseSpaceGrid& other);
  PhaseSpaceGrid& operator*=(Complex s);

 private:
  GridLayout layout_;
  ComplexMatrix values_;
};

/// Generalized Wigner function of |m><n| via the associated Laguerre form.
/// m, n <= 30.
PhaseSpaceGrid wigner_mn(int m, int n, const GridLayout& layout);

/// sum rho^{mn} W^{|m><n|}. Throws ExtentError when the result is not
/// negligible on the grid boundary.
PhaseSpaceGrid wigner_from_density(const FockOperator& rho,
                                   const GridLayout& layout);

/// 2 pi * integral of W_a W_b (trapezoid weights), i.e. Tr(A B).
Complex overlap(const PhaseSpaceGrid& a, const PhaseSpaceGrid& b);

/// Separable quadrature kernel for one channel on one layout. Applying it
/// evaluates (1/g^2) [W o G_tau](xi / g) at every grid node directly from the
/// input samples, so no intermediate grid or interpolation step is needed.
/// For narrow Gaussians the kernel is the band-limited (sinc) interpolant
/// smoothed by G_tau; otherwise it reduces to the sampled Gaussian.
class ChannelKernel {
 public:
  ChannelKernel(const GaussianChannel& ch, const GridLayout& layout);

  const GaussianChannel& channel() const { return channel_; }
  const GridLayout& layout() const { return layout_; }

  /// Throws ExtentError when w_in is not negligible on the grid boundary
  /// (zero padding outside the grid must be exact to working precision).
  PhaseSpaceGrid apply(const PhaseSpaceGrid& w_in) const;

 private:
  GaussianChannel channel_;
  GridLayout layout_;
  Eigen::MatrixXd kernel_;
};

PhaseSpaceGrid apply_channel_numeric(const GaussianChannel& ch,
                                     const PhaseSpaceGrid& w_in);

/// 2 pi * integral of W_out^{|m><n|} W^{|k><j|}, fully numerical.
double transition_coefficient_numeric(const GaussianChannel& ch, int m, int n,
                                      int j, int k, const GridLayout& layout);

/// Batch form of transition_coefficient_numeric: reuses the channel kernel,
/// the propagated sources and the projector Wigner functions.
class NumericTransitionOracle {
 public:
  NumericTransitionOracle(const GaussianChannel& ch, const GridLayout& layout);

  double coefficient(int m, int n, int j, int k);

 private:
  const PhaseSpaceGrid& output(int m, int n);
  const PhaseSpaceGrid& projector(int k, int j);

  ChannelKernel kernel_;
  std::map<std::pair<int, int>, PhaseSpaceGrid> outputs_;
  std::map<std::pair<int, int>, PhaseSpaceGrid> projectors_;
};

}  // namespace telegain
