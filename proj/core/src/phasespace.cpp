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

#include "telegain/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "telegain/errors.hpp"

namespace telegain {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxWignerIndex = 30;
constexpr double kBoundaryTolerance = 1e-10;

// Above this value of tau * Omega^2 / 2 the Gaussian transfer function is
// below e^-36 at the Nyquist frequency and the band limit is irrelevant.
constexpr double kBandLimitExponent = 36.0;

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double boundary_max_abs(const ComplexMatrix& m) {
  const auto n = m.rows() - 1;
  return std::max({m.row(0).cwiseAbs().maxCoeff(), m.row(n).cwiseAbs().maxCoeff(),
                   m.col(0).cwiseAbs().maxCoeff(), m.col(n).cwiseAbs().maxCoeff()});
}

void require_contained(const PhaseSpaceGrid& w, const char* what) {
  const double peak = max_abs(w.values());
  if (peak == 0.0) return;
  const double edge = boundary_max_abs(w.values());
  if (edge > kBoundaryTolerance * peak) {
    throw ExtentError(std::string(what) + " is not contained in the grid: " +
                      "boundary/peak = " + std::to_string(edge / peak) +
                      " at half extent " +
                      std::to_string(w.layout().half_extent));
  }
}

// (h / pi) * integral_0^Omega exp(-tau w^2 / 2) cos(w d) dw, Omega = pi / h.
// Composite 20-point Gauss-Legendre with at most one period per panel.
double band_limited_kernel(double d, double tau, double h) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double omega = kPi / h;
  const int panels = 1 + static_cast<int>(std::ceil(std::abs(d) / (2.0 * h)));
  const double width = omega / panels;
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  double sum = 0.0;
  for (int s = 0; s < panels; ++s) {
    const double mid = (s + 0.5) * width;
    const double half = 0.5 * width;
    // even-order rule: only the positive half of the symmetric nodes is stored
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double offs = half * nodes[i];
      for (const double w : {mid - offs, mid + offs}) {
        sum += half * weights[i] * std::exp(-0.5 * tau * w * w) * std::cos(w * d);
      }
    }
  }
  return h / kPi * sum;
}

}  // namespace

void GridLayout::validate() const {
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    throw DomainError("grid half extent must be > 0");
  }
  if (points < 3 || points % 2 == 0) {
    throw DomainError("grid needs an odd number (>= 3) of points per axis, got " +
                      std::to_string(points));
  }
}

PhaseSpaceGrid::PhaseSpaceGrid(const GridLayout& layout) : layout_(layout) {
  layout_.validate();
  values_ = ComplexMatrix::Zero(layout.points, layout.points);
}

PhaseSpaceGrid::PhaseSpaceGrid(const GridLayout& layout, ComplexMatrix values)
    : layout_(layout), values_(std::move(values)) {
  layout_.validate();
  if (values_.rows() != layout.points || values_.cols() != layout.points) {
    throw MismatchError("grid values do not match the layout");
  }
}

Complex PhaseSpaceGrid::integral() const {
  const int n = layout_.points;
  const double h = layout_.spacing();
  Complex sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      const double wj = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      sum += wi * wj * values_(i, j);
    }
  }
  return sum * h * h;
}

PhaseSpaceGrid& PhaseSpaceGrid::operator+=(const PhaseSpaceGrid& other) {
  if (!(other.layout_ == layout_)) throw MismatchError("grid layouts differ");
  values_ += other.values_;
  return *this;
}

PhaseSpaceGrid& PhaseSpaceGrid::operator*=(Complex s) {
  values_ *= s;
  return *this;
}

PhaseSpaceGrid wigner_mn(int m, int n, const GridLayout& layout) {
  if (m < 0 || n < 0) throw IndexError("negative photon number");
  if (m > kMaxWignerIndex || n > kMaxWignerIndex) {
    throw DomainError("Wigner functions are limited to photon numbers <= " +
                      std::to_string(kMaxWignerIndex));
  }
  // n > m: swap the indices and mirror p.
  const bool swapped = n > m;
  const int hi = swapped ? n : m;
  const int lo = swapped ? m : n;
  const int diff = hi - lo;
  const double sign = lo % 2 == 0 ? 1.0 : -1.0;
  const double pref =
      sign / kPi * std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)));
  PhaseSpaceGrid out(layout);
  for (int i = 0; i < layout.points; ++i) {
    const double x = layout.coordinate(i);
    for (int j = 0; j < layout.points; ++j) {
      const double p = swapped ? -layout.coordinate(j) : layout.coordinate(j);
      const double r2 = x * x + p * p;
      const Complex z = std::sqrt(2.0) * Complex(x, -p);
      Complex zpow = 1.0;
      for (int e = 0; e < diff; ++e) zpow *= z;
      const double lag = std::assoc_laguerre(static_cast<unsigned>(lo),
                                             static_cast<unsigned>(diff),
                                             2.0 * r2);
      out.values()(i, j) = pref * zpow * lag * std::exp(-r2);
    }
  }
  return out;
}

PhaseSpaceGrid wigner_from_density(const FockOperator& rho,
                                   const GridLayout& layout) {
  PhaseSpaceGrid out(layout);
  for (int m = 0; m < rho.dim(); ++m) {
    for (int n = 0; n < rho.dim(); ++n) {
      const Complex v = rho(m, n);
      if (v == Complex(0.0)) continue;
      PhaseSpaceGrid term = wigner_mn(m, n, layout);
      term *= v;
      out += term;
    }
  }
  require_contained(out, "Wigner function");
  return out;
}

Complex overlap(const PhaseSpaceGrid& a, const PhaseSpaceGrid& b) {
  if (!(a.layout() == b.layout())) throw MismatchError("grid layouts differ");
  const PhaseSpaceGrid product(a.layout(),
                               a.values().cwiseProduct(b.values()));
  return 2.0 * kPi * product.integral();
}

ChannelKernel::ChannelKernel(const GaussianChannel& ch, const GridLayout& layout)
    : channel_(ch), layout_(layout) {
  layout_.validate();
  const int n = layout.points;
  const double h = layout.spacing();
  const double g = ch.gain();
  const double tau = ch.tau();
  const double omega = kPi / h;
  kernel_.resize(n, n);
  if (0.5 * tau * omega * omega > kBandLimitExponent) {
    const double norm = h / std::sqrt(2.0 * kPi * tau);
    for (int a = 0; a < n; ++a) {
      const double t = layout.coordinate(a) / g;
      for (int i = 0; i < n; ++i) {
        const double d = t - layout.coordinate(i);
        kernel_(a, i) = norm * std::exp(-d * d / (2.0 * tau));
      }
    }
    return;
  }
  if (g == 1.0) {
    // Toeplitz: only 2n - 1 distinct offsets.
    std::vector<double> by_offset(2 * n - 1);
    for (int o = -(n - 1); o <= n - 1; ++o) {
      by_offset[o + n - 1] = band_limited_kernel(o * h, tau, h);
    }
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) kernel_(a, i) = by_offset[a - i + n - 1];
    return;
  }
  for (int a = 0; a < n; ++a) {
    const double t = layout.coordinate(a) / g;
    for (int i = 0; i < n; ++i) {
      kernel_(a, i) = band_limited_kernel(t - layout.coordinate(i), tau, h);
    }
  }
}

PhaseSpaceGrid ChannelKernel::apply(const PhaseSpaceGrid& w_in) const {
  if (!(w_in.layout() == layout_)) throw MismatchError("grid layouts differ");
  require_contained(w_in, "channel input");
  const double scale = 1.0 / (channel_.gain() * channel_.gain());
  const Eigen::MatrixXd re =
      scale * (kernel_ * w_in.values().real() * kernel_.transpose());
  const Eigen::MatrixXd im =
      scale * (kernel_ * w_in.values().imag() * kernel_.transpose());
  ComplexMatrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return {layout_, std::move(out)};
}

PhaseSpaceGrid apply_channel_numeric(const GaussianChannel& ch,
                                     const PhaseSpaceGrid& w_in) {
  return ChannelKernel(ch, w_in.layout()).apply(w_in);
}

double transition_coefficient_numeric(const GaussianChannel& ch, int m, int n,
                                      int j, int k, const GridLayout& layout) {
  NumericTransitionOracle oracle(ch, layout);
  return oracle.coefficient(m, n, j, k);
}

NumericTransitionOracle::NumericTransitionOracle(const GaussianChannel& ch,
                                                 const GridLayout& layout)
    : kernel_(ch, layout) {}

const PhaseSpaceGrid& NumericTransitionOracle::output(int m, int n) {
  const auto key = std::make_pair(m, n);
  auto it = outputs_.find(key);
  if (it == outputs_.end()) {
    it = outputs_
             .emplace(key, kernel_.apply(wigner_mn(m, n, kernel_.layout())))
             .first;
  }
  return it->second;
}

const PhaseSpaceGrid& NumericTransitionOracle::projector(int k, int j) {
  const auto key = std::make_pair(k, j);
  auto it = projectors_.find(key);
  if (it == projectors_.end()) {
    it = projectors_.emplace(key, wigner_mn(k, j, kernel_.layout())).first;
  }
  return it->second;
}

double NumericTransitionOracle::coefficient(int m, int n, int j, int k) {
  return overlap(output(m, n), projector(k, j)).real();
}

}  // namespace telegain
