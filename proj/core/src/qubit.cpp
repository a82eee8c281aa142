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

#include "telegain/qubit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "telegain/errors.hpp"
#include "telegain/transition.hpp"

namespace telegain {
namespace {

// U^+ D U on the (cutoff+1)^2 box, with D diagonal in the product basis and
// given by d(nx, ny) for any photon numbers (including ones outside the box).
TwoModeOperator rotate_diagonal(Complex alpha, Complex beta, int cutoff,
                                const std::function<double(int, int)>& d) {
  TwoModeOperator out(cutoff, cutoff);
  for (int n = 0; n <= 2 * cutoff; ++n) {
    const ComplexMatrix b = beam_splitter_block(alpha, beta, n);
    Eigen::VectorXd diag(n + 1);
    for (int p = 0; p <= n; ++p) diag(p) = d(p, n - p);
    if (diag.isZero(0.0)) continue;
    const ComplexMatrix rotated = b.adjoint() * diag.asDiagonal() * b;
    const int lo = std::max(0, n - cutoff);
    const int hi = std::min(n, cutoff);
    for (int ax = lo; ax <= hi; ++ax) {
      for (int bx = lo; bx <= hi; ++bx) {
        out(ax, n - ax, bx, n - bx) = rotated(ax, bx);
      }
    }
  }
  return out;
}

void require_single_photon_model(const DualRailInput& in) {
  if (in.eta2 != 0.0) {
    throw DomainError("closed-form qubit metrics need eta2 = 0");
  }
}

}  // namespace

void DualRailInput::validate() const {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw DomainError("qubit amplitudes need |alpha|^2 + |beta|^2 = 1, got " +
                      std::to_string(norm));
  }
  if (!(eta1 >= 0.0) || !(eta2 >= 0.0) || eta1 + eta2 > 1.0 + 1e-15) {
    throw DomainError("need eta1, eta2 >= 0 and eta1 + eta2 <= 1");
  }
}

TwoModeOperator build_input(const DualRailInput& in, int cutoff) {
  in.validate();
  const int needed = in.eta2 > 0.0 ? 2 : 1;
  if (cutoff < needed) {
    throw IndexError("input needs a cutoff of at least " +
                     std::to_string(needed));
  }
  const std::array<double, 3> w{1.0 - in.eta1 - in.eta2, in.eta1, in.eta2};
  return rotate_diagonal(in.alpha, in.beta, cutoff, [&](int nx, int ny) {
    return ny == 0 && nx <= 2 ? w[nx] : 0.0;
  });
}

TwoModeOperator teleport_dual_rail(const DualRailInput& in,
                                   const GaussianChannel& ch, int cutoff) {
  in.validate();
  if (cutoff < 0) throw IndexError("cutoff must be >= 0");
  const double eta0 = 1.0 - in.eta1 - in.eta2;
  return rotate_diagonal(in.alpha, in.beta, cutoff, [&](int nx, int ny) {
    double x = eta0 * transition_coefficient(ch, 0, 0, nx, nx) +
               in.eta1 * transition_coefficient(ch, 1, 1, nx, nx);
    if (in.eta2 != 0.0) x += in.eta2 * transition_coefficient(ch, 2, 2, nx, nx);
    return x * transition_coefficient(ch, 0, 0, ny, ny);
  });
}

namespace {

// Output populations in the beam-splitter frame: |1,0> carries the photon
// on the correct rail, |0,1> on the flipped rail, |0,0> is the vacuum.
struct FramePopulations {
  double vacuum_in;   // 1 - eta
  double photon_in;   // eta
  double vacuum_out;  // |0,0>
  double correct;     // |1,0>
  double flipped;     // |0,1>
};

FramePopulations frame_populations(const DualRailInput& in,
                                   const GaussianChannel& ch) {
  in.validate();
  require_single_photon_model(in);
  const double eta = in.eta1;
  const double t00_00 = transition_coefficient(ch, 0, 0, 0, 0);
  const double t00_11 = transition_coefficient(ch, 0, 0, 1, 1);
  const double t11_00 = transition_coefficient(ch, 1, 1, 0, 0);
  const double t11_11 = transition_coefficient(ch, 1, 1, 1, 1);
  const double x_empty = eta * t11_00 + (1.0 - eta) * t00_00;
  const double x_photon = eta * t11_11 + (1.0 - eta) * t00_11;
  return {1.0 - eta, eta, t00_00 * x_empty, t00_00 * x_photon,
          t00_11 * x_empty};
}

}  // namespace

double f_state(const DualRailInput& in, const GaussianChannel& ch) {
  const FramePopulations f = frame_populations(in, ch);
  const double amp = std::sqrt(std::max(0.0, f.photon_in * f.correct)) +
                     std::sqrt(std::max(0.0, f.vacuum_in * f.vacuum_out));
  return amp * amp;
}

QubitMetrics f_qubit(const DualRailInput& in, const GaussianChannel& ch) {
  const FramePopulations f = frame_populations(in, ch);
  QubitMetrics m;
  m.f_state = f_state(in, ch);
  m.p_trans = f.correct;
  m.p_flip = f.flipped;
  m.p_qubit = m.p_trans + m.p_flip;
  if (m.p_qubit < 1e-15) {
    throw DegenerateError("qubit subspace is empty (p_qubit = " +
                          std::to_string(m.p_qubit) + ")");
  }
  m.f_qubit = m.p_trans / m.p_qubit;
  return m;
}

const char* to_string(FidelityPath path) {
  return path == FidelityPath::kClosedForm ? "closed-form" : "uhlmann";
}

QubitEvaluation evaluate_qubit(const DualRailInput& in,
                               const GaussianChannel& ch) {
  in.validate();
  if (in.eta2 == 0.0) return {f_qubit(in, ch), FidelityPath::kClosedForm};

  // The input lives in the blocks with at most two photons and the output is
  // block diagonal, so the fidelity only sees those blocks. Entries there are
  // exact at cutoff 2 because every block is rotated whole.
  const TwoModeOperator rho = build_input(in, 2);
  const TwoModeOperator sigma = teleport_dual_rail(in, ch, 2);
  std::vector<int> support;
  for (int n = 0; n <= 2; ++n)
    for (int p = 0; p <= n; ++p) support.push_back(rho.index(p, n - p));
  const auto sub = [&](const TwoModeOperator& op) {
    ComplexMatrix m(support.size(), support.size());
    for (std::size_t a = 0; a < support.size(); ++a)
      for (std::size_t b = 0; b < support.size(); ++b)
        m(a, b) = op.matrix()(support[a], support[b]);
    return m;
  };

  QubitMetrics m;
  // F is linear under rescaling of sigma, so the projected output can be
  // renormalized and the weight restored afterwards.
  const ComplexMatrix sigma_sub = sub(sigma);
  const double weight = sigma_sub.trace().real();
  m.f_state = weight > 0.0
                  ? weight * uhlmann_fidelity(sub(rho), sigma_sub / weight)
                  : 0.0;

  // |psi> = U^+|1,0> is the qubit being sent, |psi_perp> = U^+|0,1>.
  const ComplexMatrix b1 = beam_splitter_block(in.alpha, in.beta, 1);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(sigma.dim());
  Eigen::VectorXcd perp = Eigen::VectorXcd::Zero(sigma.dim());
  for (int p = 0; p <= 1; ++p) {
    psi(sigma.index(p, 1 - p)) = std::conj(b1(1, p));
    perp(sigma.index(p, 1 - p)) = std::conj(b1(0, p));
  }
  m.p_trans = (psi.adjoint() * sigma.matrix() * psi)(0, 0).real();
  m.p_flip = (perp.adjoint() * sigma.matrix() * perp)(0, 0).real();
  m.p_qubit = m.p_trans + m.p_flip;
  if (m.p_qubit < 1e-15) {
    throw DegenerateError("qubit subspace is empty (p_qubit = " +
                          std::to_string(m.p_qubit) + ")");
  }
  m.f_qubit = m.p_trans / m.p_qubit;
  return {m, FidelityPath::kUhlmann};
}

}  // namespace telegain
