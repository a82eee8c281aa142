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

#include "telegain/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "telegain/errors.hpp"

namespace telegain {
namespace {

void require_cutoff(int cutoff) {
  if (cutoff < 0) {
    throw IndexError("cutoff must be >= 0, got " + std::to_string(cutoff));
  }
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::SelfAdjointEigenSolver<ComplexMatrix> solve_hermitian(
    const ComplexMatrix& a, Eigen::DecompositionOptions opts) {
  const ComplexMatrix sym = (a + a.adjoint()) / 2.0;
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(sym, opts);
}

// Eigenvalues below this fraction of the largest are treated as zero in
// fidelity square roots; rounding noise would otherwise enter at its sqrt.
constexpr double kRankFloor = 1e-12;

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double rel_floor) {
  const auto es = solve_hermitian(a, Eigen::ComputeEigenvectors);
  const double floor = rel_floor * es.eigenvalues().cwiseAbs().maxCoeff();
  const Eigen::VectorXd root = es.eigenvalues().unaryExpr(
      [floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

void require_normalized(Complex alpha, Complex beta) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw DomainError("beam splitter needs |alpha|^2 + |beta|^2 = 1, got " +
                      std::to_string(norm));
  }
}

// Hermitian H with exp(iH) equal to the one-photon block
// [[conj(beta), conj(alpha)], [-alpha, beta]].
Eigen::Matrix2cd one_photon_generator(Complex alpha, Complex beta) {
  Eigen::Matrix2cd m;
  m << std::conj(beta), std::conj(alpha), -alpha, beta;
  const Eigen::ComplexSchur<Eigen::Matrix2cd> schur(m);
  const Eigen::Vector2cd phase(std::arg(schur.matrixT()(0, 0)),
                               std::arg(schur.matrixT()(1, 1)));
  const Eigen::Matrix2cd h =
      schur.matrixU() * phase.asDiagonal() * schur.matrixU().adjoint();
  return (h + h.adjoint()) / 2.0;
}

// exp(iK) with K the restriction of sum_ab H_ab a_a^+ a_b to the block of
// total photon number n; K is tridiagonal in |p, n-p>.
ComplexMatrix block_from_generator(const Eigen::Matrix2cd& h, int n) {
  ComplexMatrix k = ComplexMatrix::Zero(n + 1, n + 1);
  for (int p = 0; p <= n; ++p) {
    k(p, p) = h(0, 0) * static_cast<double>(p) + h(1, 1) * static_cast<double>(n - p);
    if (p < n) {
      const double w = std::sqrt((p + 1.0) * (n - p));
      k(p + 1, p) = h(0, 1) * w;
      k(p, p + 1) = h(1, 0) * w;
    }
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(k);
  const Eigen::VectorXcd phases =
      (Complex(0.0, 1.0) * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

FockOperator::FockOperator(int cutoff)
    : cutoff_(cutoff),
      entries_(ComplexMatrix::Zero(std::max(cutoff, 0) + 1,
                                   std::max(cutoff, 0) + 1)) {
  require_cutoff(cutoff);
}

FockOperator::FockOperator(int cutoff, ComplexMatrix entries)
    : cutoff_(cutoff), entries_(std::move(entries)) {
  require_cutoff(cutoff);
  if (entries_.rows() != cutoff + 1 || entries_.cols() != cutoff + 1) {
    throw MismatchError("matrix shape does not match cutoff " +
                        std::to_string(cutoff));
  }
}

FockOperator FockOperator::adjoint() const {
  return {cutoff_, entries_.adjoint()};
}

FockOperator& FockOperator::operator+=(const FockOperator& other) {
  if (other.cutoff_ != cutoff_) throw MismatchError("cutoff mismatch");
  entries_ += other.entries_;
  return *this;
}

FockOperator& FockOperator::operator*=(Complex s) {
  entries_ *= s;
  return *this;
}

FockOperator operator+(FockOperator a, const FockOperator& b) {
  a += b;
  return a;
}

FockOperator operator*(Complex s, FockOperator a) {
  a *= s;
  return a;
}

TwoModeOperator::TwoModeOperator(int cutoff_x, int cutoff_y)
    : cutoff_x_(cutoff_x), cutoff_y_(cutoff_y) {
  require_cutoff(cutoff_x);
  require_cutoff(cutoff_y);
  entries_ = ComplexMatrix::Zero(dim(), dim());
}

TwoModeOperator::TwoModeOperator(int cutoff_x, int cutoff_y,
                                 ComplexMatrix entries)
    : cutoff_x_(cutoff_x), cutoff_y_(cutoff_y), entries_(std::move(entries)) {
  require_cutoff(cutoff_x);
  require_cutoff(cutoff_y);
  if (entries_.rows() != dim() || entries_.cols() != dim()) {
    throw MismatchError("matrix shape does not match cutoffs");
  }
}

TwoModeOperator TwoModeOperator::adjoint() const {
  return {cutoff_x_, cutoff_y_, entries_.adjoint()};
}

TwoModeOperator& TwoModeOperator::operator+=(const TwoModeOperator& other) {
  if (other.cutoff_x_ != cutoff_x_ || other.cutoff_y_ != cutoff_y_) {
    throw MismatchError("cutoff mismatch");
  }
  entries_ += other.entries_;
  return *this;
}

TwoModeOperator& TwoModeOperator::operator*=(Complex s) {
  entries_ *= s;
  return *this;
}

FockOperator basis_op(int m, int n, int cutoff) {
  require_cutoff(cutoff);
  if (m < 0 || n < 0 || m > cutoff || n > cutoff) {
    throw IndexError("basis index (" + std::to_string(m) + ", " +
                     std::to_string(n) + ") beyond cutoff " +
                     std::to_string(cutoff));
  }
  FockOperator op(cutoff);
  op(m, n) = 1.0;
  return op;
}

TwoModeOperator tensor(const FockOperator& a, const FockOperator& b) {
  TwoModeOperator out(a.cutoff(), b.cutoff());
  for (int j = 0; j < a.dim(); ++j) {
    for (int k = 0; k < a.dim(); ++k) {
      const Complex ajk = a(j, k);
      if (ajk == Complex(0.0)) continue;
      out.matrix().block(out.index(j, 0), out.index(k, 0), b.dim(), b.dim()) =
          ajk * b.matrix();
    }
  }
  return out;
}

Complex trace(const FockOperator& op) { return op.matrix().trace(); }
Complex trace(const TwoModeOperator& op) { return op.matrix().trace(); }

FockOperator normalize(FockOperator op) {
  const Complex t = trace(op);
  if (std::abs(t) < 1e-14) throw DegenerateError("cannot normalize: trace ~ 0");
  op *= 1.0 / t;
  return op;
}

TwoModeOperator normalize(TwoModeOperator op) {
  const Complex t = trace(op);
  if (std::abs(t) < 1e-14) throw DegenerateError("cannot normalize: trace ~ 0");
  op *= 1.0 / t;
  return op;
}

ComplexMatrix beam_splitter_block(Complex alpha, Complex beta, int total) {
  require_normalized(alpha, beta);
  if (total < 0) throw IndexError("photon-number block must be >= 0");
  return block_from_generator(one_photon_generator(alpha, beta), total);
}

TwoModeOperator beam_splitter(Complex alpha, Complex beta, int cutoff) {
  require_normalized(alpha, beta);
  require_cutoff(cutoff);
  const Eigen::Matrix2cd h = one_photon_generator(alpha, beta);
  TwoModeOperator u(cutoff, cutoff);
  for (int n = 0; n <= 2 * cutoff; ++n) {
    const ComplexMatrix block = block_from_generator(h, n);
    const int lo = std::max(0, n - cutoff);
    const int hi = std::min(n, cutoff);
    for (int p = lo; p <= hi; ++p) {
      for (int j = lo; j <= hi; ++j) {
        u(p, n - p, j, n - j) = block(p, j);
      }
    }
  }
  return u;
}

TwoModeOperator conjugate_by(const TwoModeOperator& u,
                             const TwoModeOperator& rho) {
  if (u.cutoff_x() != rho.cutoff_x() || u.cutoff_y() != rho.cutoff_y()) {
    throw MismatchError("unitary and operator cutoffs differ");
  }
  return {rho.cutoff_x(), rho.cutoff_y(),
          u.matrix() * rho.matrix() * u.matrix().adjoint()};
}

TwoModeOperator partial_transpose_x(const TwoModeOperator& rho) {
  TwoModeOperator out(rho.cutoff_x(), rho.cutoff_y());
  const int nx = rho.cutoff_x() + 1;
  const int ny = rho.cutoff_y() + 1;
  for (int j = 0; j < nx; ++j)
    for (int k = 0; k < nx; ++k)
      for (int m = 0; m < ny; ++m)
        for (int n = 0; n < ny; ++n) out(j, m, k, n) = rho(k, m, j, n);
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& op) {
  if (op.rows() != op.cols()) throw MismatchError("matrix is not square");
  const double defect = hermiticity_defect(op);
  if (defect > 1e-8) {
    throw InvalidStateError("operator is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }
  const auto es = solve_hermitian(op, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> eigvals_hermitian(const FockOperator& op) {
  return eigvals_hermitian(op.matrix());
}

std::vector<double> eigvals_hermitian(const TwoModeOperator& op) {
  return eigvals_hermitian(op.matrix());
}

void check_density(const ComplexMatrix& rho, const char* what) {
  const std::string name(what);
  if (rho.rows() != rho.cols()) throw MismatchError(name + " is not square");
  const double defect = hermiticity_defect(rho);
  if (defect > 1e-10) {
    throw InvalidStateError(name + " is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }
  const Complex t = rho.trace();
  if (std::abs(t.imag()) > 1e-10 || t.real() < 1.0 - 1e-9 ||
      t.real() > 1.0 + 1e-10) {
    throw InvalidStateError(name + " trace " + std::to_string(t.real()) +
                            " outside [1 - 1e-9, 1]");
  }
  const auto es = solve_hermitian(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().size() > 0 && es.eigenvalues()(0) < -1e-10) {
    throw InvalidStateError(name + " has negative eigenvalue " +
                            std::to_string(es.eigenvalues()(0)));
  }
}

double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw MismatchError("fidelity operands have different dimensions");
  }
  check_density(rho, "rho");
  check_density(sigma, "sigma");
  const ComplexMatrix root = psd_sqrt(rho, kRankFloor);
  const ComplexMatrix inner = root * sigma * root;
  const auto es = solve_hermitian(inner, Eigen::EigenvaluesOnly);
  const double floor = kRankFloor * es.eigenvalues().cwiseAbs().maxCoeff();
  double tr = 0.0;
  for (const double v : es.eigenvalues()) tr += v > floor ? std::sqrt(v) : 0.0;
  return std::clamp(tr * tr, 0.0, 1.0);
}

double uhlmann_fidelity(const FockOperator& rho, const FockOperator& sigma) {
  if (rho.cutoff() != sigma.cutoff()) throw MismatchError("cutoff mismatch");
  return uhlmann_fidelity(rho.matrix(), sigma.matrix());
}

double uhlmann_fidelity(const TwoModeOperator& rho,
                        const TwoModeOperator& sigma) {
  if (rho.cutoff_x() != sigma.cutoff_x() ||
      rho.cutoff_y() != sigma.cutoff_y()) {
    throw MismatchError("cutoff mismatch");
  }
  return uhlmann_fidelity(rho.matrix(), sigma.matrix());
}

}  // namespace telegain
