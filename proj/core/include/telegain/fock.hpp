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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace telegain {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Single-mode operator in the number basis {|0>, ..., |cutoff>}.
/// entries(j, k) = <j|A|k>.
class FockOperator {
 public:
  explicit FockOperator(int cutoff);
  FockOperator(int cutoff, ComplexMatrix entries);

  int cutoff() const { return cutoff_; }
  int dim() const { return cutoff_ + 1; }

  const ComplexMatrix& matrix() const { return entries_; }
  ComplexMatrix& matrix() { return entries_; }

  Complex operator()(int j, int k) const { return entries_(j, k); }
  Complex& operator()(int j, int k) { return entries_(j, k); }

  FockOperator adjoint() const;

  FockOperator& operator+=(const FockOperator& other);
  FockOperator& operator*=(Complex s);

 private:
  int cutoff_;
  ComplexMatrix entries_;
};

FockOperator operator+(FockOperator a, const FockOperator& b);
FockOperator operator*(Complex s, FockOperator a);

/// Operator on H_X (x) H_Y with the product basis |j>_X |m>_Y ordered with X
/// as the slow index.
class TwoModeOperator {
 public:
  TwoModeOperator(int cutoff_x, int cutoff_y);
  TwoModeOperator(int cutoff_x, int cutoff_y, ComplexMatrix entries);

  int cutoff_x() const { return cutoff_x_; }
  int cutoff_y() const { return cutoff_y_; }
  int dim() const { return (cutoff_x_ + 1) * (cutoff_y_ + 1); }
  int index(int jx, int my) const { return jx * (cutoff_y_ + 1) + my; }

  const ComplexMatrix& matrix() const { return entries_; }
  ComplexMatrix& matrix() { return entries_; }

  /// <jx, my| A |kx, ny>
  Complex operator()(int jx, int my, int kx, int ny) const {
    return entries_(index(jx, my), index(kx, ny));
  }
  Complex& operator()(int jx, int my, int kx, int ny) {
    return entries_(index(jx, my), index(kx, ny));
  }

  TwoModeOperator adjoint() const;

  TwoModeOperator& operator+=(const TwoModeOperator& other);
  TwoModeOperator& operator*=(Complex s);

 private:
  int cutoff_x_;
  int cutoff_y_;
  ComplexMatrix entries_;
};

/// |m><n| truncated at `cutoff`.
FockOperator basis_op(int m, int n, int cutoff);

TwoModeOperator tensor(const FockOperator& a, const FockOperator& b);

Complex trace(const FockOperator& op);
Complex trace(const TwoModeOperator& op);

/// Divides by the trace; fails when |trace| < 1e-14.
FockOperator normalize(FockOperator op);
TwoModeOperator normalize(TwoModeOperator op);

/// Beam-splitter unitary U with U a_X^+ U^+ = conj(beta) a_X^+ - alpha a_Y^+
/// and U a_Y^+ U^+ = conj(alpha) a_X^+ + beta a_Y^+, restricted to the
/// total-photon-number block `total`. Entry (p, j) is
/// <p, total-p| U |j, total-j>.
ComplexMatrix beam_splitter_block(Complex alpha, Complex beta, int total);

/// The same unitary on the (cutoff+1)^2 product space. Blocks with total
/// photon number <= cutoff are complete and exactly unitary; higher blocks
/// are clipped by the per-mode truncation.
TwoModeOperator beam_splitter(Complex alpha, Complex beta, int cutoff);

/// U rho U^+
TwoModeOperator conjugate_by(const TwoModeOperator& u,
                             const TwoModeOperator& rho);

/// entries'[(j,m),(k,n)] = entries[(k,m),(j,n)]
TwoModeOperator partial_transpose_x(const TwoModeOperator& rho);

/// Ascending eigenvalues. The input must be Hermitian to 1e-8 (max-abs of
/// A - A^+); it is symmetrized before solving.
std::vector<double> eigvals_hermitian(const ComplexMatrix& op);
std::vector<double> eigvals_hermitian(const FockOperator& op);
std::vector<double> eigvals_hermitian(const TwoModeOperator& op);

/// Throws InvalidStateError unless `rho` is Hermitian (1e-10), has real trace
/// in [1 - 1e-9, 1 + 1e-10], and eigenvalues >= -1e-10.
void check_density(const ComplexMatrix& rho, const char* what = "operator");

/// [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2, clamped to [0, 1].
double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);
double uhlmann_fidelity(const FockOperator& rho, const FockOperator& sigma);
double uhlmann_fidelity(const TwoModeOperator& rho,
                        const TwoModeOperator& sigma);

}  // namespace telegain
