// Copyright 2026 The netdistill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "netdistill/tolerances.hpp"

namespace netdistill {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Local dimensions of the tensor factors, left to right. Factor 0 is the most
/// significant digit of a basis index.
using Dims = std::vector<std::size_t>;

std::size_t total_dimension(const Dims& dims);

/// Unit vector on a labelled tensor-product space.
class PureState {
 public:
  /// Throws InputError on bad dims, InvariantError if the norm is not 1.
  PureState(Dims dims, Vector amplitudes);

  const Dims& dims() const { return dims_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  Matrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Dims dims_;
  Vector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on a labelled
/// tensor-product space.
class DensityOperator {
 public:
  /// Checks all three invariants (PSD via an eigendecomposition).
  DensityOperator(Dims dims, Matrix matrix);
  explicit DensityOperator(const PureState& psi);

  /// Skips the PSD check, keeping the O(N^2) Hermiticity and trace checks.
  /// For results of positivity-preserving maps.
  static DensityOperator unchecked(Dims dims, Matrix matrix);

  const Dims& dims() const { return dims_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }

  /// Returns the first violated invariant, or an empty string.
  std::string check_invariants(double herm_tol = tol::kInvariant, double psd_tol = tol::kPsd) const;

 private:
  struct Trusted {};
  DensityOperator(Trusted, Dims dims, Matrix matrix);

  Dims dims_;
  Matrix matrix_;
};

/// Hermitian matrix that need not be positive (partial transposes).
struct HermitianOperator {
  Dims dims;
  Matrix matrix;

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;
  double min_eigenvalue() const;
};

/// |phi+> = d^{-1/2} sum_i |ii>.
PureState max_entangled(std::size_t d);
/// p |phi+><phi+| + (1 - p) 1/d^2.
DensityOperator isotropic(std::size_t d, double p);
/// (|0...0> + |1...1>) / sqrt(2) on n qubits.
PureState ghz(std::size_t n);

enum class Sign { kPlus, kMinus };

/// (|j_1 ... j_{n-1} 0> +- |~j_1 ... ~j_{n-1} 1>) / sqrt(2), with j_1 the most
/// significant bit of j. Requires n >= 2 and 0 <= j < 2^{n-1}.
PureState psi_basis(std::size_t n, std::size_t j, Sign sign);

DensityOperator maximally_mixed(const Dims& dims);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
/// Traces out the listed factors.
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> factors);

/// Transposes the listed factors: |i j><k l| -> |k j><i l| on those factors.
HermitianOperator partial_transpose(const DensityOperator& rho, std::span<const std::size_t> factors);
HermitianOperator partial_transpose(const HermitianOperator& op, std::span<const std::size_t> factors);

/// Positive square root via eigendecomposition; eigenvalues in
/// [-kSqrtClamp, 0) are clamped to zero.
Matrix psd_sqrt(const Matrix& m);

/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
/// <psi|sigma|psi>, clamped to [0, 1].
double fidelity(const PureState& psi, const DensityOperator& sigma);

/// Min eigenvalue of the partial transpose is >= -tol.
bool is_ppt(const DensityOperator& rho, std::span<const std::size_t> factors, double tol = tol::kPsd);

/// Row-major "(re,im)" pairs, one row per line.
void print_matrix(std::ostream& out, const Matrix& m);

}  // namespace netdistill
