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

#include "netdistill/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "netdistill/errors.hpp"

namespace netdistill {

namespace {

void check_dims(const Dims& dims) {
  if (dims.empty()) throw InputError("state needs at least one tensor factor");
  for (std::size_t d : dims)
    if (d < 2) throw InputError("every factor dimension must be >= 2");
  if (total_dimension(dims) > tol::kMaxDenseDimension) {
    throw CapacityError("total dimension " + std::to_string(total_dimension(dims)) + " exceeds the dense limit of " +
                        std::to_string(tol::kMaxDenseDimension));
  }
}

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t s = 1;
  for (std::size_t f = dims.size(); f-- > 0;) {
    strides[f] = s;
    s *= dims[f];
  }
  return strides;
}

std::vector<bool> factor_mask(const Dims& dims, std::span<const std::size_t> factors) {
  std::vector<bool> mask(dims.size(), false);
  for (std::size_t f : factors) {
    if (f >= dims.size()) throw InputError("factor index " + std::to_string(f) + " out of range");
    if (mask[f]) throw InputError("factor index " + std::to_string(f) + " listed twice");
    mask[f] = true;
  }
  return mask;
}

// For every basis index, the part of it contributed by the masked factors.
std::vector<std::size_t> masked_part(const Dims& dims, const std::vector<bool>& mask) {
  const auto strides = strides_of(dims);
  const std::size_t n = total_dimension(dims);
  std::vector<std::size_t> part(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t acc = 0;
    for (std::size_t f = 0; f < dims.size(); ++f)
      if (mask[f]) acc += ((i / strides[f]) % dims[f]) * strides[f];
    part[i] = acc;
  }
  return part;
}

double hermiticity_defect(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

Matrix transpose_factors(const Dims& dims, const Matrix& in, std::span<const std::size_t> factors) {
  const auto mask = factor_mask(dims, factors);
  const auto part = masked_part(dims, mask);
  const std::size_t n = total_dimension(dims);
  Matrix out(in.rows(), in.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t nr = r - part[r] + part[c];
      const std::size_t nc = c - part[c] + part[r];
      out(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(nc)) =
          in(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

}  // namespace

std::size_t total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

PureState::PureState(Dims dims, Vector amplitudes) : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  check_dims(dims_);
  if (static_cast<std::size_t>(amplitudes_.size()) != total_dimension(dims_)) {
    throw InputError("amplitude vector size does not match dims");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > tol::kInvariant) throw InvariantError("pure state is not normalised");
}

DensityOperator::DensityOperator(Trusted, Dims dims, Matrix matrix) : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  check_dims(dims_);
  const auto n = static_cast<Eigen::Index>(total_dimension(dims_));
  if (matrix_.rows() != n || matrix_.cols() != n) throw InputError("matrix size does not match dims");
  if (hermiticity_defect(matrix_) > tol::kInvariant) throw InvariantError("density operator is not Hermitian");
  if (std::abs(matrix_.trace() - Complex(1.0)) > tol::kInvariant) throw InvariantError("density operator trace is not 1");
}

DensityOperator::DensityOperator(Dims dims, Matrix matrix) : DensityOperator(Trusted{}, std::move(dims), std::move(matrix)) {
  const auto problem = check_invariants();
  if (!problem.empty()) throw InvariantError(problem);
}

DensityOperator::DensityOperator(const PureState& psi) : DensityOperator(Trusted{}, psi.dims(), psi.projector()) {}

DensityOperator DensityOperator::unchecked(Dims dims, Matrix matrix) {
  return DensityOperator(Trusted{}, std::move(dims), std::move(matrix));
}

std::string DensityOperator::check_invariants(double herm_tol, double psd_tol) const {
  if (hermiticity_defect(matrix_) > herm_tol) return "not Hermitian";
  if (std::abs(matrix_.trace() - Complex(1.0)) > herm_tol) return "trace differs from 1";
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -psd_tol) return "not positive semidefinite";
  return {};
}

Eigen::VectorXd HermitianOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double HermitianOperator::min_eigenvalue() const { return eigenvalues().minCoeff(); }

PureState max_entangled(std::size_t d) {
  if (d < 2) throw InputError("dimension must be >= 2");
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(d * d));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) psi(static_cast<Eigen::Index>(i * d + i)) = amp;
  return PureState({d, d}, psi);
}

DensityOperator isotropic(std::size_t d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("visibility must lie in [0, 1]");
  const Matrix phi = max_entangled(d).projector();
  const auto n = static_cast<Eigen::Index>(d * d);
  Matrix rho = p * phi + ((1.0 - p) / static_cast<double>(d * d)) * Matrix::Identity(n, n);
  return DensityOperator::unchecked({d, d}, std::move(rho));
}

PureState ghz(std::size_t n) {
  if (n < 2) throw InputError("GHZ state needs n >= 2 qubits");
  return psi_basis(n, 0, Sign::kPlus);
}

PureState psi_basis(std::size_t n, std::size_t j, Sign sign) {
  if (n < 2) throw InputError("psi basis needs n >= 2 qubits");
  if (n > 12) throw CapacityError("psi basis limited to 12 qubits");
  const std::size_t half = std::size_t{1} << (n - 1);
  if (j >= half) throw InputError("index j out of range [0, 2^{n-1})");
  const std::size_t dim = half << 1;
  // |j_1 ... j_{n-1} 0> has index 2j; its bitwise complement is dim - 1 - 2j.
  const std::size_t lo = 2 * j;
  const std::size_t hi = dim - 1 - lo;
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(dim));
  const double amp = std::sqrt(0.5);
  psi(static_cast<Eigen::Index>(lo)) = amp;
  psi(static_cast<Eigen::Index>(hi)) = sign == Sign::kPlus ? amp : -amp;
  return PureState(Dims(n, 2), psi);
}

DensityOperator maximally_mixed(const Dims& dims) {
  check_dims(dims);
  const auto n = static_cast<Eigen::Index>(total_dimension(dims));
  return DensityOperator::unchecked(dims, Matrix::Identity(n, n) / static_cast<double>(n));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  check_dims(dims);
  const Matrix& A = a.matrix();
  const Matrix& B = b.matrix();
  Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return DensityOperator::unchecked(std::move(dims), std::move(out));
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> factors) {
  const Dims& dims = rho.dims();
  const auto traced = factor_mask(dims, factors);
  Dims kept_dims;
  std::vector<bool> kept(dims.size());
  for (std::size_t f = 0; f < dims.size(); ++f) {
    kept[f] = !traced[f];
    if (kept[f]) kept_dims.push_back(dims[f]);
  }
  if (kept_dims.empty()) throw InputError("cannot trace out every factor");
  const auto traced_part = masked_part(dims, traced);
  // Index of the kept digits, read in the reduced space.
  const auto strides = strides_of(dims);
  const auto kept_strides = strides_of(kept_dims);
  const std::size_t n = total_dimension(dims);
  std::vector<std::size_t> reduced(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t acc = 0;
    for (std::size_t f = 0, g = 0; f < dims.size(); ++f) {
      if (!kept[f]) continue;
      acc += ((i / strides[f]) % dims[f]) * kept_strides[g++];
    }
    reduced[i] = acc;
  }
  const auto m = static_cast<Eigen::Index>(total_dimension(kept_dims));
  Matrix out = Matrix::Zero(m, m);
  const Matrix& in = rho.matrix();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (traced_part[r] == traced_part[c])
        out(static_cast<Eigen::Index>(reduced[r]), static_cast<Eigen::Index>(reduced[c])) +=
            in(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return DensityOperator::unchecked(std::move(kept_dims), std::move(out));
}

HermitianOperator partial_transpose(const DensityOperator& rho, std::span<const std::size_t> factors) {
  return {rho.dims(), transpose_factors(rho.dims(), rho.matrix(), factors)};
}

HermitianOperator partial_transpose(const HermitianOperator& op, std::span<const std::size_t> factors) {
  return {op.dims, transpose_factors(op.dims, op.matrix, factors)};
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  Eigen::VectorXd vals = solver.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol::kSqrtClamp) throw InvariantError("square root of a matrix with a negative eigenvalue");
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dimension() != sigma.dimension()) throw InputError("fidelity of operators with different dimensions");
  const Matrix root = psd_sqrt(rho.matrix());
  Matrix inner = root * sigma.matrix() * root;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(inner, Eigen::EigenvaluesOnly);
  double trace_root = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) trace_root += std::sqrt(std::max(solver.eigenvalues()(i), 0.0));
  return std::clamp(trace_root * trace_root, 0.0, 1.0);
}

double fidelity(const PureState& psi, const DensityOperator& sigma) {
  if (psi.dimension() != sigma.dimension()) throw InputError("fidelity of operators with different dimensions");
  const Complex value = psi.amplitudes().dot(sigma.matrix() * psi.amplitudes());
  return std::clamp(value.real(), 0.0, 1.0);
}

bool is_ppt(const DensityOperator& rho, std::span<const std::size_t> factors, double tol) {
  return partial_transpose(rho, factors).min_eigenvalue() >= -tol;
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << '(' << m(r, c).real() << ',' << m(r, c).imag() << ')';
    }
    out << '\n';
  }
}

}  // namespace netdistill
