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

#include "netdistill/channels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "netdistill/errors.hpp"

namespace netdistill {

namespace {

void check_visibility(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("visibility must lie in [0, 1]");
}

std::size_t stride_of(const Dims& dims, std::size_t factor) {
  std::size_t s = 1;
  for (std::size_t f = dims.size(); f-- > factor + 1;) s *= dims[f];
  return s;
}

// Applies T_p to one factor in place of a fresh matrix.
Matrix teleport_factor(const Dims& dims, const Matrix& in, double p, std::size_t factor) {
  if (p == 1.0) return in;
  const std::size_t d = dims[factor];
  const std::size_t s = stride_of(dims, factor);
  const auto n = static_cast<std::size_t>(in.rows());
  Matrix out = p * in;
  const double noise = (1.0 - p) / static_cast<double>(d);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t rf = (r / s) % d;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t cf = (c / s) % d;
      if (rf != cf) continue;
      // Partial trace over the factor at (r, c), then 1/d on the diagonal of that factor.
      const std::size_t r0 = r - rf * s;
      const std::size_t c0 = c - cf * s;
      Complex traced = 0.0;
      for (std::size_t a = 0; a < d; ++a) {
        traced += in(static_cast<Eigen::Index>(r0 + a * s), static_cast<Eigen::Index>(c0 + a * s));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += noise * traced;
    }
  }
  return out;
}

}  // namespace

NoisyTeleportChannel::NoisyTeleportChannel(std::size_t d, double p) : d_(d), p_(p) {
  if (d < 2) throw InputError("channel dimension must be >= 2");
  check_visibility(p);
}

DensityOperator NoisyTeleportChannel::apply(const DensityOperator& rho, std::size_t factor) const {
  if (factor >= rho.dims().size()) throw InputError("factor index " + std::to_string(factor) + " out of range");
  if (rho.dims()[factor] != d_) throw InputError("factor dimension does not match the channel");
  return DensityOperator::unchecked(rho.dims(), teleport_factor(rho.dims(), rho.matrix(), p_, factor));
}

Matrix NoisyTeleportChannel::choi() const {
  const auto d = static_cast<Eigen::Index>(d_);
  Matrix out = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      // Block (i, j) holds T(|i><j|).
      out(i * d + i, j * d + j) += p_;
      if (i == j) {
        for (Eigen::Index a = 0; a < d; ++a) out(i * d + a, i * d + a) += (1.0 - p_) / static_cast<double>(d);
      }
    }
  }
  return out;
}

DensityOperator apply_noisy_teleport(const DensityOperator& rho, double p, std::size_t factor) {
  if (factor >= rho.dims().size()) throw InputError("factor index " + std::to_string(factor) + " out of range");
  return NoisyTeleportChannel(rho.dims()[factor], p).apply(rho, factor);
}

double path_teleport_visibility(double p, std::size_t length) {
  check_visibility(p);
  if (length == 0) throw InputError("path length must be >= 1");
  return std::pow(p, std::ldexp(1.0, static_cast<int>(length) - 1));
}

DensityOperator star_teleport(const DensityOperator& rho, double p) {
  check_visibility(p);
  const Dims& dims = rho.dims();
  if (std::any_of(dims.begin(), dims.end(), [&](std::size_t d) { return d != dims.front(); })) {
    throw InputError("star teleportation needs a common local dimension");
  }
  const std::vector<double> visibilities(dims.size(), p);
  return star_teleport(rho, visibilities);
}

DensityOperator star_teleport(const DensityOperator& rho, std::span<const double> visibilities) {
  if (visibilities.size() != rho.dims().size()) throw InputError("one visibility per factor is required");
  for (double p : visibilities) check_visibility(p);
  Matrix m = rho.matrix();
  for (std::size_t f = 0; f < visibilities.size(); ++f) m = teleport_factor(rho.dims(), m, visibilities[f], f);
  return DensityOperator::unchecked(rho.dims(), std::move(m));
}

Eigen::VectorXd SigmaKC::diagonal() const {
  if (n < 2 || n > 12) throw InputError("sigma_k^C needs 2 <= n <= 12");
  if (subset.empty() || subset.size() >= n) throw InputError("sigma_k^C needs 1 <= |C| < n");
  std::size_t in_c = 0;
  for (std::size_t q : subset) {
    if (q >= n) throw InputError("qubit index out of range");
    in_c |= std::size_t{1} << (n - 1 - q);
  }
  if (static_cast<std::size_t>(std::popcount(in_c)) != subset.size()) throw InputError("repeated qubit in C");
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t outside = (dim - 1) & ~in_c;
  const double weight = std::ldexp(1.0, -static_cast<int>(subset.size() + 1));
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t bits = x & outside;
    if (bits == 0 || bits == outside) diag(static_cast<Eigen::Index>(x)) = weight;
  }
  return diag;
}

DensityOperator sigma_kc(std::size_t n, std::span<const std::size_t> subset) {
  const SigmaKC sigma{n, {subset.begin(), subset.end()}};
  const Eigen::VectorXd diag = sigma.diagonal();
  Matrix m = diag.cast<Complex>().asDiagonal();
  return DensityOperator::unchecked(Dims(n, 2), std::move(m));
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++pick[i - 1];
    for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

DensityOperator teleported_ghz_closed_form(std::size_t n, double p) {
  if (n < 2) throw InputError("teleported GHZ needs n >= 2");
  if (n > 12) throw CapacityError("teleported GHZ closed form limited to n <= 12 (dimension 4096)");
  check_visibility(p);
  const std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(dim), 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double coefficient = std::pow(p, static_cast<double>(n - k)) * std::pow(1.0 - p, static_cast<double>(k));
    for (const auto& c : subsets_of_size(n, k)) diag += coefficient * SigmaKC{n, c}.diagonal();
  }
  diag.array() += std::pow(1.0 - p, static_cast<double>(n)) / static_cast<double>(dim);
  Matrix m = std::pow(p, static_cast<double>(n)) * ghz(n).projector();
  m.diagonal() += diag.cast<Complex>();
  return DensityOperator::unchecked(Dims(n, 2), std::move(m));
}

}  // namespace netdistill
