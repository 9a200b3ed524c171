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

#include <cstddef>
#include <span>
#include <vector>

#include "netdistill/hilbert.hpp"

namespace netdistill {

/// Teleportation through an isotropic resource of visibility p:
///   |i><j|  ->  p |i><j| + (1 - p) delta_ij 1/d.
/// p = 1 is the ideal (identity) teleportation channel.
class NoisyTeleportChannel {
 public:
  NoisyTeleportChannel(std::size_t d, double p);

  std::size_t dimension() const { return d_; }
  double visibility() const { return p_; }

  /// Acts on `factor` of rho, identity on the rest. The factor's local
  /// dimension must equal dimension().
  DensityOperator apply(const DensityOperator& rho, std::size_t factor) const;

  /// Choi matrix sum_ij |i><j| (x) T(|i><j|), unnormalised (trace d).
  Matrix choi() const;

 private:
  std::size_t d_;
  double p_;
};

DensityOperator apply_noisy_teleport(const DensityOperator& rho, double p, std::size_t factor);

/// p^{2^{l-1}}: end-to-end visibility credited to a teleportation path of
/// length l >= 1. For l >= 3 this is below the visibility p^l produced by
/// composing single-hop channels; it is reachable from there by mixing in
/// white noise.
double path_teleport_visibility(double p, std::size_t length);

/// T_p on every factor; all factors must share one local dimension.
DensityOperator star_teleport(const DensityOperator& rho, double p);
/// T_{p_f} on factor f. A visibility of exactly 1 leaves the factor untouched.
DensityOperator star_teleport(const DensityOperator& rho, std::span<const double> visibilities);

/// Qubit subset C of [n] (0-based, 1 <= |C| < n) labelling
///   sigma_k^C = 1/2 (|0..0><0..0| + |1..1><1..1|)_{not C} (x) 1_C / 2^k.
struct SigmaKC {
  std::size_t n = 0;
  std::vector<std::size_t> subset;

  std::size_t k() const { return subset.size(); }
  /// Diagonal of sigma_k^C in the computational basis.
  Eigen::VectorXd diagonal() const;
};

DensityOperator sigma_kc(std::size_t n, std::span<const std::size_t> subset);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

/// Closed form of T_p^{(x)n}(GHZ):
///   p^n GHZ + sum_{k=1}^{n-1} p^{n-k} (1-p)^k sum_{|C|=k} sigma_k^C + (1-p)^n 1/2^n.
/// Throws CapacityError for n > 12.
DensityOperator teleported_ghz_closed_form(std::size_t n, double p);

}  // namespace netdistill
