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
#include <iosfwd>
#include <span>
#include <vector>

#include "netdistill/hilbert.hpp"

namespace netdistill {

// Spectral facts about rho_n(p) = T_p^{(x)n}(GHZ_n) and its partial transposes.
// Qubits are 0-based; index j in [0, 2^{n-1}) labels the basis vectors
// psi_basis(n, j, +-), with qubit q carrying bit (n-2-q) of j and qubit n-1
// fixed to 0.

/// A bipartition M | complement of the n qubits. The closed forms assume the
/// last qubit lies outside M; the state is permutation symmetric, so a request
/// containing it is relabelled by swapping qubit n-1 with the largest qubit
/// outside M.
struct Bipartition {
  std::size_t n = 0;
  std::vector<std::size_t> requested;
  std::vector<std::size_t> normalized;

  bool relabeled() const { return requested != normalized; }
  std::size_t weight() const { return normalized.size(); }
  /// Index r in (0, 2^{n-1}) whose bits mark the qubits of M.
  std::size_t r() const;
};

/// Throws InputError unless M is a non-empty proper subset of {0..n-1}.
Bipartition normalize_bipartition(std::size_t n, std::span<const std::size_t> m);

struct SpectrumIndex {
  std::size_t n = 0;
  std::size_t j = 0;
  Sign sign = Sign::kPlus;
  Bipartition cut;

  std::size_t hamming_weight() const;
  std::size_t r() const { return cut.r(); }
};

/// Number of k-subsets C with <psi_j|sigma_k^C|psi_j> != 0, split into the
/// subsets covering every 1-position of j (ones) and every 0-position (zeros).
struct NonvanishingCount {
  double ones = 0;
  double zeros = 0;
  double total() const { return ones + zeros; }
};
NonvanishingCount nonvanishing_count(std::size_t n, std::size_t j, std::size_t k);

/// S_j = sum_{k=1}^{n-1} p^{n-k} (1-p)^k sum_{|C|=k} <psi_j|sigma_k^C|psi_j>,
/// closed form in the Hamming weight of j.
double s_j_closed(std::size_t n, double p, std::size_t j);
/// The same sum evaluated term by term from nonvanishing_count.
double s_j_direct(std::size_t n, double p, std::size_t j);
/// The same sum from dense matrices (n <= 8).
double s_j_dense(std::size_t n, double p, std::size_t j);

/// Eigenvalue of the partial transpose of rho_n(p) on psi_basis(n, j, sign):
///   1/2 [ +-delta_{jr} p^n + (1+p)^{n-w}(1-p)^w / 2^n + (1-p)^{n-w}(1+p)^w / 2^n ]
/// with w the Hamming weight of j. Requires 0 < p <= 1.
double ptranspose_eigenvalue(const SpectrumIndex& idx, double p);

struct TeleportedGhzSpectrum {
  std::size_t n = 0;
  double p = 0;
  Bipartition cut;
  /// Entry 2j holds the + eigenvalue, 2j+1 the - eigenvalue.
  std::vector<double> eigenvalues;

  double at(std::size_t j, Sign s) const { return eigenvalues[2 * j + (s == Sign::kMinus ? 1 : 0)]; }
  double sum() const;
  double min() const;
};

/// Full closed-form spectrum (n <= 24).
TeleportedGhzSpectrum teleported_ghz_spectrum(std::size_t n, double p, std::span<const std::size_t> m);

/// Smallest eigenvalue over all (j, sign), O(n) via Hamming-weight classes.
double min_ptranspose_eigenvalue(std::size_t n, double p, std::size_t w);

enum class PptCheck { kFast, kFullScan };

/// Only the (r, -) eigenvalue can be negative; kFast tests that one sign in
/// log space, kFullScan enumerates the whole spectrum (n <= 24).
bool is_ppt_teleported_ghz(std::size_t n, double p, std::span<const std::size_t> m, PptCheck mode = PptCheck::kFast);

/// Smallest n > w for which the (r, -) eigenvalue is >= 0, for 0 < p < 1.
std::size_t ppt_crossover_n0(double p, std::size_t w);

struct PptScanRow {
  std::size_t n = 0;
  double p = 0;
  std::size_t w = 0;
  double min_eigenvalue = 0;
  bool is_ppt = false;
  bool at_crossover = false;
  std::size_t n0 = 0;
};

/// Rows for every p, w and n in [n_min, n_max] with n > w.
std::vector<PptScanRow> ppt_scan(std::span<const double> ps, std::span<const std::size_t> ws, std::size_t n_min,
                                 std::size_t n_max);

/// Columns n,p,w,min_eigenvalue,is_ppt,n0_flag,n0.
void write_ppt_scan_csv(std::ostream& out, std::span<const PptScanRow> rows);

}  // namespace netdistill
