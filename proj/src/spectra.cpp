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

#include "netdistill/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "netdistill/channels.hpp"
#include "netdistill/errors.hpp"
#include "netdistill/numeric.hpp"

namespace netdistill {

namespace {

constexpr std::size_t kMaxSpectrumQubits = 24;
constexpr std::size_t kMaxCrossoverScan = std::size_t{1} << 26;

void check_unit_interval(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("visibility must lie in [0, 1]");
}

void check_index(std::size_t n, std::size_t j) {
  if (n < 2) throw InputError("need n >= 2 qubits");
  if (n > 62) throw CapacityError("qubit count too large for an integer index");
  if (j >= (std::size_t{1} << (n - 1))) throw InputError("index j out of range [0, 2^{n-1})");
}

// exponent * log_base, with the convention 0 * log(0) = 0.
double scaled_log(double exponent, double log_base) { return exponent == 0.0 ? 0.0 : exponent * log_base; }

// (1+p)^{n-h} (1-p)^h / 2^n
double plus_term(std::size_t n, double p, std::size_t h) {
  const double log_value = scaled_log(static_cast<double>(n - h), std::log1p(p)) +
                           scaled_log(static_cast<double>(h), std::log1p(-p)) -
                           static_cast<double>(n) * std::numbers::ln2;
  return std::exp(log_value);
}

// (1-p)^{n-h} (1+p)^h / 2^n
double minus_term(std::size_t n, double p, std::size_t h) {
  const double log_value = scaled_log(static_cast<double>(n - h), std::log1p(-p)) +
                           scaled_log(static_cast<double>(h), std::log1p(p)) -
                           static_cast<double>(n) * std::numbers::ln2;
  return std::exp(log_value);
}

double power(double base, std::size_t e) { return e == 0 ? 1.0 : std::exp(static_cast<double>(e) * std::log(base)); }

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(out);
}

double eigenvalue_by_weight(std::size_t n, double p, std::size_t h, int delta_sign) {
  CompensatedSum s;
  if (delta_sign != 0) s.add(delta_sign * power(p, n));
  s.add(plus_term(n, p, h));
  s.add(minus_term(n, p, h));
  return 0.5 * s.value();
}

// Sign-carrying bracket -1 + ((1+p)/(2p))^n B^w + ((1-p)/(2p))^n D^w of the (r, -)
// eigenvalue divided by p^n/2, for 0 < p < 1.
double crossover_bracket(std::size_t n, double p, std::size_t w) {
  const double log_a = std::log1p(p) - std::numbers::ln2 - std::log(p);
  const double log_c = std::log1p(-p) - std::numbers::ln2 - std::log(p);
  const double log_b = std::log1p(-p) - std::log1p(p);
  const double dn = static_cast<double>(n);
  const double dw = static_cast<double>(w);
  CompensatedSum s;
  s.add(-1.0);
  s.add(std::exp(dn * log_a + dw * log_b));
  s.add(std::exp(dn * log_c - dw * log_b));
  return s.value();
}

void check_eigen_p(double p) {
  check_unit_interval(p);
  if (p == 0.0) throw InputError("closed-form partial-transpose eigenvalues need p > 0; use the dense path at p = 0");
}

}  // namespace

std::size_t Bipartition::r() const {
  std::size_t r = 0;
  for (std::size_t q : normalized) r |= std::size_t{1} << (n - 2 - q);
  return r;
}

Bipartition normalize_bipartition(std::size_t n, std::span<const std::size_t> m) {
  if (n < 2) throw InputError("bipartition needs n >= 2 qubits");
  if (m.empty()) throw InputError("bipartition set M must be non-empty");
  if (m.size() >= n) throw InputError("bipartition set M must be a proper subset");
  Bipartition out;
  out.n = n;
  out.requested.assign(m.begin(), m.end());
  std::sort(out.requested.begin(), out.requested.end());
  if (std::adjacent_find(out.requested.begin(), out.requested.end()) != out.requested.end()) {
    throw InputError("bipartition set M repeats a qubit");
  }
  if (out.requested.back() >= n) throw InputError("bipartition qubit out of range");
  out.normalized = out.requested;
  if (out.normalized.back() == n - 1) {
    std::size_t swap_in = n - 1;
    while (std::binary_search(out.normalized.begin(), out.normalized.end(), swap_in)) --swap_in;
    out.normalized.back() = swap_in;
    std::sort(out.normalized.begin(), out.normalized.end());
  }
  return out;
}

std::size_t SpectrumIndex::hamming_weight() const { return static_cast<std::size_t>(std::popcount(j)); }

NonvanishingCount nonvanishing_count(std::size_t n, std::size_t j, std::size_t k) {
  check_index(n, j);
  const auto w = static_cast<std::size_t>(std::popcount(j));
  NonvanishingCount out;
  // C must contain every position where j (with j_n = 0) has a 1 ...
  if (k >= w) out.ones = binomial(n - w, k - w);
  // ... or every position where it has a 0.
  if (k + w >= n) out.zeros = binomial(w, k + w - n);
  return out;
}

double s_j_closed(std::size_t n, double p, std::size_t j) {
  check_index(n, j);
  check_unit_interval(p);
  const double tail = power((1.0 - p) / 2.0, n);
  CompensatedSum s;
  if (j == 0) {
    s.add(-power(p, n));
    s.add(plus_term(n, p, 0));
    s.add(-tail);
    return 0.5 * s.value();
  }
  const auto w = static_cast<std::size_t>(std::popcount(j));
  s.add(0.5 * plus_term(n, p, w));
  s.add(0.5 * minus_term(n, p, w));
  s.add(-tail);
  return s.value();
}

double s_j_direct(std::size_t n, double p, std::size_t j) {
  check_index(n, j);
  check_unit_interval(p);
  const double q = (1.0 - p) / 2.0;
  double total = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    total += nonvanishing_count(n, j, k).total() * std::pow(p, static_cast<double>(n - k)) *
             std::pow(q, static_cast<double>(k));
  }
  return 0.5 * total;
}

double s_j_dense(std::size_t n, double p, std::size_t j) {
  check_index(n, j);
  check_unit_interval(p);
  if (n > 8) throw CapacityError("dense S_j oracle limited to n <= 8");
  const Vector psi = psi_basis(n, j, Sign::kPlus).amplitudes();
  double total = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double coefficient = std::pow(p, static_cast<double>(n - k)) * std::pow(1.0 - p, static_cast<double>(k));
    for (const auto& c : subsets_of_size(n, k)) {
      total += coefficient * psi.dot(sigma_kc(n, c).matrix() * psi).real();
    }
  }
  return total;
}

double ptranspose_eigenvalue(const SpectrumIndex& idx, double p) {
  check_index(idx.n, idx.j);
  check_eigen_p(p);
  if (idx.cut.n != idx.n) throw InputError("bipartition qubit count differs from the spectrum index");
  int delta_sign = 0;
  if (idx.j == idx.r()) delta_sign = idx.sign == Sign::kPlus ? 1 : -1;
  return eigenvalue_by_weight(idx.n, p, idx.hamming_weight(), delta_sign);
}

double TeleportedGhzSpectrum::sum() const {
  CompensatedSum s;
  for (double x : eigenvalues) s.add(x);
  return s.value();
}

double TeleportedGhzSpectrum::min() const { return *std::min_element(eigenvalues.begin(), eigenvalues.end()); }

TeleportedGhzSpectrum teleported_ghz_spectrum(std::size_t n, double p, std::span<const std::size_t> m) {
  check_eigen_p(p);
  if (n > kMaxSpectrumQubits) throw CapacityError("full spectrum limited to n <= 24");
  TeleportedGhzSpectrum out;
  out.n = n;
  out.p = p;
  out.cut = normalize_bipartition(n, m);
  const std::size_t half = std::size_t{1} << (n - 1);
  out.eigenvalues.resize(2 * half);
  // Eigenvalues only depend on the Hamming weight, apart from j = r.
  std::vector<double> by_weight(n);
  for (std::size_t h = 0; h < n; ++h) by_weight[h] = eigenvalue_by_weight(n, p, h, 0);
  const std::size_t r = out.cut.r();
  for (std::size_t j = 0; j < half; ++j) {
    const auto h = static_cast<std::size_t>(std::popcount(j));
    if (j == r) {
      out.eigenvalues[2 * j] = eigenvalue_by_weight(n, p, h, +1);
      out.eigenvalues[2 * j + 1] = eigenvalue_by_weight(n, p, h, -1);
    } else {
      out.eigenvalues[2 * j] = out.eigenvalues[2 * j + 1] = by_weight[h];
    }
  }
  return out;
}

double min_ptranspose_eigenvalue(std::size_t n, double p, std::size_t w) {
  check_eigen_p(p);
  if (w < 1 || w >= n) throw InputError("need 1 <= |M| < n");
  double best = eigenvalue_by_weight(n, p, w, -1);
  best = std::min(best, eigenvalue_by_weight(n, p, w, +1));
  for (std::size_t h = 0; h < n; ++h) {
    // Weight class of j != r; empty only when r is the single index of weight n-1.
    if (h == w && w == n - 1) continue;
    best = std::min(best, eigenvalue_by_weight(n, p, h, 0));
  }
  return best;
}

bool is_ppt_teleported_ghz(std::size_t n, double p, std::span<const std::size_t> m, PptCheck mode) {
  check_eigen_p(p);
  const Bipartition cut = normalize_bipartition(n, m);
  if (mode == PptCheck::kFullScan) return teleported_ghz_spectrum(n, p, cut.normalized).min() >= 0.0;
  if (p == 1.0) return false;
  return crossover_bracket(n, p, cut.weight()) >= 0.0;
}

std::size_t ppt_crossover_n0(double p, std::size_t w) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("p must be < 1 for crossover (and > 0)");
  if (w < 1) throw InputError("crossover needs |M| >= 1");
  for (std::size_t n = w + 1; n < kMaxCrossoverScan; ++n) {
    if (crossover_bracket(n, p, w) >= 0.0) return n;
  }
  throw CapacityError("crossover not reached below n = 2^26");
}

std::vector<PptScanRow> ppt_scan(std::span<const double> ps, std::span<const std::size_t> ws, std::size_t n_min,
                                 std::size_t n_max) {
  if (n_min > n_max) throw InputError("empty n range");
  std::vector<PptScanRow> rows;
  for (double p : ps) {
    for (std::size_t w : ws) {
      const std::size_t n0 = ppt_crossover_n0(p, w);
      for (std::size_t n = std::max(n_min, w + 1); n <= n_max; ++n) {
        PptScanRow row;
        row.n = n;
        row.p = p;
        row.w = w;
        row.min_eigenvalue = min_ptranspose_eigenvalue(n, p, w);
        row.is_ppt = crossover_bracket(n, p, w) >= 0.0;
        row.at_crossover = n == n0;
        row.n0 = n0;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_ppt_scan_csv(std::ostream& out, std::span<const PptScanRow> rows) {
  out << "n,p,w,min_eigenvalue,is_ppt,n0_flag,n0\n";
  for (const auto& row : rows) {
    out << row.n << ',' << format_real(row.p) << ',' << row.w << ',' << format_real(row.min_eigenvalue) << ','
        << (row.is_ppt ? 1 : 0) << ',' << (row.at_crossover ? 1 : 0) << ',' << row.n0 << '\n';
  }
}

}  // namespace netdistill
