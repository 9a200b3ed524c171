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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netdistill::oracle {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

// Digit of `index` on factor `which` (factor 0 most significant).
std::size_t digit(std::size_t index, std::size_t d, std::size_t factors, std::size_t which) {
  return (index / ipow(d, factors - 1 - which)) % d;
}

std::size_t with_digit(std::size_t index, std::size_t d, std::size_t factors, std::size_t which, std::size_t value) {
  const std::size_t place = ipow(d, factors - 1 - which);
  return index - digit(index, d, factors, which) * place + value * place;
}

std::size_t boundary(const Graph& g, const std::vector<bool>& side) {
  std::size_t cut = 0;
  for (const Edge& e : g.edges()) cut += side[e.u] != side[e.v] ? 1 : 0;
  return cut;
}

}  // namespace

std::size_t brute_force_min_cut(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || n > 20) throw std::invalid_argument("brute-force cut needs 2 <= n <= 20");
  std::size_t best = g.size();
  // Vertex n-1 always on the far side; every proper subset is reached once.
  for (std::size_t mask = 1; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<bool> side(n);
    for (std::size_t v = 0; v + 1 < n; ++v) side[v] = (mask >> v) & 1U;
    best = std::min(best, boundary(g, side));
  }
  return best;
}

std::size_t brute_force_pair_cut(const Graph& g, Vertex u, Vertex v) {
  const std::size_t n = g.order();
  if (n > 20) throw std::invalid_argument("brute-force cut needs n <= 20");
  std::size_t best = g.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (!((mask >> u) & 1U) || ((mask >> v) & 1U)) continue;
    std::vector<bool> side(n);
    for (std::size_t x = 0; x < n; ++x) side[x] = (mask >> x) & 1U;
    best = std::min(best, boundary(g, side));
  }
  return best;
}

CMatrix ghz_projector(std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::size_t a : {std::size_t{0}, dim - 1}) {
    for (std::size_t b : {std::size_t{0}, dim - 1}) m(a, b) = 0.5;
  }
  return m;
}

CMatrix depolarize_factor(const CMatrix& rho, std::size_t d, std::size_t factors, std::size_t which, double p) {
  const auto dim = static_cast<std::size_t>(rho.rows());
  CMatrix out = p * rho;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (digit(a, d, factors, which) != digit(b, d, factors, which)) continue;
      std::complex<double> trace = 0;
      for (std::size_t k = 0; k < d; ++k) {
        trace += rho(with_digit(a, d, factors, which, k), with_digit(b, d, factors, which, k));
      }
      out(a, b) += (1.0 - p) * trace / static_cast<double>(d);
    }
  }
  return out;
}

CMatrix sigma_from_definition(std::size_t n, const std::vector<std::size_t>& c) {
  // Build the factors one qubit at a time with Kronecker products: outside C
  // the two branches |0><0| and |1><1| run in parallel; inside C it is 1/2.
  CMatrix zeros = CMatrix::Ones(1, 1);
  CMatrix ones = CMatrix::Ones(1, 1);
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  CMatrix p1 = CMatrix::Zero(2, 2);
  p1(1, 1) = 1;
  const CMatrix half_identity = 0.5 * CMatrix::Identity(2, 2);
  auto kron = [](const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
  };
  for (std::size_t q = 0; q < n; ++q) {
    const bool in_c = std::find(c.begin(), c.end(), q) != c.end();
    zeros = kron(zeros, in_c ? half_identity : p0);
    ones = kron(ones, in_c ? half_identity : p1);
  }
  return 0.5 * (zeros + ones);
}

Eigen::VectorXcd psi_from_bits(std::size_t n, std::size_t j, bool plus) {
  // Bits j_1 ... j_{n-1}, j_1 most significant, then the fixed last qubit.
  std::vector<int> bits(n, 0);
  for (std::size_t l = 0; l + 1 < n; ++l) bits[l] = static_cast<int>((j >> (n - 2 - l)) & 1U);
  std::size_t first = 0;
  std::size_t second = 0;
  for (std::size_t l = 0; l < n; ++l) {
    first = 2 * first + static_cast<std::size_t>(bits[l]);
    second = 2 * second + static_cast<std::size_t>(1 - bits[l]);
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(std::size_t{1} << n);
  psi(first) = 1.0 / std::sqrt(2.0);
  psi(second) = (plus ? 1.0 : -1.0) / std::sqrt(2.0);
  return psi;
}

bool agrees_outside(std::size_t n, std::size_t j, const std::vector<std::size_t>& c) {
  int seen = -1;
  for (std::size_t l = 0; l < n; ++l) {
    if (std::find(c.begin(), c.end(), l) != c.end()) continue;
    const int bit = l + 1 < n ? static_cast<int>((j >> (n - 2 - l)) & 1U) : 0;
    if (seen == -1) seen = bit;
    else if (seen != bit) return false;
  }
  return true;
}

double s_j_by_enumeration(std::size_t n, double p, std::size_t j) {
  long double total = 0;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> c;
    for (std::size_t q = 0; q < n; ++q) {
      if ((mask >> q) & 1U) c.push_back(q);
    }
    if (!agrees_outside(n, j, c)) continue;
    const std::size_t k = c.size();
    total += std::pow(static_cast<long double>(p), static_cast<long double>(n - k)) *
             std::pow(1.0L - p, static_cast<long double>(k)) / std::pow(2.0L, static_cast<long double>(k + 1));
  }
  return static_cast<double>(total);
}

CMatrix partial_transpose_qubits(const CMatrix& rho, std::size_t n, const std::vector<std::size_t>& m) {
  const auto dim = static_cast<std::size_t>(rho.rows());
  CMatrix out(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t a2 = a;
      std::size_t b2 = b;
      for (std::size_t q : m) {
        const std::size_t da = digit(a, 2, n, q);
        const std::size_t db = digit(b, 2, n, q);
        a2 = with_digit(a2, 2, n, q, db);
        b2 = with_digit(b2, 2, n, q, da);
      }
      out(a2, b2) = rho(a, b);
    }
  }
  return out;
}

std::vector<double> hermitian_spectrum(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

long double r_minus_bracket(std::size_t n, long double p, std::size_t w) {
  const long double a = (1 + p) / (2 * p);
  const long double b = (1 - p) / (1 + p);
  const long double c = (1 - p) / (2 * p);
  const long double nn = static_cast<long double>(n);
  const long double ww = static_cast<long double>(w);
  return -1 + std::pow(a, nn) * std::pow(b, ww) + std::pow(c, nn) * std::pow(1 / b, ww);
}

std::size_t crossover_by_scan(long double p, std::size_t w, std::size_t n_limit) {
  for (std::size_t n = w + 1; n <= n_limit; ++n) {
    if (r_minus_bracket(n, p, w) >= 0) return n;
  }
  throw std::runtime_error("no crossover below the scan limit");
}

std::size_t lemma6_count(std::size_t order, std::size_t min_degree, std::size_t lambda, std::size_t subset_size) {
  // min{delta, (delta/N) lambda} / (5 m) = min{delta N, delta lambda} / (5 m N)
  const std::size_t numerator = std::min(min_degree * order, min_degree * lambda);
  return numerator / (5 * subset_size * order);
}

double composed_path_visibility(std::size_t d, double p, std::size_t length) {
  if (length == 0) throw std::invalid_argument("path length must be >= 1");
  const std::size_t dim = d * d;
  CMatrix phi = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) phi(i * d + i, j * d + j) = 1.0 / static_cast<double>(d);
  }
  // First hop: the shared isotropic resource itself.
  CMatrix rho = p * phi + (1.0 - p) * CMatrix::Identity(dim, dim) / static_cast<double>(dim);
  for (std::size_t hop = 1; hop < length; ++hop) rho = depolarize_factor(rho, d, 2, 1, p);
  const double overlap = (phi * rho).trace().real();
  const double dd = static_cast<double>(dim);
  return (overlap * dd - 1.0) / (dd - 1.0);
}

}  // namespace netdistill::oracle
