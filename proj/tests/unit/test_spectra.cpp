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

#include <algorithm>
#include <sstream>
#include <vector>

#include "catch_amalgamated.hpp"
#include "netdistill/channels.hpp"
#include "netdistill/errors.hpp"
#include "netdistill/spectra.hpp"
#include "oracles.hpp"

namespace netdistill {

SCENARIO("Bipartition normalisation") {
  const std::vector<std::size_t> keeps{0, 2};
  const auto a = normalize_bipartition(5, keeps);
  REQUIRE_FALSE(a.relabeled());
  REQUIRE(a.r() == 0b1010);
  const std::vector<std::size_t> with_last{4, 1};
  const auto b = normalize_bipartition(5, with_last);
  REQUIRE(b.relabeled());
  REQUIRE(b.normalized == std::vector<std::size_t>{1, 3});
  const std::vector<std::size_t> tail{2, 3, 4};
  REQUIRE(normalize_bipartition(5, tail).normalized == std::vector<std::size_t>{1, 2, 3});
  const std::vector<std::size_t> empty;
  const std::vector<std::size_t> all{0, 1, 2};
  const std::vector<std::size_t> twice{1, 1};
  REQUIRE_THROWS_AS(normalize_bipartition(3, empty), InputError);
  REQUIRE_THROWS_AS(normalize_bipartition(3, all), InputError);
  REQUIRE_THROWS_AS(normalize_bipartition(3, twice), InputError);
}

SCENARIO("S_j three ways") {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int step = 0; step <= 10; ++step) {
      const double p = step / 10.0;
      for (std::size_t j = 0; j < (std::size_t{1} << (n - 1)); ++j) {
        const double direct = s_j_direct(n, p, j);
        REQUIRE(std::abs(s_j_closed(n, p, j) - direct) <= 1e-12);
        if (n <= 6) {
          REQUIRE(std::abs(s_j_dense(n, p, j) - direct) <= 1e-12);
          REQUIRE(std::abs(oracle::s_j_by_enumeration(n, p, j) - direct) <= 1e-12);
        }
      }
    }
  }
  GIVEN("a counting example") {
    // n = 4, j = 0b011: C must hold {2, 3} (the ones) or {1} plus the last (the zeros).
    REQUIRE(nonvanishing_count(4, 0b011, 2).ones == 1);
    REQUIRE(nonvanishing_count(4, 0b011, 2).zeros == 1);
    REQUIRE(nonvanishing_count(4, 0b011, 1).total() == 0);
  }
}

SCENARIO("Partial-transpose spectrum against dense matrices") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (double p : {0.3, 0.6, 0.9}) {
      const auto rho = teleported_ghz_closed_form(n, p);
      for (std::size_t w = 1; w <= 2 && w < n; ++w) {
        std::vector<std::size_t> m(w);
        for (std::size_t i = 0; i < w; ++i) m[i] = i;
        const auto closed = teleported_ghz_spectrum(n, p, m);
        std::vector<double> sorted = closed.eigenvalues;
        std::sort(sorted.begin(), sorted.end());
        const auto dense = partial_transpose(rho, m).eigenvalues();
        for (std::size_t i = 0; i < sorted.size(); ++i) REQUIRE(std::abs(sorted[i] - dense(i)) <= 1e-9);
        REQUIRE(closed.sum() == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(is_ppt_teleported_ghz(n, p, m) == is_ppt(rho, m));
        REQUIRE(is_ppt_teleported_ghz(n, p, m, PptCheck::kFullScan) == is_ppt(rho, m));
      }
    }
  }
}

SCENARIO("Spectrum sums to one") {
  for (std::size_t n : {3, 10, 20}) {
    for (double p : {0.05, 0.5, 0.95, 1.0}) {
      const std::vector<std::size_t> m{0, n / 2};
      REQUIRE(teleported_ghz_spectrum(n, p, m).sum() == Catch::Approx(1.0).margin(1e-12));
    }
  }
}

SCENARIO("Eigenvalue signs") {
  GIVEN("p = 1") {
    const std::vector<std::size_t> m{1};
    const Bipartition cut = normalize_bipartition(5, m);
    const SpectrumIndex idx{5, cut.r(), Sign::kMinus, cut};
    REQUIRE(ptranspose_eigenvalue(idx, 1.0) == -0.5);
    REQUIRE_FALSE(is_ppt_teleported_ghz(5, 1.0, m));
    REQUIRE_FALSE(is_ppt_teleported_ghz(5, 1.0, m, PptCheck::kFullScan));
  }
  GIVEN("0 < p < 1") {
    for (double p : {0.1, 0.5, 0.9}) {
      const std::vector<std::size_t> m{0, 2};
      const auto s = teleported_ghz_spectrum(9, p, m);
      const std::size_t r = s.cut.r();
      for (std::size_t j = 0; j < (std::size_t{1} << 8); ++j) {
        REQUIRE(s.at(j, Sign::kPlus) > 0);
        if (j != r) REQUIRE(s.at(j, Sign::kMinus) > 0);
      }
      REQUIRE(min_ptranspose_eigenvalue(9, p, 2) == s.min());
    }
  }
  const Bipartition cut = normalize_bipartition(3, std::vector<std::size_t>{0});
  REQUIRE_THROWS_AS(ptranspose_eigenvalue({3, 0, Sign::kPlus, cut}, 0.0), InputError);
}

SCENARIO("Crossover") {
  REQUIRE(ppt_crossover_n0(0.9, 1) == 55);
  REQUIRE(oracle::crossover_by_scan(0.9L, 1) == 55);
  GIVEN("a grid of visibilities") {
    std::size_t previous_p = 0;
    for (double p : {0.5, 0.7, 0.9, 0.95, 0.99}) {
      const std::size_t n0 = ppt_crossover_n0(p, 1);
      REQUIRE(n0 > previous_p);
      previous_p = n0;
      std::size_t previous_w = 0;
      for (std::size_t w = 1; w <= 4; ++w) {
        const std::size_t n0w = ppt_crossover_n0(p, w);
        REQUIRE(n0w >= previous_w);
        REQUIRE(n0w == oracle::crossover_by_scan(p, w));
        previous_w = n0w;
        std::vector<std::size_t> m(w);
        for (std::size_t i = 0; i < w; ++i) m[i] = i;
        REQUIRE(is_ppt_teleported_ghz(n0w, p, m));
        REQUIRE(is_ppt_teleported_ghz(n0w + 7, p, m));
        if (n0w - 1 > w) REQUIRE_FALSE(is_ppt_teleported_ghz(n0w - 1, p, m));
      }
    }
  }
  REQUIRE_THROWS_WITH(ppt_crossover_n0(1.0, 1), Catch::Matchers::ContainsSubstring("p must be < 1 for crossover"));
  REQUIRE_THROWS_AS(ppt_crossover_n0(0.5, 0), InputError);
}

TEST_CASE("Scan CSV") {
  const std::vector<double> ps{0.9};
  const std::vector<std::size_t> ws{1};
  const auto rows = ppt_scan(ps, ws, 53, 56);
  REQUIRE(rows.size() == 4);
  REQUIRE(rows[0].min_eigenvalue < 0);
  REQUIRE_FALSE(rows[1].is_ppt);
  REQUIRE(rows[2].is_ppt);
  REQUIRE(rows[2].at_crossover);
  std::ostringstream out;
  write_ppt_scan_csv(out, rows);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  REQUIRE(header == "n,p,w,min_eigenvalue,is_ppt,n0_flag,n0");
  std::string line;
  std::getline(in, line);
  REQUIRE(line.rfind("53,0.9,1,", 0) == 0);
}

}  // namespace netdistill
