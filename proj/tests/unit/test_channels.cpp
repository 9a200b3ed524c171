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

#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"
#include "netdistill/channels.hpp"
#include "netdistill/errors.hpp"
#include "oracles.hpp"

namespace netdistill {

namespace {

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

SCENARIO("Noisy teleportation channel") {
  for (std::size_t d : {2, 3}) {
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      const NoisyTeleportChannel channel(d, p);
      const Matrix choi = channel.choi();
      Eigen::SelfAdjointEigenSolver<Matrix> es(choi);
      REQUIRE(es.eigenvalues().minCoeff() >= -1e-10);
      // Trace preservation: the partial trace of the Choi matrix over the output is 1.
      const DensityOperator normalised = DensityOperator::unchecked({d, d}, choi / double(d));
      const std::vector<std::size_t> out{1};
      REQUIRE(max_diff(partial_trace(normalised, out).matrix(), Matrix::Identity(d, d) / double(d)) < 1e-12);
      REQUIRE(max_diff(channel.apply(maximally_mixed({d}), 0).matrix(), Matrix::Identity(d, d) / double(d)) < 1e-14);
    }
  }
  GIVEN("an isotropic state") {
    for (std::size_t d : {2, 3}) {
      const auto rho = isotropic(d, 0.7);
      REQUIRE(max_diff(apply_noisy_teleport(rho, 0.7, 1).matrix(), isotropic(d, 0.49).matrix()) < 1e-14);
      REQUIRE(max_diff(apply_noisy_teleport(rho, 1.0, 0).matrix(), rho.matrix()) == 0.0);
    }
  }
  REQUIRE_THROWS_AS(apply_noisy_teleport(isotropic(2, 0.5), 0.5, 2), InputError);
  REQUIRE_THROWS_AS(NoisyTeleportChannel(2, -0.1), InputError);
}

SCENARIO("Path visibility") {
  REQUIRE(path_teleport_visibility(0.9, 1) == 0.9);
  REQUIRE(path_teleport_visibility(0.9, 3) == Catch::Approx(std::pow(0.9, 4)));
  REQUIRE(path_teleport_visibility(1.0, 40) == 1.0);
  REQUIRE_THROWS_AS(path_teleport_visibility(0.9, 0), InputError);
  GIVEN("sequential teleportation along a path") {
    // Dense composition degrades linearly in the exponent; the exponential
    // law is a lower bound that coincides for l <= 2.
    for (std::size_t d : {2, 3}) {
      for (double p : {0.5, 0.8, 0.99}) {
        DensityOperator rho = isotropic(d, p);
        for (std::size_t l = 1; l <= 4; ++l) {
          if (l > 1) rho = apply_noisy_teleport(rho, p, 1);
          const double law = path_teleport_visibility(p, l);
          const double dense = oracle::composed_path_visibility(d, p, l);
          REQUIRE(max_diff(rho.matrix(), isotropic(d, std::pow(p, double(l))).matrix()) < 1e-12);
          REQUIRE(dense == Catch::Approx(std::pow(p, double(l))).margin(1e-12));
          REQUIRE(law <= dense + 1e-15);
          if (l <= 2) REQUIRE(law == Catch::Approx(dense).margin(1e-12));
        }
      }
    }
  }
}

SCENARIO("Star teleportation") {
  const DensityOperator g3(ghz(3));
  REQUIRE(max_diff(star_teleport(g3, 1.0).matrix(), g3.matrix()) == 0.0);
  REQUIRE(max_diff(star_teleport(g3, 0.0).matrix(), Matrix::Identity(8, 8) / 8.0) < 1e-15);
  const std::vector<double> vis{1.0, 0.5, 0.25};
  const auto mixed = star_teleport(g3, vis);
  auto manual = apply_noisy_teleport(apply_noisy_teleport(g3, 0.5, 1), 0.25, 2);
  REQUIRE(max_diff(mixed.matrix(), manual.matrix()) < 1e-15);
  REQUIRE_THROWS_AS(star_teleport(isotropic(2, 0.5), std::vector<double>{0.5}), InputError);
  const DensityOperator uneven = tensor(maximally_mixed({2}), maximally_mixed({3}));
  REQUIRE_THROWS_AS(star_teleport(uneven, 0.5), InputError);
}

SCENARIO("Closed-form teleported GHZ") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (double p : {0.0, 0.3, 0.7, 0.9, 1.0}) {
      const auto closed = teleported_ghz_closed_form(n, p);
      REQUIRE(max_diff(closed.matrix(), star_teleport(DensityOperator(ghz(n)), p).matrix()) <= 1e-10);
      REQUIRE(closed.check_invariants().empty());
    }
  }
  REQUIRE(max_diff(teleported_ghz_closed_form(4, 1.0).matrix(), ghz(4).projector()) == 0.0);
  REQUIRE_THROWS_AS(teleported_ghz_closed_form(13, 0.5), CapacityError);
}

SCENARIO("sigma_k^C") {
  const std::vector<std::size_t> last{1};
  REQUIRE(max_diff(sigma_kc(2, last).matrix(), Matrix::Identity(4, 4) / 4.0) < 1e-15);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& c : subsets_of_size(n, k)) {
        const auto s = sigma_kc(n, c);
        REQUIRE(std::abs(s.matrix().trace() - 1.0) < 1e-14);
        REQUIRE(max_diff(s.matrix(), oracle::sigma_from_definition(n, c)) < 1e-15);
      }
    }
  }
  const std::vector<std::size_t> none;
  const std::vector<std::size_t> all{0, 1, 2};
  REQUIRE_THROWS_AS(sigma_kc(3, none), InputError);
  REQUIRE_THROWS_AS(sigma_kc(3, all), InputError);
  REQUIRE(subsets_of_size(4, 2).size() == 6);
  REQUIRE(subsets_of_size(4, 2).front() == std::vector<std::size_t>{0, 1});
  REQUIRE(subsets_of_size(4, 2).back() == std::vector<std::size_t>{2, 3});
}

}  // namespace netdistill
