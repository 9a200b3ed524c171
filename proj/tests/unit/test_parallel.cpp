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

#include <stdexcept>
#include <vector>

#include "catch_amalgamated.hpp"
#include "netdistill/parallel.hpp"

namespace netdistill {

TEST_CASE("parallel_map keeps input order") {
  std::vector<int> items(100);
  for (int i = 0; i < 100; ++i) items[i] = i;
  for (std::size_t workers : {1, 3, 8}) {
    const auto out = parallel_map(items, [](int x) { return x * x; }, workers);
    REQUIRE(out.size() == items.size());
    for (int i = 0; i < 100; ++i) REQUIRE(out[i] == i * i);
  }
  const std::vector<int> none;
  REQUIRE(parallel_map(none, [](int x) { return x; }).empty());
}

TEST_CASE("parallel_map rethrows the first failure") {
  const std::vector<int> items{1, 2, 3, 4};
  REQUIRE_THROWS_WITH(parallel_map(
                          items,
                          [](int x) {
                            if (x >= 2) throw std::runtime_error("item " + std::to_string(x));
                            return x;
                          },
                          4),
                      "item 2");
}

}  // namespace netdistill
