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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netdistill/graph.hpp"

namespace netdistill {

/// One leg of a spider: a simple path from the centre to `target`.
struct Leg {
  Vertex target;
  Path path;
};

/// Edge-disjoint legs sharing a common centre, one per target.
struct Spider {
  Vertex center{};
  std::vector<Leg> legs;

  /// Length of the leg ending at `target`; throws InputError if absent.
  std::size_t leg_length(Vertex target) const;
  std::size_t edge_count() const;
};

/// Why an extraction loop stopped.
enum class StopReason {
  kMaxSpiders,    // caller-supplied cap reached
  kBudget,        // stopped at the guaranteed count on request
  kDisconnected,  // residual graph separates the centre from a target
  kLegBound,      // next shortest leg would exceed the length bound
  kExhausted,     // constructive family used up (grid construction)
};

std::string to_string(StopReason r);

struct SpiderDecomposition {
  Graph host;
  std::vector<Vertex> subset;  // V0, sorted ascending
  Vertex center{};
  /// Targets in the order legs were extracted for each spider.
  std::vector<Vertex> target_order;
  std::vector<Spider> spiders;
  std::size_t leg_length_bound = 0;
  StopReason stop_reason = StopReason::kExhausted;

  std::size_t size() const { return spiders.size(); }
  /// All edges used by any leg, in extraction order.
  std::vector<Edge> used_edges() const;
};

/// Counting guarantee for greedy extraction on a connected graph with minimum
/// degree above one. With c = delta_min / |G|:
///   budget = floor(min(delta_min, c * lambda) / (5 |V0|)),  leg bound = 5 / c.
/// Both are evaluated in exact integer arithmetic.
struct SpiderGuarantee {
  std::size_t order = 0;
  std::size_t min_degree = 0;
  std::size_t edge_connectivity = 0;
  std::size_t subset_size = 0;
  std::size_t budget = 0;

  double c() const { return static_cast<double>(min_degree) / static_cast<double>(order); }
  /// 5 / c as a real number.
  double leg_bound() const { return 5.0 * static_cast<double>(order) / static_cast<double>(min_degree); }
  /// Largest integer leg length not exceeding 5 / c.
  std::size_t integer_leg_bound() const { return (5 * order) / min_degree; }
};

/// Throws InputError naming the first failed premise: disconnected graph,
/// minimum degree <= 1, |V0| < 2, repeated or out-of-range vertices in V0.
SpiderGuarantee lemma6_guarantee(const Graph& g, std::span<const Vertex> subset);

struct GreedyOptions {
  std::optional<std::size_t> max_spiders;
  /// Stop once the guaranteed budget is reached instead of extracting until
  /// the residual graph fails.
  bool stop_at_budget = false;
};

/// Repeatedly takes the lexicographically smallest shortest path from the
/// centre to each target in the residual graph and deletes its edges; every
/// |V0|-1 consecutive paths form one spider. Targets are visited by
/// non-decreasing distance from the centre in g, ties by vertex id. Legs are
/// capped at floor(5/c); a longer shortest path ends the extraction.
///
/// Checks the same premises as lemma6_guarantee, plus center in V0.
SpiderDecomposition extract_spiders_greedy(const Graph& g, std::span<const Vertex> subset, Vertex center,
                                           const GreedyOptions& options = {});

/// The greedy loop without the premise checks, for graphs outside the
/// counting regime (trees, paths, stars). No leg cap unless one is given.
SpiderDecomposition extract_spiders(const Graph& g, std::span<const Vertex> subset, Vertex center,
                                    std::optional<std::size_t> leg_length_bound = std::nullopt,
                                    std::optional<std::size_t> max_spiders = std::nullopt);

/// (floor((n-1)/(|V0|-1)) - 1) * k, clamped at zero.
std::size_t grid_spider_guarantee(const GridGraphSpec& spec, std::size_t subset_size);

/// Explicit construction on grid_graph(spec). For each coordinate m and each
/// unused value r outside the m-th coordinates of V0, a leg runs
///   v0 -> v0[m := r] -> (copy the target's other coordinates one at a time,
///   ascending) -> target[m := r] -> target,
/// with repeated consecutive vertices dropped, so each leg has length <= k+1.
/// Values r are handed out in ascending order, |V0|-1 per spider.
///
/// With `multiplicity` = nu the output is capped at (nu-1) spiders per
/// coordinate and n >= nu|V0| - nu + 1 is required.
SpiderDecomposition grid_spiders(const GridGraphSpec& spec, std::span<const Vertex> subset, Vertex center,
                                 std::optional<std::size_t> multiplicity = std::nullopt);

struct ValidationReport {
  bool ok = true;
  std::string violation;
  std::optional<Edge> offending_edge;

  explicit operator bool() const { return ok; }
};

/// Checks every leg is a simple path in the host starting at the centre and
/// ending at its target, each spider covers V0 \ {center} exactly once, no
/// edge is used twice anywhere, and all legs respect leg_length_bound.
ValidationReport validate_spiders(const SpiderDecomposition& dec);

struct CenterChoice {
  Vertex center{};
  std::size_t spiders = 0;
};

/// Runs greedy extraction from every centre in V0. The best entry is the one
/// with most spiders (ties: smallest id). Not claimed to be optimal.
std::vector<CenterChoice> sweep_centers(const Graph& g, std::span<const Vertex> subset,
                                        const GreedyOptions& options = {});

/// One line per leg: "spider_index target v0 v1 ... vl".
void write_spiders(std::ostream& out, const SpiderDecomposition& dec);
/// Inverse of write_spiders. Host, subset, centre and bound are not part of the
/// text form and must be supplied.
SpiderDecomposition read_spiders(std::istream& in, const Graph& host, std::span<const Vertex> subset, Vertex center,
                                 std::size_t leg_length_bound);

}  // namespace netdistill
