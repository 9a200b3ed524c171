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

#include "netdistill/spider.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "netdistill/errors.hpp"

namespace netdistill {

std::size_t Spider::leg_length(Vertex target) const {
  for (const Leg& leg : legs)
    if (leg.target == target) return leg.path.length();
  throw InputError("spider has no leg ending at " + std::to_string(target));
}

std::size_t Spider::edge_count() const {
  std::size_t total = 0;
  for (const Leg& leg : legs) total += leg.path.length();
  return total;
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::kMaxSpiders: return "max_spiders";
    case StopReason::kBudget: return "budget";
    case StopReason::kDisconnected: return "disconnected";
    case StopReason::kLegBound: return "leg_bound";
    case StopReason::kExhausted: return "exhausted";
  }
  return "unknown";
}

std::vector<Edge> SpiderDecomposition::used_edges() const {
  std::vector<Edge> out;
  for (const Spider& s : spiders)
    for (const Leg& leg : s.legs) {
      const auto e = leg.path.edges();
      out.insert(out.end(), e.begin(), e.end());
    }
  return out;
}

namespace {

std::vector<Vertex> checked_subset(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2) throw InputError("premise failed: |V0| >= 2 required");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("premise failed: V0 contains a repeated vertex");
  }
  if (!g.contains(sorted.back())) {
    throw InputError("premise failed: V0 vertex " + std::to_string(sorted.back()) + " is not in the graph");
  }
  return sorted;
}

void require_center(std::span<const Vertex> subset, Vertex center) {
  if (std::find(subset.begin(), subset.end(), center) == subset.end()) {
    throw InputError("centre " + std::to_string(center) + " is not in V0");
  }
}

std::vector<Vertex> targets_by_distance(const Graph& g, std::span<const Vertex> subset, Vertex center) {
  const auto dist = bfs_distances(g, center);
  std::vector<Vertex> targets;
  for (Vertex v : subset)
    if (v != center) targets.push_back(v);
  std::stable_sort(targets.begin(), targets.end(), [&](Vertex a, Vertex b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return a < b;
  });
  return targets;
}

SpiderDecomposition run_greedy(const Graph& g, std::vector<Vertex> subset, Vertex center,
                               std::optional<std::size_t> leg_bound, std::optional<std::size_t> max_spiders,
                               StopReason cap_reason) {
  SpiderDecomposition dec;
  dec.host = g;
  dec.center = center;
  dec.target_order = targets_by_distance(g, subset, center);
  dec.subset = std::move(subset);
  dec.leg_length_bound = leg_bound.value_or(g.order() > 0 ? g.order() - 1 : 0);

  Graph residual = g;
  while (true) {
    if (max_spiders && dec.spiders.size() >= *max_spiders) {
      dec.stop_reason = cap_reason;
      return dec;
    }
    Spider spider{center, {}};
    for (Vertex target : dec.target_order) {
      auto path = shortest_path(residual, center, target);
      if (!path) {
        dec.stop_reason = StopReason::kDisconnected;
        return dec;
      }
      if (leg_bound && path->length() > *leg_bound) {
        dec.stop_reason = StopReason::kLegBound;
        return dec;
      }
      residual = remove_path_edges(residual, *path);
      spider.legs.push_back({target, std::move(*path)});
    }
    dec.spiders.push_back(std::move(spider));
  }
}

}  // namespace

SpiderGuarantee lemma6_guarantee(const Graph& g, std::span<const Vertex> subset) {
  const auto sorted = checked_subset(g, subset);
  if (!is_connected(g)) throw InputError("premise failed: graph is not connected");
  const auto stats = degree_stats(g);
  if (stats.min_degree <= 1) {
    throw InputError("premise failed: minimum degree must exceed 1 (got " + std::to_string(stats.min_degree) + ")");
  }
  SpiderGuarantee out;
  out.order = g.order();
  out.min_degree = stats.min_degree;
  out.edge_connectivity = edge_connectivity(g);
  out.subset_size = sorted.size();
  // min(d, (d/N) lambda) / (5|V0|) = min(d N, d lambda) / (5 |V0| N)
  const std::size_t numerator = std::min(out.min_degree * out.order, out.min_degree * out.edge_connectivity);
  out.budget = numerator / (5 * out.subset_size * out.order);
  return out;
}

SpiderDecomposition extract_spiders_greedy(const Graph& g, std::span<const Vertex> subset, Vertex center,
                                           const GreedyOptions& options) {
  require_center(subset, center);
  const SpiderGuarantee guarantee = lemma6_guarantee(g, subset);
  std::optional<std::size_t> cap = options.max_spiders;
  StopReason cap_reason = StopReason::kMaxSpiders;
  if (options.stop_at_budget && (!cap || guarantee.budget < *cap)) {
    cap = guarantee.budget;
    cap_reason = StopReason::kBudget;
  }
  return run_greedy(g, checked_subset(g, subset), center, guarantee.integer_leg_bound(), cap, cap_reason);
}

SpiderDecomposition extract_spiders(const Graph& g, std::span<const Vertex> subset, Vertex center,
                                    std::optional<std::size_t> leg_length_bound,
                                    std::optional<std::size_t> max_spiders) {
  auto sorted = checked_subset(g, subset);
  require_center(sorted, center);
  return run_greedy(g, std::move(sorted), center, leg_length_bound, max_spiders, StopReason::kMaxSpiders);
}

std::size_t grid_spider_guarantee(const GridGraphSpec& spec, std::size_t subset_size) {
  if (subset_size < 2 || spec.n < 1) return 0;
  const std::size_t nu = (spec.n - 1) / (subset_size - 1);
  return nu >= 1 ? (nu - 1) * spec.k : 0;
}

SpiderDecomposition grid_spiders(const GridGraphSpec& spec, std::span<const Vertex> subset, Vertex center,
                                 std::optional<std::size_t> multiplicity) {
  const Graph host = grid_graph(spec);
  auto sorted = checked_subset(host, subset);
  require_center(sorted, center);
  const std::size_t legs_per_spider = sorted.size() - 1;
  if (multiplicity) {
    const std::size_t nu = *multiplicity;
    if (nu < 2) throw InputError("grid_spiders: multiplicity must be at least 2");
    const std::size_t need = nu * sorted.size() - nu + 1;
    if (spec.n < need) {
      throw InputError("grid_spiders: n = " + std::to_string(spec.n) + " is too small for multiplicity " +
                       std::to_string(nu) + "; need n >= nu|V0| - nu + 1 = " + std::to_string(need));
    }
  }

  SpiderDecomposition dec;
  dec.host = host;
  dec.center = center;
  for (Vertex v : sorted)
    if (v != center) dec.target_order.push_back(v);
  dec.subset = std::move(sorted);
  dec.leg_length_bound = spec.k + 1;
  dec.stop_reason = multiplicity ? StopReason::kMaxSpiders : StopReason::kExhausted;

  const auto origin = spec.decode(center);
  std::vector<std::vector<std::size_t>> target_tuples;
  for (Vertex t : dec.target_order) target_tuples.push_back(spec.decode(t));

  for (std::size_t m = 0; m < spec.k; ++m) {
    std::set<std::size_t> taken;
    for (Vertex v : dec.subset) taken.insert(spec.decode(v)[m]);
    std::vector<std::size_t> free_values;
    for (std::size_t r = 0; r < spec.n; ++r)
      if (!taken.contains(r)) free_values.push_back(r);

    std::size_t per_coordinate = free_values.size() / legs_per_spider;
    if (multiplicity) per_coordinate = std::min(per_coordinate, *multiplicity - 1);

    for (std::size_t s = 0; s < per_coordinate; ++s) {
      Spider spider{center, {}};
      for (std::size_t j = 0; j < legs_per_spider; ++j) {
        const std::size_t r = free_values[s * legs_per_spider + j];
        const auto& goal = target_tuples[j];
        std::vector<Vertex> chain{center};
        auto x = origin;
        x[m] = r;
        chain.push_back(spec.encode(x));
        for (std::size_t a = 0; a < spec.k; ++a) {
          if (a == m || x[a] == goal[a]) continue;
          x[a] = goal[a];
          chain.push_back(spec.encode(x));
        }
        chain.push_back(dec.target_order[j]);
        spider.legs.push_back({dec.target_order[j], Path(host, std::move(chain))});
      }
      dec.spiders.push_back(std::move(spider));
    }
  }
  return dec;
}

ValidationReport validate_spiders(const SpiderDecomposition& dec) {
  ValidationReport report;
  auto fail = [&report](std::string what, std::optional<Edge> e = std::nullopt) {
    report.ok = false;
    report.violation = std::move(what);
    report.offending_edge = e;
    return report;
  };
  if (dec.spiders.empty()) return report;

  std::vector<Vertex> expected_targets;
  for (Vertex v : dec.subset)
    if (v != dec.center) expected_targets.push_back(v);
  std::sort(expected_targets.begin(), expected_targets.end());
  if (std::find(dec.subset.begin(), dec.subset.end(), dec.center) == dec.subset.end()) {
    return fail("centre " + std::to_string(dec.center) + " is not in V0");
  }

  std::map<Edge, std::size_t> owner;
  for (std::size_t si = 0; si < dec.spiders.size(); ++si) {
    const Spider& spider = dec.spiders[si];
    const std::string where = "spider " + std::to_string(si);
    if (spider.center != dec.center) return fail(where + ": centre differs from decomposition centre");
    std::vector<Vertex> targets;
    for (const Leg& leg : spider.legs) {
      const auto& vs = leg.path.vertices();
      const std::string leg_where = where + " leg to " + std::to_string(leg.target);
      if (vs.front() != dec.center) return fail(leg_where + ": does not start at the centre");
      if (vs.back() != leg.target) return fail(leg_where + ": does not end at its target");
      try {
        Path recheck(dec.host, vs);
      } catch (const InputError& e) {
        return fail(leg_where + ": " + e.what());
      }
      if (leg.path.length() > dec.leg_length_bound) {
        return fail(leg_where + ": length " + std::to_string(leg.path.length()) + " exceeds bound " +
                    std::to_string(dec.leg_length_bound));
      }
      for (const Edge& e : leg.path.edges()) {
        auto [it, fresh] = owner.emplace(e, si);
        if (!fresh) {
          std::ostringstream msg;
          msg << leg_where << ": edge " << e << " already used by spider " << it->second;
          return fail(msg.str(), e);
        }
      }
      targets.push_back(leg.target);
    }
    std::sort(targets.begin(), targets.end());
    if (targets != expected_targets) return fail(where + ": legs do not cover V0 \\ {centre} exactly once");
  }
  return report;
}

std::vector<CenterChoice> sweep_centers(const Graph& g, std::span<const Vertex> subset,
                                        const GreedyOptions& options) {
  std::vector<CenterChoice> out;
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex c : sorted) out.push_back({c, extract_spiders_greedy(g, sorted, c, options).size()});
  std::stable_sort(out.begin(), out.end(),
                   [](const CenterChoice& a, const CenterChoice& b) { return a.spiders > b.spiders; });
  return out;
}

void write_spiders(std::ostream& out, const SpiderDecomposition& dec) {
  for (std::size_t si = 0; si < dec.spiders.size(); ++si) {
    for (const Leg& leg : dec.spiders[si].legs) {
      out << si << ' ' << leg.target;
      for (Vertex v : leg.path.vertices()) out << ' ' << v;
      out << '\n';
    }
  }
}

SpiderDecomposition read_spiders(std::istream& in, const Graph& host, std::span<const Vertex> subset, Vertex center,
                                 std::size_t leg_length_bound) {
  SpiderDecomposition dec;
  dec.host = host;
  dec.subset.assign(subset.begin(), subset.end());
  std::sort(dec.subset.begin(), dec.subset.end());
  dec.center = center;
  dec.leg_length_bound = leg_length_bound;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    std::size_t index = 0;
    Vertex target = 0;
    if (!(ss >> index >> target)) throw InputError("spider line " + std::to_string(line_no) + ": malformed");
    std::vector<Vertex> vs;
    for (Vertex v; ss >> v;) vs.push_back(v);
    if (!ss.eof()) throw InputError("spider line " + std::to_string(line_no) + ": malformed vertex list");
    if (index > dec.spiders.size()) {
      throw InputError("spider line " + std::to_string(line_no) + ": spider indices must be consecutive");
    }
    if (index == dec.spiders.size()) dec.spiders.push_back(Spider{center, {}});
    dec.spiders[index].legs.push_back({target, Path(host, std::move(vs))});
    if (index == 0) dec.target_order.push_back(target);
  }
  return dec;
}

}  // namespace netdistill
