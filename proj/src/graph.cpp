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

#include "netdistill/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

#include "netdistill/errors.hpp"

namespace netdistill {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << '(' << e.u << ',' << e.v << ')'; }

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    const Edge e(raw.u, raw.v);
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= vertex_count) {
      throw InputError("edge endpoint " + std::to_string(e.v) + " out of range for " + std::to_string(vertex_count) +
                       " vertices");
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
  if (!contains(v)) throw InputError("invalid vertex id " + std::to_string(v));
  return adjacency_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.degrees.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) stats.degrees[v] = g.degree(v);
  if (!stats.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(stats.degrees.begin(), stats.degrees.end());
    stats.min_degree = *lo;
    stats.max_degree = *hi;
  }
  return stats;
}

std::string Distance::to_string() const { return is_finite() ? std::to_string(*hops_) : std::string("inf"); }

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw InputError("invalid vertex id " + std::to_string(source));
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> hops(g.order(), kUnseen);
  std::deque<Vertex> queue{source};
  hops[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbours(x)) {
      if (hops[y] == kUnseen) {
        hops[y] = hops[x] + 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<Distance> out;
  out.reserve(g.order());
  for (std::size_t h : hops) out.push_back(h == kUnseen ? Distance::infinite() : Distance::finite(h));
  return out;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(v)) throw InputError("invalid vertex id " + std::to_string(v));
  return bfs_distances(g, u)[v];
}

Distance diameter(const Graph& g) {
  Distance best = Distance::finite(0);
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const Distance& d : bfs_distances(g, s)) {
      if (!d.is_finite()) return Distance::infinite();
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d.is_finite(); });
}

Path::Path(const Graph& g, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InputError("a path needs at least two vertices");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("path repeats a vertex");
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (!g.has_edge(vertices_[i], vertices_[i + 1])) {
      throw InputError("path step " + std::to_string(vertices_[i]) + "-" + std::to_string(vertices_[i + 1]) +
                       " is not an edge");
    }
  }
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  out.reserve(length());
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[i + 1]);
  return out;
}

std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InputError("shortest_path requires distinct endpoints");
  if (!g.contains(u) || !g.contains(v)) throw InputError("invalid vertex id");
  // Distances to the target let us walk forward greedily: at each step the
  // smallest neighbour one hop closer yields the lexicographically smallest
  // shortest path.
  const auto to_target = bfs_distances(g, v);
  if (!to_target[u].is_finite()) return std::nullopt;
  std::vector<Vertex> walk{u};
  Vertex x = u;
  while (x != v) {
    const std::size_t want = to_target[x].value() - 1;
    for (Vertex y : g.neighbours(x)) {
      if (to_target[y].is_finite() && to_target[y].value() == want) {
        x = y;
        break;
      }
    }
    walk.push_back(x);
  }
  return Path(g, std::move(walk));
}

std::size_t edge_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw InputError("edge connectivity needs at least 2 vertices");
  // Stoer-Wagner with an adjacency-weight matrix; merged vertices accumulate
  // weights.
  std::vector<std::vector<std::size_t>> w(n, std::vector<std::size_t>(n, 0));
  for (const Edge& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = 1;
  std::vector<Vertex> active(n);
  std::iota(active.begin(), active.end(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (active.size() > 1) {
    const std::size_t m = active.size();
    std::vector<std::size_t> key(m, 0);
    std::vector<bool> added(m, false);
    std::size_t prev = 0;
    std::size_t last = 0;
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t pick = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (!added[i] && (pick == m || key[i] > key[pick])) pick = i;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      if (step + 1 == m) break;
      for (std::size_t i = 0; i < m; ++i) {
        if (!added[i]) key[i] += w[active[pick]][active[i]];
      }
    }
    best = std::min(best, key[last]);
    const Vertex keep = active[prev];
    const Vertex gone = active[last];
    for (Vertex x : active) {
      w[keep][x] += w[gone][x];
      w[x][keep] = w[keep][x];
    }
    w[keep][keep] = 0;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return best;
}

namespace {

// Unit-capacity flow network for an undirected graph: each edge becomes one
// pair of mutually reverse arcs, both with capacity 1.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(const Graph& g) : out_(g.order()) {
    for (const Edge& e : g.edges()) {
      out_[e.u].push_back(arcs_.size());
      arcs_.push_back({e.v, 1});
      out_[e.v].push_back(arcs_.size());
      arcs_.push_back({e.u, 1});
    }
  }

  std::size_t max_flow(Vertex s, Vertex t) {
    std::size_t flow = 0;
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    while (true) {
      std::vector<std::size_t> via(out_.size(), kNone);
      std::vector<bool> seen(out_.size(), false);
      std::deque<Vertex> queue{s};
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (std::size_t a : out_[x]) {
          const Vertex y = arcs_[a].head;
          if (arcs_[a].residual > 0 && !seen[y]) {
            seen[y] = true;
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (!seen[t]) return flow;
      for (Vertex y = t; y != s;) {
        const std::size_t a = via[y];
        arcs_[a].residual -= 1;
        arcs_[a ^ 1U].residual += 1;
        y = arcs_[a ^ 1U].head;
      }
      ++flow;
    }
  }

 private:
  struct Arc {
    Vertex head;
    int residual;
  };
  std::vector<std::vector<std::size_t>> out_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t max_edge_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw InputError("invalid vertex id");
  if (u == v) throw InputError("max_edge_disjoint_paths requires distinct endpoints");
  return UnitFlowNetwork(g).max_flow(u, v);
}

std::size_t edge_connectivity_by_flows(const Graph& g) {
  if (g.order() < 2) throw InputError("edge connectivity needs at least 2 vertices");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, max_edge_disjoint_paths(g, 0, v));
  return best;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> drop(edges.begin(), edges.end());
  for (Edge& e : drop) e = Edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  for (const Edge& e : drop) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
    }
  }
  std::vector<Edge> keep;
  keep.reserve(g.size());
  std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(), std::back_inserter(keep));
  return Graph(g.order(), keep);
}

Graph remove_path_edges(const Graph& g, const Path& p) {
  const auto edges = p.edges();
  return remove_edges(g, edges);
}

// ---------------------------------------------------------------------------

std::string to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::kComplete: return "complete";
    case GraphFamily::kCycle: return "cycle";
    case GraphFamily::kPath: return "path";
    case GraphFamily::kStar: return "star";
    case GraphFamily::kTree: return "tree";
    case GraphFamily::kGrid: return "grid";
  }
  return "unknown";
}

GraphFamily parse_graph_family(const std::string& name) {
  for (auto f : {GraphFamily::kComplete, GraphFamily::kCycle, GraphFamily::kPath, GraphFamily::kStar,
                 GraphFamily::kTree, GraphFamily::kGrid}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown graph family '" + name + "'");
}

std::size_t GridGraphSpec::order() const {
  std::size_t total = 1;
  for (std::size_t m = 0; m < k; ++m) total *= n;
  return total;
}

Vertex GridGraphSpec::encode(std::span<const std::size_t> tuple) const {
  if (tuple.size() != k) throw InputError("grid tuple has wrong length");
  Vertex id = 0;
  for (std::size_t coord : tuple) {
    if (coord >= n) throw InputError("grid coordinate out of range");
    id = id * n + coord;
  }
  return id;
}

std::vector<std::size_t> GridGraphSpec::decode(Vertex v) const {
  if (v >= order()) throw InputError("grid vertex id out of range");
  std::vector<std::size_t> tuple(k);
  for (std::size_t m = k; m-- > 0;) {
    tuple[m] = v % n;
    v /= n;
  }
  return tuple;
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  if (n < 2) throw InputError("path graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw InputError("star graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex a = 1; a < n; ++a) edges.emplace_back(0, a);
  return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InputError("tree needs n >= 2");
  if (n == 2) return path_graph(2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --remaining[leaf];
    --remaining[c];
  }
  Vertex a = n;
  for (Vertex x = 0; x < n; ++x) {
    if (remaining[x] == 1) {
      if (a == n) {
        a = x;
      } else {
        edges.emplace_back(a, x);
        break;
      }
    }
  }
  return Graph(n, edges);
}

Graph grid_graph(const GridGraphSpec& spec) {
  if (spec.n < 2 || spec.k < 1) throw InputError("grid graph needs n >= 2 and k >= 1");
  const std::size_t total = spec.order();
  if (total > (std::size_t{1} << 20)) throw CapacityError("grid graph too large");
  std::vector<Edge> edges;
  edges.reserve(total * spec.degree() / 2);
  for (Vertex v = 0; v < total; ++v) {
    auto tuple = spec.decode(v);
    for (std::size_t m = 0; m < spec.k; ++m) {
      const std::size_t own = tuple[m];
      for (std::size_t value = own + 1; value < spec.n; ++value) {
        tuple[m] = value;
        edges.emplace_back(v, spec.encode(tuple));
      }
      tuple[m] = own;
    }
  }
  return Graph(total, edges);
}

Graph random_connected_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs n >= 1");
  if (!(edge_probability > 0.0 && edge_probability <= 1.0)) throw InputError("edge probability must be in (0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (coin(rng)) edges.emplace_back(a, b);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw InputError("could not sample a connected graph; edge probability too small");
}

Graph generate(GraphFamily family, const GraphParams& params) {
  switch (family) {
    case GraphFamily::kComplete: return complete_graph(params.n);
    case GraphFamily::kCycle: return cycle_graph(params.n);
    case GraphFamily::kPath: return path_graph(params.n);
    case GraphFamily::kStar: return star_graph(params.n);
    case GraphFamily::kTree: return random_tree(params.n, params.seed);
    case GraphFamily::kGrid: return grid_graph({params.n, params.k});
  }
  throw InputError("unknown graph family");
}

}  // namespace netdistill
