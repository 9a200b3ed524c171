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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netdistill {

using Vertex = std::size_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u{};
  Vertex v{};

  Edge() = default;
  Edge(Vertex a, Vertex b);

  auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Simple undirected graph on vertices 0..order()-1.
///
/// Immutable after construction. Adjacency lists are kept sorted, which the
/// shortest-path tie-breaking of the spider extraction relies on.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbours(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex v) const { return v < order(); }

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degrees;
};

DegreeStats degree_stats(const Graph& g);

/// Shortest-path length, or infinite when no path exists.
class Distance {
 public:
  static Distance infinite() { return Distance(); }
  static Distance finite(std::size_t hops) { return Distance(hops); }

  bool is_finite() const { return hops_.has_value(); }
  /// Throws std::bad_optional_access when infinite.
  std::size_t value() const { return hops_.value(); }

  auto operator<=>(const Distance& o) const {
    if (is_finite() != o.is_finite()) return is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!is_finite()) return std::strong_ordering::equal;
    return *hops_ <=> *o.hops_;
  }
  bool operator==(const Distance& o) const = default;

  std::string to_string() const;

 private:
  Distance() = default;
  explicit Distance(std::size_t hops) : hops_(hops) {}
  std::optional<std::size_t> hops_;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
Distance distance(const Graph& g, Vertex u, Vertex v);
Distance diameter(const Graph& g);
bool is_connected(const Graph& g);

/// Simple path v_0 ... v_l (l >= 1) whose consecutive vertices are adjacent in
/// the graph it was validated against.
class Path {
 public:
  /// Throws InputError unless `vertices` is a simple path of length >= 1 in g.
  Path(const Graph& g, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  std::vector<Edge> edges() const;

  bool operator==(const Path&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Lexicographically smallest shortest path from u to v; nullopt if v is
/// unreachable. Requires u != v.
std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v);

/// Global minimum edge cut (Stoer-Wagner on unit weights). Requires order >= 2.
std::size_t edge_connectivity(const Graph& g);
/// Same quantity computed as min over v != 0 of max_edge_disjoint_paths(0, v).
std::size_t edge_connectivity_by_flows(const Graph& g);
/// Maximum number of pairwise edge-disjoint u-v paths (unit-capacity max-flow).
std::size_t max_edge_disjoint_paths(const Graph& g, Vertex u, Vertex v);

/// Deletes exactly the edges of p. Throws InputError if some edge is absent.
Graph remove_path_edges(const Graph& g, const Path& p);
Graph remove_edges(const Graph& g, std::span<const Edge> edges);

// ---------------------------------------------------------------------------
// Generators

enum class GraphFamily { kComplete, kCycle, kPath, kStar, kTree, kGrid };

std::string to_string(GraphFamily f);
/// Accepts "complete", "cycle", "path", "star", "tree", "grid".
GraphFamily parse_graph_family(const std::string& name);

/// Vertices are k-tuples over [n]; two tuples are adjacent iff they differ in
/// exactly one coordinate. Tuple (i_1, ..., i_k) maps to the id
/// i_1 n^{k-1} + ... + i_k (first coordinate most significant).
struct GridGraphSpec {
  std::size_t n = 0;
  std::size_t k = 0;

  std::size_t order() const;
  std::size_t degree() const { return k * (n - 1); }
  Vertex encode(std::span<const std::size_t> tuple) const;
  std::vector<std::size_t> decode(Vertex v) const;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Vertex 0 is the centre.
Graph star_graph(std::size_t n);
/// Uniform random labelled tree via a Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
Graph grid_graph(const GridGraphSpec& spec);
/// G(n, q) conditioned on connectivity (resampled until connected).
Graph random_connected_graph(std::size_t n, double edge_probability, std::uint64_t seed);

struct GraphParams {
  std::size_t n = 0;
  std::size_t k = 1;
  std::uint64_t seed = 0;
};

/// Dispatches on family. For kGrid, n is the side length and k the tuple length;
/// for every other family n is the vertex count.
Graph generate(GraphFamily family, const GraphParams& params);

}  // namespace netdistill
