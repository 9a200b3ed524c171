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

#include "netdistill/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "netdistill/errors.hpp"

namespace netdistill {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw InputError("edge list line " + std::to_string(line_no) + ": " + what);
}

// Parses exactly two non-negative integers; anything else on the line is an error.
std::pair<std::size_t, std::size_t> two_numbers(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  long long a = -1;
  long long b = -1;
  if (!(ss >> a >> b)) fail(line_no, "expected two integers");
  std::string rest;
  if (ss >> rest) fail(line_no, "unexpected trailing token '" + rest + "'");
  if (a < 0 || b < 0) fail(line_no, "negative value");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto [a, b] = two_numbers(line, line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) fail(line_no, "more edges than declared (" + std::to_string(m) + ")");
    if (a == b) fail(line_no, "self-loop at vertex " + std::to_string(a));
    if (a > b) fail(line_no, "edge must be written with u < v");
    if (b >= n) fail(line_no, "vertex " + std::to_string(b) + " out of range");
    if (!seen.emplace(a, b).second) fail(line_no, "duplicate edge");
    edges.emplace_back(a, b);
  }
  if (!have_header) throw InputError("edge list is empty");
  if (edges.size() != m) {
    throw InputError("edge list declares " + std::to_string(m) + " edges but has " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace netdistill
