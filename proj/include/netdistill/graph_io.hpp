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

#include <iosfwd>
#include <string>

#include "netdistill/graph.hpp"

namespace netdistill {

// Edge-list text format:
//
//   N M
//   u v        (M lines, 0-indexed, u < v)
//
// Blank lines and lines starting with '#' are ignored.

/// Throws InputError with a line number on malformed input, self-loops,
/// duplicate edges, u >= v, or an edge count different from M.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace netdistill
