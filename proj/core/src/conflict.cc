// Copyright 2026 The pscolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pscolor/conflict.h"

namespace pscolor {

bool lists_intersect(const ColorList& a, const ColorList& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

ConflictGraph build_conflict_graph(const Graph& g, const ListAssignment& lists) {
  ConflictGraph cg;
  cg.base = &g;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && lists_intersect(lists[u], lists[v])) cg.edges.emplace_back(u, v);
    }
  }
  cg.graph = Graph::from_edges(g.num_vertices(), cg.edges);
  return cg;
}

std::vector<std::int64_t> oriented_out_degrees(const ConflictGraph& cg) {
  const Graph& g = *cg.base;
  std::vector<std::int64_t> charge(g.num_vertices(), 0);
  for (const auto& [u, v] : cg.edges) {
    const bool to_u = g.degree(u) < g.degree(v) ||
                      (g.degree(u) == g.degree(v) && u < v);
    ++charge[to_u ? u : v];
  }
  return charge;
}

}  // namespace pscolor
