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

#ifndef PSCOLOR_GRAPH_H_
#define PSCOLOR_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pscolor {

using Vertex = std::int32_t;
using Color = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph in CSR form. Neighbor ranges are sorted
// ascending, so adjacency tests are binary searches and common-neighbor
// counts are linear merges.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary pair list. Duplicates and reversed copies are
  // collapsed. Throws MalformedInputError on self-loops or ids outside
  // [0, n).
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::int64_t num_edges() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }
  Vertex max_degree() const { return max_degree_; }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Empty string when the CSR invariants hold, otherwise a description of
  // the first breach. Used by tests as a structural validator.
  std::string validate() const;

 private:
  Vertex n_ = 0;
  std::int64_t m_ = 0;
  Vertex max_degree_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> adj_;
};

// Convenience wrapper for Graph::from_edges.
Graph new_graph(Vertex n, std::span<const Edge> edges);

// |N(u) ∩ N(v)| by sorted merge.
Vertex common_neighbors(const Graph& g, Vertex u, Vertex v);

// Subgraph induced by `vertices`; local id i maps to vertices[i].
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};
InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices);

struct DegeneracyResult {
  std::vector<Vertex> order;
  Vertex kappa = 0;
  std::vector<Vertex> kappa_v;
};

// Min-remaining-degree elimination (ties to the lowest id); `order` is the
// reverse elimination sequence, so every vertex has at most kappa_v earlier
// neighbors.
DegeneracyResult degeneracy_order(const Graph& g);

}  // namespace pscolor

#endif  // PSCOLOR_GRAPH_H_
