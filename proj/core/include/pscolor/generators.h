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

#ifndef PSCOLOR_GENERATORS_H_
#define PSCOLOR_GENERATORS_H_

#include <cstdint>

#include "pscolor/graph.h"

namespace pscolor {

// Erdős–Rényi G(n, p) by geometric skipping over the pair index space.
Graph gnp(Vertex n, double p, std::uint64_t seed);

// gnp(n, p, seed) with every edge that lies on a triangle removed.
Graph gnp_triangle_free(Vertex n, double p, std::uint64_t seed);

// Removes every edge of g that lies on at least one triangle of g.
Graph remove_triangle_edges(const Graph& g);

// k disjoint copies of K_{ell+1}.
Graph clique_collection(Vertex ell, Vertex k);

Graph complete_graph(Vertex n);
Graph empty_graph(Vertex n);
Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph star_graph(Vertex leaves);
Graph complete_bipartite(Vertex a, Vertex b);
Graph disjoint_union(const Graph& a, const Graph& b);

// Uniform random labelled tree (random attachment to an earlier vertex).
Graph random_tree(Vertex n, std::uint64_t seed);

// Vertex i on side A is adjacent to side-B vertices i, i+1, ..., i+r-1
// (mod half). r-regular and bipartite on 2*half vertices.
Graph bipartite_circulant(Vertex half, Vertex r);

}  // namespace pscolor

#endif  // PSCOLOR_GENERATORS_H_
