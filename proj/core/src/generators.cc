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

#include "pscolor/generators.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pscolor/rng.h"

namespace pscolor {

Graph gnp(Vertex n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gnp: p must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  if (p == 0.0 || n < 2) return Graph::from_edges(n, edges);
  if (p == 1.0) return complete_graph(n);
  Rng rng(seed, 0, Phase::kGraph);
  const double log_q = std::log1p(-p);
  // Walk pairs (v, w) with w < v in row-major order, skipping geometric gaps.
  std::int64_t v = 1, w = -1;
  while (v < n) {
    const double r = 1.0 - rng.uniform01();  // (0, 1]
    w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) {
      edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph remove_triangle_edges(const Graph& g) {
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges()) {
    if (common_neighbors(g, u, v) == 0) kept.emplace_back(u, v);
  }
  return Graph::from_edges(g.num_vertices(), kept);
}

Graph gnp_triangle_free(Vertex n, double p, std::uint64_t seed) {
  return remove_triangle_edges(gnp(n, p, seed));
}

Graph clique_collection(Vertex ell, Vertex k) {
  if (ell < 1 || k < 1) {
    throw std::invalid_argument("clique_collection: ell and k must be >= 1");
  }
  const Vertex s = ell + 1;
  std::vector<Edge> edges;
  for (Vertex b = 0; b < k; ++b) {
    for (Vertex i = 0; i < s; ++i) {
      for (Vertex j = i + 1; j < s; ++j) edges.emplace_back(b * s + i, b * s + j);
    }
  }
  return Graph::from_edges(k * s, edges);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph empty_graph(Vertex n) { return Graph::from_edges(n, {}); }

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const Vertex shift = a.num_vertices();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

Graph random_tree(Vertex n, std::uint64_t seed) {
  Rng rng(seed, 1, Phase::kGraph);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng.uniform(v)), v);
  }
  return Graph::from_edges(n, edges);
}

Graph bipartite_circulant(Vertex half, Vertex r) {
  if (r > half) throw std::invalid_argument("bipartite_circulant: r > half");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < half; ++i) {
    for (Vertex s = 0; s < r; ++s) edges.emplace_back(i, half + (i + s) % half);
  }
  return Graph::from_edges(2 * half, edges);
}

}  // namespace pscolor
