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

#include "pscolor/graph.h"

#include <algorithm>
#include <set>
#include <string>

#include "pscolor/errors.h"

namespace pscolor {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw MalformedInputError("negative vertex count");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw MalformedInputError("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") out of range for n=" +
                                std::to_string(n));
    }
    if (u == v) {
      throw MalformedInputError("self-loop at vertex " + std::to_string(u));
    }
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<std::int64_t>(norm.size());
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : norm) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adj_.resize(static_cast<std::size_t>(2 * g.m_));
  std::vector<std::int64_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted input means each row is filled in ascending order: a row v
  // first receives its smaller neighbors (as the second coordinate) and
  // then its larger ones.
  for (const auto& [u, v] : norm) g.adj_[pos[v]++] = u;
  for (const auto& [u, v] : norm) g.adj_[pos[u]++] = v;
  for (Vertex v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::validate() const {
  if (static_cast<Vertex>(offsets_.size()) != n_ + 1) return "offset size";
  std::int64_t total = 0;
  for (Vertex v = 0; v < n_; ++v) {
    auto nb = neighbors(v);
    total += static_cast<std::int64_t>(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex u = nb[i];
      if (u < 0 || u >= n_) return "neighbor out of range at " + std::to_string(v);
      if (u == v) return "self-loop at " + std::to_string(v);
      if (i > 0 && nb[i - 1] >= u) {
        return "unsorted or duplicate neighbors at " + std::to_string(v);
      }
      auto back = neighbors(u);
      if (!std::binary_search(back.begin(), back.end(), v)) {
        return "asymmetric edge (" + std::to_string(v) + "," +
               std::to_string(u) + ")";
      }
    }
  }
  if (total != 2 * m_) return "edge count mismatch";
  return "";
}

Graph new_graph(Vertex n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

Vertex common_neighbors(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  Vertex count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex u : g.neighbors(vertices[i])) {
      const Vertex j = local[u];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<Vertex>(vertices.size()), edges);
  out.to_parent.assign(vertices.begin(), vertices.end());
  return out;
}

DegeneracyResult degeneracy_order(const Graph& g) {
  const Vertex n = g.num_vertices();
  DegeneracyResult r;
  r.kappa_v.assign(n, 0);
  std::vector<Vertex> remaining(n);
  std::set<std::pair<Vertex, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    remaining[v] = g.degree(v);
    queue.emplace(remaining[v], v);
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> elimination;
  elimination.reserve(n);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    r.kappa_v[v] = d;
    r.kappa = std::max(r.kappa, d);
    elimination.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({remaining[u], u});
      --remaining[u];
      queue.emplace(remaining[u], u);
    }
  }
  r.order.assign(elimination.rbegin(), elimination.rend());
  return r;
}

}  // namespace pscolor
