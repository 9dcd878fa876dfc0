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

#include "pscolor/decomposition.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

namespace pscolor {
namespace {

bool balanced(Vertex a, Vertex b, double theta) {
  return std::min(a, b) >= (1.0 - theta) * std::max(a, b);
}

struct UnionFind {
  std::vector<Vertex> parent;
  explicit UnionFind(Vertex n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Vertex find(Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

double choose2(Vertex d) { return 0.5 * static_cast<double>(d) * (d - 1); }

}  // namespace

FriendEdgeSet friend_edges(const Graph& g, double theta) {
  const Vertex n = g.num_vertices();
  FriendEdgeSet f;
  f.theta = theta;
  f.friend_degree.assign(n, 0);
  f.dense.assign(n, false);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      const Vertex du = g.degree(u), dv = g.degree(v);
      if (!balanced(du, dv, theta)) continue;
      // Closed neighborhoods on both sides, so K_n is friendly for any theta.
      const Vertex closed_common = common_neighbors(g, u, v) + 2;
      if (closed_common >= (1.0 - theta) * (std::min(du, dv) + 1)) {
        f.edges.emplace_back(u, v);
        ++f.friend_degree[u];
        ++f.friend_degree[v];
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    f.dense[v] = g.degree(v) >= 1 &&
                 f.friend_degree[v] >= (1.0 - theta) * g.degree(v);
  }
  return f;
}

FriendEdgeSet friend_edges_reference(const Graph& g, double theta) {
  const Vertex n = g.num_vertices();
  FriendEdgeSet f;
  f.theta = theta;
  f.friend_degree.assign(n, 0);
  f.dense.assign(n, false);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      const double du = g.degree(u), dv = g.degree(v);
      if (std::min(du, dv) < (1.0 - theta) * std::max(du, dv)) continue;
      // |N[u] ∩ N[v]| by scanning every vertex.
      Vertex shared = 0;
      for (Vertex w = 0; w < n; ++w) {
        const bool in_u = w == u || g.has_edge(u, w);
        const bool in_v = w == v || g.has_edge(v, w);
        if (in_u && in_v) ++shared;
      }
      if (shared < (1.0 - theta) * (std::min(du, dv) + 1)) continue;
      f.edges.emplace_back(u, v);
      ++f.friend_degree[u];
      ++f.friend_degree[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    f.dense[v] = g.degree(v) > 0 &&
                 f.friend_degree[v] >= (1.0 - theta) * g.degree(v);
  }
  return f;
}

Vertex low_degree_threshold(Vertex n, double eps,
                            const DecompositionOptions& options) {
  const double raw = options.alpha * std::pow(eps, 10.0) *
                     std::log(std::max<double>(n, 2));
  return std::max<Vertex>(options.min_degree_floor,
                          static_cast<Vertex>(std::ceil(raw)));
}

std::int64_t neighborhood_non_edges(const Graph& g, Vertex v) {
  std::int64_t inside = 0;
  for (Vertex u : g.neighbors(v)) inside += common_neighbors(g, u, v);
  const std::int64_t d = g.degree(v);
  return d * (d - 1) / 2 - inside / 2;
}

bool is_sparse_vertex(const Graph& g, Vertex v, double eps) {
  return static_cast<double>(neighborhood_non_edges(g, v)) >=
         eps * eps * choose2(g.degree(v));
}

bool is_uneven_vertex(const Graph& g, Vertex v, double eps) {
  const Vertex d = g.degree(v);
  Vertex heavier = 0;
  for (Vertex u : g.neighbors(v)) {
    if (d < (1.0 - eps) * g.degree(u)) ++heavier;
  }
  return heavier >= eps * d;
}

Decomposition decompose(const Graph& g, double eps,
                        DecompositionOptions options) {
  const Vertex n = g.num_vertices();
  Decomposition d;
  d.eps = eps;
  d.d_min = low_degree_threshold(n, eps, options);
  d.kind.assign(n, BlockKind::kUneven);
  d.clique_of.assign(n, -1);

  std::vector<bool> low(n, false);
  for (Vertex v = 0; v < n; ++v) low[v] = g.degree(v) < d.d_min;

  const FriendEdgeSet wide = friend_edges(g, 4.0 * eps);
  const FriendEdgeSet tight = friend_edges(g, eps);

  UnionFind uf(n);
  for (const auto& [u, v] : wide.edges) {
    if (wide.dense[u] && wide.dense[v] && !low[u] && !low[v]) uf.unite(u, v);
  }
  // Components of H_theta, keyed by root; kept when one member is eps-dense.
  std::map<Vertex, std::vector<Vertex>> components;
  for (Vertex v = 0; v < n; ++v) {
    if (wide.dense[v] && !low[v]) components[uf.find(v)].push_back(v);
  }
  std::vector<bool> in_clique(n, false);
  for (auto& [root, members] : components) {
    const bool keep = std::any_of(members.begin(), members.end(),
                                  [&](Vertex v) { return tight.dense[v]; });
    if (!keep) continue;
    AlmostClique k;
    k.vertices = std::move(members);
    for (Vertex v : k.vertices) {
      k.delta = std::max(k.delta, g.degree(v));
      in_clique[v] = true;
      d.kind[v] = BlockKind::kClique;
      d.clique_of[v] = static_cast<int>(d.cliques.size());
    }
    d.cliques.push_back(std::move(k));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (low[v]) {
      d.kind[v] = BlockKind::kLow;
      d.low_degree.push_back(v);
    } else if (!in_clique[v]) {
      if (is_sparse_vertex(g, v, eps / 2.0)) {
        d.kind[v] = BlockKind::kSparse;
        d.sparse.push_back(v);
      } else {
        d.kind[v] = BlockKind::kUneven;
        d.uneven.push_back(v);
      }
    }
  }
  return d;
}

std::vector<DecompositionViolation> verify_decomposition(const Graph& g,
                                                         const Decomposition& d) {
  const Vertex n = g.num_vertices();
  const double eps = d.eps;
  std::vector<DecompositionViolation> out;

  std::vector<int> seen(n, 0);
  auto mark = [&](const std::vector<Vertex>& vs) {
    for (Vertex v : vs) {
      if (v < 0 || v >= n) {
        out.push_back({v, -1, "partition"});
      } else {
        ++seen[v];
      }
    }
  };
  mark(d.uneven);
  mark(d.sparse);
  mark(d.low_degree);
  for (const auto& k : d.cliques) mark(k.vertices);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] != 1) out.push_back({v, -1, "partition"});
  }

  for (Vertex v : d.low_degree) {
    if (g.degree(v) >= d.d_min) out.push_back({v, -1, "low"});
  }
  for (Vertex v : d.sparse) {
    if (g.degree(v) < d.d_min) out.push_back({v, -1, "low"});
    if (!is_sparse_vertex(g, v, eps / 2.0)) out.push_back({v, -1, "sparse"});
  }
  for (Vertex v : d.uneven) {
    if (g.degree(v) < d.d_min) out.push_back({v, -1, "low"});
    if (!is_uneven_vertex(g, v, eps / 4.0)) out.push_back({v, -1, "uneven"});
  }

  std::vector<bool> inside(n, false);
  for (std::size_t b = 0; b < d.cliques.size(); ++b) {
    const auto& k = d.cliques[b];
    const int bi = static_cast<int>(b);
    Vertex delta = 0;
    for (Vertex v : k.vertices) {
      inside[v] = true;
      delta = std::max(delta, g.degree(v));
    }
    const double dk = delta;
    const double size = static_cast<double>(k.vertices.size());
    if (size < (1.0 - eps) * dk || size > (1.0 + 8.0 * eps) * dk) {
      out.push_back({-1, bi, "ii"});
    }
    for (Vertex v : k.vertices) {
      if (g.degree(v) < d.d_min) out.push_back({v, bi, "low"});
      if (g.degree(v) < (1.0 - 8.0 * eps) * dk) out.push_back({v, bi, "i"});
      Vertex in_nbrs = 0, out_nbrs = 0;
      for (Vertex u : g.neighbors(v)) (inside[u] ? in_nbrs : out_nbrs)++;
      const double non_nbrs = size - 1.0 - in_nbrs;
      if (non_nbrs > 8.0 * eps * dk) out.push_back({v, bi, "iii"});
      if (out_nbrs > 9.0 * eps * dk) out.push_back({v, bi, "iv"});
    }
    for (Vertex v : k.vertices) inside[v] = false;
  }
  return out;
}

void write_decomposition(std::ostream& out, const Decomposition& d) {
  for (std::size_t v = 0; v < d.kind.size(); ++v) {
    out << v << ": ";
    switch (d.kind[v]) {
      case BlockKind::kUneven: out << "uneven"; break;
      case BlockKind::kSparse: out << "sparse"; break;
      case BlockKind::kLow: out << "low"; break;
      case BlockKind::kClique: out << 'K' << d.clique_of[v]; break;
    }
    out << '\n';
  }
}

}  // namespace pscolor
