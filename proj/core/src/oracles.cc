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

#include "pscolor/oracles.h"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "pscolor/errors.h"

namespace pscolor {

std::int64_t count_triangles(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) total += common_neighbors(g, u, v);
    }
  }
  return total / 3;
}

std::int64_t count_triangles_naive(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::int64_t total = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) ++total;
      }
    }
  }
  return total;
}

namespace {

struct BruteForce {
  const Graph& g;
  const ListAssignment& lists;
  std::int64_t max_nodes;
  std::int64_t nodes = 0;
  Coloring col;

  bool search(Vertex v) {
    if (v == g.num_vertices()) return true;
    if (++nodes > max_nodes) throw BudgetError("brute force node budget");
    for (Color c : lists[v]) {
      bool free = true;
      for (Vertex u : g.neighbors(v)) {
        if (u < v && col[u] == c) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      col.assignment[v] = c;
      if (search(v + 1)) return true;
    }
    col.assignment[v] = kNoColor;
    return false;
  }
};

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
  Vertex n;
  std::vector<Bits> adj;  // adjacency of the complement graph
  Vertex best = 0;
  std::int64_t nodes = 0;
  std::int64_t max_nodes;

  static bool test(const Bits& b, Vertex i) { return (b[i >> 6] >> (i & 63)) & 1; }

  void expand(Bits cand, Vertex size) {
    if (++nodes > max_nodes) throw BudgetError("independent set node budget");
    // Greedy coloring of the candidates gives an upper bound per vertex.
    std::vector<Vertex> order;
    std::vector<Vertex> bound;
    Bits uncolored = cand;
    Vertex color = 0;
    auto any = [](const Bits& b) {
      for (auto w : b) if (w) return true;
      return false;
    };
    while (any(uncolored)) {
      ++color;
      Bits avail = uncolored;
      for (std::size_t w = 0; w < avail.size(); ++w) {
        while (avail[w]) {
          const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(avail[w]));
          avail[w] &= avail[w] - 1;
          uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
          for (std::size_t x = 0; x < avail.size(); ++x) avail[x] &= ~adj[v][x];
          order.push_back(v);
          bound.push_back(color);
        }
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      if (size + bound[k] <= best) return;
      const Vertex v = order[k];
      Bits next(cand.size());
      bool nonempty = false;
      for (std::size_t x = 0; x < cand.size(); ++x) {
        next[x] = cand[x] & adj[v][x];
        nonempty |= next[x] != 0;
      }
      if (!nonempty) {
        best = std::max(best, size + 1);
      } else {
        expand(std::move(next), size + 1);
      }
      cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }
};

}  // namespace

std::optional<Coloring> brute_force_list_color(const Graph& g,
                                               const ListAssignment& lists,
                                               SearchBudget budget) {
  if (g.num_vertices() > budget.max_vertices) {
    throw BudgetError("brute_force_list_color: n=" +
                      std::to_string(g.num_vertices()) + " exceeds limit " +
                      std::to_string(budget.max_vertices));
  }
  BruteForce bf{g, lists, budget.max_nodes, 0, Coloring(g.num_vertices())};
  if (bf.search(0)) return bf.col;
  return std::nullopt;
}

Vertex max_independent_set(const Graph& g, SearchBudget budget) {
  const Vertex n = g.num_vertices();
  if (n > budget.max_vertices) {
    throw BudgetError("max_independent_set: n=" + std::to_string(n) +
                      " exceeds limit " + std::to_string(budget.max_vertices));
  }
  if (n == 0) return 0;
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  CliqueSearch s{n, std::vector<Bits>(n, Bits(words, 0)), 0, 0,
                 budget.max_nodes};
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && !g.has_edge(u, v)) {
        s.adj[v][u >> 6] |= std::uint64_t{1} << (u & 63);
      }
    }
  }
  Bits all(words, 0);
  for (Vertex v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
  s.expand(all, 0);
  return s.best;
}

}  // namespace pscolor
