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

#include "pscolor/solver.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pscolor/matching.h"
#include "pscolor/rng.h"

namespace pscolor {

Vertex Coloring::colored_count() const {
  return static_cast<Vertex>(std::count_if(assignment.begin(), assignment.end(),
                                           [](Color c) { return c != kNoColor; }));
}

std::int64_t Coloring::colors_used() const {
  std::vector<Color> used;
  for (Color c : assignment) {
    if (c != kNoColor) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  return std::unique(used.begin(), used.end()) - used.begin();
}

Color Coloring::max_color() const {
  Color m = 0;
  for (Color c : assignment) m = std::max(m, c);
  return m;
}

std::string outcome_tag(const SolveOutcome& o) {
  switch (o.index()) {
    case 0: return "success";
    case 1: return "abort";
    default: return "budget_exhausted";
  }
}

VerifyResult verify_coloring(const Graph& g, const ListAssignment* lists,
                             const Coloring& col) {
  VerifyResult r;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!col.is_colored(v)) continue;
    if (lists != nullptr && !lists->contains(v, col[v])) {
      return {false, VerifyResult::Kind::kList, v, v};
    }
    for (Vertex u : g.neighbors(v)) {
      if (u > v && col[u] == col[v]) {
        return {false, VerifyResult::Kind::kEdge, v, u};
      }
    }
  }
  return r;
}

namespace {

// Every solver routes its successes through here so an improper coloring
// can never escape as a Success.
SolveOutcome checked_success(const Graph& g, const ListAssignment& lists,
                             Coloring col, std::int64_t steps,
                             std::string solver) {
  const auto check = verify_coloring(g, &lists, col);
  if (!check.ok) {
    throw std::logic_error(solver + " produced an invalid coloring at (" +
                           std::to_string(check.u) + "," +
                           std::to_string(check.v) + ")");
  }
  return Success{std::move(col), steps, std::move(solver)};
}

// Lowest color of `list` not present in the sorted `used`.
Color lowest_free(const ColorList& list, const std::vector<Color>& used) {
  std::size_t j = 0;
  for (Color c : list) {
    while (j < used.size() && used[j] < c) ++j;
    if (j == used.size() || used[j] != c) return c;
  }
  return kNoColor;
}

}  // namespace

SolveOutcome greedy_color(const Graph& g, const ListAssignment& lists,
                          std::span<const Vertex> order,
                          const Coloring& pre_colored) {
  Coloring col = pre_colored.size() == g.num_vertices()
                     ? pre_colored
                     : Coloring(g.num_vertices());
  std::vector<Color> used;
  for (Vertex v : order) {
    used.clear();
    for (Vertex u : g.neighbors(v)) {
      if (col.is_colored(u)) used.push_back(col[u]);
    }
    std::sort(used.begin(), used.end());
    const Color c = lowest_free(lists[v], used);
    if (c == kNoColor) return Abort{v, "list exhausted"};
    col.assignment[v] = c;
  }
  return checked_success(g, lists, std::move(col), 0, "greedy");
}

SolveOutcome greedy_with_restarts(const Graph& g, const ListAssignment& lists,
                                  int restarts, std::uint64_t seed) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  const Coloring none(g.num_vertices());
  SolveOutcome last = greedy_color(g, lists, order, none);
  for (int r = 0; r < restarts && !succeeded(last); ++r) {
    Rng rng(seed, static_cast<std::uint64_t>(r), Phase::kRestart);
    std::shuffle(order.begin(), order.end(), rng);
    last = greedy_color(g, lists, order, none);
  }
  return last;
}

std::int64_t default_resample_budget(const Graph& g) {
  return 1000 * std::max<std::int64_t>(1, g.num_vertices());
}

SolveOutcome moser_tardos_list_color(const Graph& g, const ListAssignment& lists,
                                     std::int64_t max_resamples,
                                     std::uint64_t seed) {
  const Vertex n = g.num_vertices();
  if (max_resamples < 0) max_resamples = default_resample_budget(g);
  for (Vertex v = 0; v < n; ++v) {
    if (lists[v].empty()) return Abort{v, "empty list"};
  }
  Rng rng(seed, 0, Phase::kMoserTardos);
  Coloring col(n);
  auto draw = [&](Vertex v) {
    const auto& l = lists[v];
    col.assignment[v] = l[rng.uniform(l.size())];
  };
  for (Vertex v = 0; v < n; ++v) draw(v);

  std::set<Edge> violated;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && col[u] == col[v]) violated.emplace(u, v);
    }
  }
  auto drop = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (col[y] == col[x]) violated.erase({std::min(x, y), std::max(x, y)});
    }
  };
  auto add = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (col[y] == col[x]) violated.emplace(std::min(x, y), std::max(x, y));
    }
  };
  std::int64_t steps = 0;
  while (!violated.empty()) {
    if (steps >= max_resamples) return BudgetExhausted{steps};
    const auto [u, v] = *violated.begin();
    drop(u);
    drop(v);
    draw(u);
    draw(v);
    add(u);
    add(v);
    ++steps;
  }
  return checked_success(g, lists, std::move(col), steps, "moser_tardos");
}

namespace {

struct BlockBacktrack {
  const std::vector<std::vector<int>>& adj;  // local adjacency inside K
  const std::vector<ColorList>& residual;
  std::int64_t budget;
  std::int64_t nodes = 0;
  std::vector<Color> color = {};
  std::vector<std::vector<int>> bans = {};  // per vertex, per residual index
  std::vector<int> avail = {};
  bool out_of_budget = false;

  int index_of(int v, Color c) const {
    const auto& r = residual[v];
    auto it = std::lower_bound(r.begin(), r.end(), c);
    return (it != r.end() && *it == c) ? static_cast<int>(it - r.begin()) : -1;
  }

  void apply(int x, Color c, int delta) {
    for (int y : adj[x]) {
      if (color[y] != kNoColor) continue;
      const int j = index_of(y, c);
      if (j < 0) continue;
      if (delta > 0 && bans[y][j]++ == 0) --avail[y];
      if (delta < 0 && --bans[y][j] == 0) ++avail[y];
    }
  }

  bool search(int remaining) {
    if (remaining == 0) return true;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    int pick = -1;
    for (int v = 0; v < static_cast<int>(color.size()); ++v) {
      if (color[v] == kNoColor && (pick < 0 || avail[v] < avail[pick])) pick = v;
    }
    if (avail[pick] == 0) return false;
    for (std::size_t j = 0; j < residual[pick].size(); ++j) {
      if (bans[pick][j] > 0) continue;
      const Color c = residual[pick][j];
      color[pick] = c;
      apply(pick, c, +1);
      if (search(remaining - 1)) return true;
      apply(pick, c, -1);
      color[pick] = kNoColor;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

SolveOutcome color_almost_clique(const Graph& g, std::span<const Vertex> block,
                                 const ListAssignment& lists,
                                 std::span<const ColorList> blocked,
                                 AlmostCliqueOptions options) {
  const int k = static_cast<int>(block.size());
  std::vector<ColorList> residual(k);
  for (int i = 0; i < k; ++i) {
    const auto& l = lists[block[i]];
    ColorList b(blocked[i].begin(), blocked[i].end());
    std::sort(b.begin(), b.end());
    std::set_difference(l.begin(), l.end(), b.begin(), b.end(),
                        std::back_inserter(residual[i]));
    if (residual[i].empty()) return Abort{block[i], "empty residual list"};
  }
  Coloring col(g.num_vertices());

  // (a) distinct representatives.
  std::unordered_map<Color, int> color_id;
  std::vector<Color> id_color;
  std::vector<std::vector<int>> match_adj(k);
  for (int i = 0; i < k; ++i) {
    for (Color c : residual[i]) {
      auto [it, fresh] = color_id.emplace(c, static_cast<int>(id_color.size()));
      if (fresh) id_color.push_back(c);
      match_adj[i].push_back(it->second);
    }
  }
  const auto m = hopcroft_karp(k, static_cast<int>(id_color.size()), match_adj);
  if (m.size == k) {
    for (int i = 0; i < k; ++i) col.assignment[block[i]] = id_color[m.match_left[i]];
    return checked_success(g, lists, std::move(col), 0, "matching");
  }

  // (b) bounded backtracking on G[K].
  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < k; ++i) local[block[i]] = i;
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i) {
    for (Vertex u : g.neighbors(block[i])) {
      if (local[u] >= 0) adj[i].push_back(local[u]);
    }
  }
  BlockBacktrack bt{adj, residual, options.backtrack_nodes};
  bt.color.assign(k, kNoColor);
  bt.avail.resize(k);
  bt.bans.resize(k);
  for (int i = 0; i < k; ++i) {
    bt.avail[i] = static_cast<int>(residual[i].size());
    bt.bans[i].assign(residual[i].size(), 0);
  }
  if (bt.search(k)) {
    for (int i = 0; i < k; ++i) col.assignment[block[i]] = bt.color[i];
    return checked_success(g, lists, std::move(col), bt.nodes, "backtracking");
  }
  if (!bt.out_of_budget) return Abort{block[0], "block has no proper coloring"};

  // (c) greedy, highest in-block degree first.
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return adj[a].size() > adj[b].size();
  });
  std::vector<Color> used;
  for (int i : order) {
    used.clear();
    for (int j : adj[i]) {
      if (col.is_colored(block[j])) used.push_back(col[block[j]]);
    }
    std::sort(used.begin(), used.end());
    const Color c = lowest_free(residual[i], used);
    if (c == kNoColor) return Abort{block[i], "greedy exhausted residual list"};
    col.assignment[block[i]] = c;
  }
  return checked_success(g, lists, std::move(col), bt.nodes, "greedy");
}

}  // namespace pscolor
