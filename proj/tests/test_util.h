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

#ifndef PSCOLOR_TESTS_TEST_UTIL_H_
#define PSCOLOR_TESTS_TEST_UTIL_H_

#include <cmath>
#include <string>
#include <vector>

#include "pscolor/coloring.h"
#include "pscolor/generators.h"
#include "pscolor/graph.h"
#include "pscolor/oracles.h"
#include "pscolor/palette.h"
#include "pscolor/rng.h"
#include "pscolor/solver.h"

namespace pscolor::testing {

// Empty string when `outcome` is a Success that verifies against g and
// lists; a short description otherwise.
inline std::string check_success(const Graph& g, const ListAssignment* lists,
                                 const SolveOutcome& outcome) {
  const auto* s = std::get_if<Success>(&outcome);
  if (s == nullptr) return "outcome " + outcome_tag(outcome);
  if (s->coloring.colored_count() != g.num_vertices()) return "partial coloring";
  const VerifyResult r = verify_coloring(g, lists, s->coloring);
  if (!r.ok) {
    return "violation at " + std::to_string(r.u) + "," + std::to_string(r.v);
  }
  return "";
}

// Random lists of size in [lo, hi] drawn from {1..colors}.
inline ListAssignment random_lists(Vertex n, int lo, int hi, Color colors,
                                   std::uint64_t seed) {
  std::vector<ColorList> lists(n);
  for (Vertex v = 0; v < n; ++v) {
    Rng rng(seed, static_cast<std::uint64_t>(v), Phase::kGraph);
    const auto size = lo + static_cast<int>(rng.uniform(hi - lo + 1));
    for (auto i : sample_indices(colors, std::min<std::int64_t>(size, colors), rng)) {
      lists[v].push_back(static_cast<Color>(i + 1));
    }
  }
  return make_lists(std::move(lists));
}

// Three-sigma band for a binomial frequency.
inline double three_sigma(double p, double trials) {
  return 3.0 * std::sqrt(p * (1.0 - p) / trials);
}

// K_{2d} on 0..2d-1 plus vertex 2d joined to half of it.
inline Graph half_clique_adversary(Vertex d) {
  std::vector<Edge> e = complete_graph(2 * d).edges();
  for (Vertex i = 0; i < d; ++i) e.emplace_back(2 * d, i);
  return new_graph(2 * d + 1, e);
}

// k disjoint cliques of `size` vertices, each with one pendant leaf.
inline Graph cliques_plus_pendants(Vertex size, Vertex k) {
  const Graph base = clique_collection(size - 1, k);
  std::vector<Edge> e = base.edges();
  const Vertex n = base.num_vertices();
  for (Vertex c = 0; c < k; ++c) e.emplace_back(c * size, n + c);
  return new_graph(n + k, e);
}

// Small random list-coloring instance near the feasibility boundary: a dense
// gnp graph on at most 12 vertices with 2 or 3 colors per list out of 4.
struct SmallInstance {
  Graph graph;
  ListAssignment lists;
};

inline SmallInstance small_instance(std::uint64_t seed) {
  Rng rng(seed, 0, Phase::kGraph);
  const auto n = static_cast<Vertex>(4 + rng.uniform(9));
  const double p = 0.4 + 0.4 * rng.uniform01();
  SmallInstance inst{gnp(n, p, seed), {}};
  inst.lists = random_lists(n, 2, 3, 4, seed);
  return inst;
}

struct Agreement {
  bool oracle = false;
  bool solver = false;
  std::string error;  // non-empty when a claimed success fails to verify
};

// Runs greedy with restarts, then Moser-Tardos with a generous budget, and
// compares against the exhaustive oracle.
inline Agreement solvers_vs_oracle(const SmallInstance& inst, std::uint64_t seed) {
  Agreement a;
  a.oracle = brute_force_list_color(inst.graph, inst.lists).has_value();
  SolveOutcome out = greedy_with_restarts(inst.graph, inst.lists, 200, seed);
  if (!succeeded(out)) out = moser_tardos_list_color(inst.graph, inst.lists, 200000, seed);
  a.solver = succeeded(out);
  if (a.solver) a.error = check_success(inst.graph, &inst.lists, out);
  return a;
}

}  // namespace pscolor::testing

#endif  // PSCOLOR_TESTS_TEST_UTIL_H_
