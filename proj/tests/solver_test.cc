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

#include <functional>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "pscolor/generators.h"
#include "pscolor/matching.h"
#include "pscolor/oracles.h"
#include "pscolor/solver.h"
#include "test_util.h"

namespace pscolor {
namespace {

std::vector<Vertex> identity(Vertex n) {
  std::vector<Vertex> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

Coloring coloring_of(std::vector<Color> c) {
  Coloring col;
  col.assignment = std::move(c);
  return col;
}

TEST(Verify, ProperTriangle) {
  EXPECT_TRUE(verify_coloring(complete_graph(3), nullptr, coloring_of({1, 2, 3})).ok);
}

TEST(Verify, MonochromaticEdge) {
  const VerifyResult r = verify_coloring(path_graph(2), nullptr, coloring_of({1, 1}));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.kind, VerifyResult::Kind::kEdge);
  EXPECT_EQ(r.u, 0);
  EXPECT_EQ(r.v, 1);
}

TEST(Verify, ColorOutsideList) {
  const ListAssignment l = make_lists({{1, 2}});
  const VerifyResult r = verify_coloring(empty_graph(1), &l, coloring_of({7}));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.kind, VerifyResult::Kind::kList);
  EXPECT_EQ(r.u, 0);
}

TEST(Verify, UncoloredVerticesIgnored) {
  EXPECT_TRUE(verify_coloring(path_graph(3), nullptr, coloring_of({1, 0, 1})).ok);
}

TEST(Greedy, SingleVertex) {
  const SolveOutcome out = greedy_color(empty_graph(1), make_lists({{3}}), identity(1), Coloring(1));
  ASSERT_TRUE(succeeded(out));
  EXPECT_EQ(std::get<Success>(out).coloring[0], 3);
}

TEST(Greedy, TriangleSingletonListsAbortsAtSecondVertex) {
  const SolveOutcome out =
      greedy_color(complete_graph(3), make_lists({{1}, {1}, {1}}), identity(3), Coloring(3));
  ASSERT_TRUE(std::holds_alternative<Abort>(out));
  EXPECT_EQ(std::get<Abort>(out).vertex, 1);
}

TEST(Greedy, PathLowestAvailable) {
  const SolveOutcome out = greedy_color(path_graph(3), make_lists({{1, 2}, {1, 2}, {1, 2}}),
                                        identity(3), Coloring(3));
  ASSERT_TRUE(succeeded(out));
  EXPECT_EQ(std::get<Success>(out).coloring.assignment, (std::vector<Color>{1, 2, 1}));
}

TEST(Greedy, RespectsPreColored) {
  Coloring pre(3);
  pre.assignment[1] = 1;
  const std::vector<Vertex> order{0, 2};
  const SolveOutcome out =
      greedy_color(path_graph(3), make_lists({{1, 2}, {1, 2}, {1, 2}}), order, pre);
  ASSERT_TRUE(succeeded(out));
  EXPECT_EQ(std::get<Success>(out).coloring.assignment, (std::vector<Color>{2, 1, 2}));
}

TEST(Greedy, Deterministic) {
  const Graph g = gnp(200, 0.05, 3);
  const ListAssignment l = sample_lists(g, DegPlusOnePalette{}, 1000, 1);
  const auto a = greedy_color(g, l, identity(200), Coloring(200));
  const auto b = greedy_color(g, l, identity(200), Coloring(200));
  ASSERT_TRUE(succeeded(a));
  EXPECT_EQ(std::get<Success>(a).coloring.assignment, std::get<Success>(b).coloring.assignment);
}

TEST(MoserTardos, DisjointListsNeedNoResampling) {
  const Graph g = complete_graph(4);
  const SolveOutcome out =
      moser_tardos_list_color(g, make_lists({{1, 2}, {3}, {4, 5}, {6}}), -1, 0);
  ASSERT_TRUE(succeeded(out));
  EXPECT_EQ(std::get<Success>(out).steps, 0);
}

TEST(MoserTardos, InfeasibleExhaustsBudget) {
  const SolveOutcome out = moser_tardos_list_color(complete_graph(3), make_lists({{1}, {1}, {1}}), 500, 0);
  ASSERT_TRUE(std::holds_alternative<BudgetExhausted>(out));
  EXPECT_EQ(std::get<BudgetExhausted>(out).steps, 500);
}

TEST(MoserTardos, EmptyListAborts) {
  const SolveOutcome out = moser_tardos_list_color(path_graph(3), make_lists({{1}, {}, {2}}), -1, 0);
  ASSERT_TRUE(std::holds_alternative<Abort>(out));
  EXPECT_EQ(std::get<Abort>(out).vertex, 1);
}

TEST(MoserTardos, DefaultBudget) {
  EXPECT_EQ(default_resample_budget(empty_graph(7)), 7000);
}

// A cycle plus two random perfect matchings: max degree, and so every
// c-degree, is at most 4.
Graph degree_four_graph(Vertex n, std::uint64_t seed) {
  std::vector<Edge> edges = cycle_graph(n).edges();
  for (int round = 0; round < 2; ++round) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed, static_cast<std::uint64_t>(round), Phase::kGraph);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex i = 0; i + 1 < n; i += 2) {
      if (perm[i] != perm[i + 1]) edges.emplace_back(perm[i], perm[i + 1]);
    }
  }
  return new_graph(n, edges);
}

TEST(MoserTardos, ConvergesUnderLocalLemmaCondition) {
  const Vertex n = 500;
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = degree_four_graph(n, seed);
    ASSERT_LE(g.max_degree(), 4);
    const ListAssignment l = testing::random_lists(n, 22, 22, 30, seed);
    const SolveOutcome out = moser_tardos_list_color(g, l, 50 * n, seed);
    ok += testing::check_success(g, &l, out).empty() ? 1 : 0;
  }
  EXPECT_EQ(ok, 100);
}

TEST(MoserTardos, OnlyConflictEdgesCanBeViolated) {
  // The solver's monochromatic edges all lie in the conflict graph, so
  // running on the conflict graph is equivalent to running on g.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gnp(100, 0.1, seed);
    const ListAssignment l = testing::random_lists(100, 3, 4, 12, seed);
    const SolveOutcome out = moser_tardos_list_color(g, l, -1, seed);
    if (succeeded(out)) EXPECT_EQ(testing::check_success(g, &l, out), "");
  }
}

TEST(AlmostClique, SingleVertexLowestResidual) {
  const Graph g = empty_graph(1);
  const std::vector<Vertex> block{0};
  const std::vector<ColorList> blocked{{2}};
  const SolveOutcome out = color_almost_clique(g, block, make_lists({{2, 5, 7}}), blocked);
  ASSERT_TRUE(succeeded(out));
  EXPECT_EQ(std::get<Success>(out).coloring[0], 5);
}

TEST(AlmostClique, TriangleHasSystemOfDistinctRepresentatives) {
  const Graph g = complete_graph(3);
  const std::vector<Vertex> block{0, 1, 2};
  const std::vector<ColorList> blocked(3);
  const ListAssignment l = make_lists({{1, 2}, {2, 3}, {1, 3}});
  const SolveOutcome out = color_almost_clique(g, block, l, blocked);
  EXPECT_EQ(testing::check_success(g, &l, out), "");
  EXPECT_EQ(std::get<Success>(out).solver, "matching");
  EXPECT_TRUE(brute_force_list_color(g, l).has_value());
}

TEST(AlmostClique, KFourWithThreeColorsFails) {
  const Graph g = complete_graph(4);
  const std::vector<Vertex> block{0, 1, 2, 3};
  const std::vector<ColorList> blocked(4);
  const SolveOutcome out =
      color_almost_clique(g, block, make_lists(std::vector<ColorList>(4, ColorList{1, 2, 3})), blocked);
  EXPECT_TRUE(std::holds_alternative<Abort>(out));
}

TEST(AlmostClique, BlockedColorsAreAvoided) {
  const Graph g = complete_graph(3);
  const std::vector<Vertex> block{0, 1, 2};
  const std::vector<ColorList> blocked{{1}, {1}, {4}};
  const ListAssignment l = make_lists({{1, 2}, {1, 3}, {2, 3, 4, 5}});
  const SolveOutcome out = color_almost_clique(g, block, l, blocked);
  ASSERT_TRUE(succeeded(out));
  const Coloring& c = std::get<Success>(out).coloring;
  EXPECT_EQ(c[0], 2);
  EXPECT_EQ(c[1], 3);
  EXPECT_EQ(c[2], 5);
}

TEST(AlmostClique, EmptyResidualAborts) {
  const Graph g = path_graph(2);
  const std::vector<Vertex> block{0, 1};
  const std::vector<ColorList> blocked{{1}, {}};
  const SolveOutcome out = color_almost_clique(g, block, make_lists({{1}, {1, 2}}), blocked);
  ASSERT_TRUE(std::holds_alternative<Abort>(out));
  EXPECT_EQ(std::get<Abort>(out).vertex, 0);
}

TEST(AlmostClique, BacktrackingReusesColorsOnNonEdges) {
  // A 4-cycle has no SDR from {1,2} but is 2-colorable.
  const Graph g = cycle_graph(4);
  const std::vector<Vertex> block{0, 1, 2, 3};
  const std::vector<ColorList> blocked(4);
  const ListAssignment l = make_lists(std::vector<ColorList>(4, ColorList{1, 2}));
  const SolveOutcome out = color_almost_clique(g, block, l, blocked);
  EXPECT_EQ(testing::check_success(g, &l, out), "");
  EXPECT_EQ(std::get<Success>(out).solver, "backtracking");
}

TEST(AlmostClique, MatchingStageColorsAreDistinct) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = complete_graph(10);
    const std::vector<Vertex> block = identity(10);
    const std::vector<ColorList> blocked(10);
    const ListAssignment l = testing::random_lists(10, 4, 6, 12, seed);
    const SolveOutcome out = color_almost_clique(g, block, l, blocked);
    if (!succeeded(out)) continue;
    const Success& s = std::get<Success>(out);
    if (s.solver != "matching") continue;
    const std::set<Color> distinct(s.coloring.assignment.begin(), s.coloring.assignment.end());
    EXPECT_EQ(distinct.size(), 10u);
  }
}

TEST(HopcroftKarp, SmallCases) {
  const auto m = hopcroft_karp(3, 3, {{0, 1}, {0}, {1, 2}});
  EXPECT_EQ(m.size, 3);
  EXPECT_EQ(m.match_left[1], 0);
  EXPECT_EQ(hopcroft_karp(3, 2, {{0}, {0}, {1}}).size, 2);
  EXPECT_EQ(hopcroft_karp(0, 0, {}).size, 0);
}

TEST(HopcroftKarp, AgreesWithBruteForceOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed, 0, Phase::kGraph);
    const int l = 1 + static_cast<int>(rng.uniform(6));
    const int r = 1 + static_cast<int>(rng.uniform(6));
    std::vector<std::vector<int>> adj(l);
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < r; ++j) {
        if (rng.bernoulli(0.35)) adj[i].push_back(j);
      }
    }
    // Exhaustive maximum matching by recursion over left vertices.
    std::vector<bool> used(r, false);
    std::function<int(int)> best = [&](int i) -> int {
      if (i == l) return 0;
      int b = best(i + 1);
      for (int j : adj[i]) {
        if (used[j]) continue;
        used[j] = true;
        b = std::max(b, 1 + best(i + 1));
        used[j] = false;
      }
      return b;
    };
    const auto m = hopcroft_karp(l, r, adj);
    EXPECT_EQ(m.size, best(0)) << seed;
    for (int i = 0; i < l; ++i) {
      if (m.match_left[i] >= 0) EXPECT_EQ(m.match_right[m.match_left[i]], i);
    }
  }
}

TEST(SolversVsOracle, AgreeOnSmallInstances) {
  int feasible = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const testing::SmallInstance inst = testing::small_instance(seed);
    const testing::Agreement a = testing::solvers_vs_oracle(inst, seed);
    EXPECT_EQ(a.oracle, a.solver) << seed;
    EXPECT_EQ(a.error, "") << seed;
    feasible += a.oracle ? 1 : 0;
  }
  // The fixture should exercise both sides.
  EXPECT_GT(feasible, 20);
  EXPECT_LT(feasible, 180);
}

}  // namespace
}  // namespace pscolor
