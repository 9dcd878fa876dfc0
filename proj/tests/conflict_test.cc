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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "pscolor/conflict.h"
#include "pscolor/generators.h"
#include "test_util.h"

namespace pscolor {
namespace {

TEST(ConflictGraph, DisjointListsGiveNoEdges) {
  const Graph g = complete_graph(4);
  const ConflictGraph cg = build_conflict_graph(g, make_lists({{1}, {2}, {3}, {4, 5}}));
  EXPECT_EQ(cg.size(), 0);
  EXPECT_EQ(cg.graph.num_edges(), 0);
}

TEST(ConflictGraph, IdenticalListsGiveWholeGraph) {
  const Graph g = gnp(60, 0.2, 1);
  const ListAssignment l = make_lists(std::vector<ColorList>(60, ColorList{2, 9}));
  EXPECT_EQ(build_conflict_graph(g, l).edges, g.edges());
}

TEST(ConflictGraph, TriangleExample) {
  const Graph g = complete_graph(3);
  const ConflictGraph cg = build_conflict_graph(g, make_lists({{1, 2}, {2, 3}, {4}}));
  EXPECT_EQ(cg.edges, (std::vector<Edge>{{0, 1}}));
}

TEST(ConflictGraph, MatchesBruteForceCount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp(500, 0.03, seed);
    const ListAssignment l = sample_lists(g, DegPlusOnePalette{}, 3, seed);
    const ConflictGraph cg = build_conflict_graph(g, l);
    std::int64_t count = 0;
    for (const auto& [u, v] : g.edges()) {
      bool meet = false;
      for (Color a : l[u]) {
        for (Color b : l[v]) meet |= a == b;
      }
      count += meet ? 1 : 0;
    }
    EXPECT_EQ(cg.size(), count);
    for (const auto& [u, v] : cg.edges) EXPECT_TRUE(g.has_edge(u, v));
    EXPECT_EQ(cg.graph.num_edges(), cg.size());
  }
}

TEST(OrientedOutDegrees, EmptyIsZero) {
  const Graph g = path_graph(4);
  const ConflictGraph cg = build_conflict_graph(g, make_lists({{1}, {2}, {3}, {4}}));
  EXPECT_EQ(oriented_out_degrees(cg), (std::vector<std::int64_t>(4, 0)));
}

TEST(OrientedOutDegrees, ChargedToLowerDegree) {
  // Vertex 1 is a leaf of the star centered at 0 (degree 5).
  const Graph g = star_graph(5);
  const ConflictGraph cg =
      build_conflict_graph(g, make_lists({{1}, {1}, {2}, {3}, {4}, {5}}));
  const auto out = oriented_out_degrees(cg);
  EXPECT_EQ(out[1], 1);
  EXPECT_EQ(out[0], 0);
}

TEST(OrientedOutDegrees, TiesGoToLowerId) {
  const Graph g = path_graph(2);
  const auto out = oriented_out_degrees(build_conflict_graph(g, make_lists({{1}, {1}})));
  EXPECT_EQ(out, (std::vector<std::int64_t>{1, 0}));
}

TEST(OrientedOutDegrees, ChargeIsLogSquaredUnderDegPlusOne) {
  const Vertex n = 2000;
  const double ln = std::log(n);
  const auto ell = static_cast<std::int64_t>(std::ceil(2 * ln));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gnp(n, 0.02, seed);
    const ConflictGraph cg = build_conflict_graph(g, sample_lists(g, DegPlusOnePalette{}, ell, seed));
    const auto out = oriented_out_degrees(cg);
    EXPECT_EQ(std::accumulate(out.begin(), out.end(), std::int64_t{0}), cg.size());
    EXPECT_LE(*std::max_element(out.begin(), out.end()), 12 * ln * ln) << seed;
  }
}

}  // namespace
}  // namespace pscolor
