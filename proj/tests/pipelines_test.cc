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
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "pscolor/decomposition.h"
#include "pscolor/errors.h"
#include "pscolor/generators.h"
#include "pscolor/oracles.h"
#include "pscolor/pipelines.h"
#include "test_util.h"

namespace pscolor {
namespace {

using testing::check_success;

TEST(OneEpsDelta, SingleEdge) {
  const Graph g = path_graph(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OneEpsDeltaResult r = color_one_eps_delta(g, 0.4, seed);
    EXPECT_EQ(r.palette, 2);
    EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
  }
}

TEST(OneEpsDelta, RejectsBadEps) {
  EXPECT_THROW(color_one_eps_delta(path_graph(2), 0.5, 0), std::invalid_argument);
  EXPECT_THROW(color_one_eps_delta(path_graph(2), 0.0, 0), std::invalid_argument);
}

TEST(OneEpsDelta, CliqueAgreesWithBruteForce) {
  for (Vertex delta = 2; delta <= 10; ++delta) {
    const Graph g = complete_graph(delta + 1);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      OneEpsDeltaOptions o;
      o.list_constant = 1.0;  // lists smaller than the palette
      const OneEpsDeltaResult r = color_one_eps_delta(g, 0.45, seed, o);
      ASSERT_GE(r.palette, delta + 1);
      const bool oracle = brute_force_list_color(g, r.lists).has_value();
      EXPECT_EQ(succeeded(r.outcome), oracle) << delta << " " << seed;
      if (succeeded(r.outcome)) EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
    }
  }
}

TEST(OneEpsDelta, TrimmedListsGovernAndStayWithinPalette) {
  const Graph g = gnp(600, 0.05, 3);
  OneEpsDeltaOptions o;
  o.list_constant = 2.0;
  const OneEpsDeltaResult r = color_one_eps_delta(g, 0.3, 3, o);
  EXPECT_EQ(r.palette, static_cast<Color>(std::ceil(1.3 * g.max_degree())));
  EXPECT_LE(r.lists.max_color(), r.palette);
  if (succeeded(r.outcome)) EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
}

TEST(OneEpsDelta, GnpSuccessRate) {
  const Vertex n = 4096;
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gnp(n, 40.0 / n, seed);
    const OneEpsDeltaResult r = color_one_eps_delta(g, 0.3, seed);
    ok += check_success(g, &r.lists, r.outcome).empty() ? 1 : 0;
  }
  EXPECT_GE(ok, 95);
}

TEST(TriangleFree, PaletteAndListSize) {
  EXPECT_EQ(triangle_free_palette(2, 0.5), 3);
  EXPECT_EQ(triangle_free_palette(100, 0.5),
            static_cast<Color>(std::ceil(900 / (0.5 * std::log(100.0)))));
  TriangleFreeOptions o;
  EXPECT_EQ(triangle_free_list_size(1000, 100, 0.5, o),
            static_cast<std::int64_t>(std::ceil(10 + std::log(1000.0))));
  o.sqrt_log = true;
  o.b = 2;
  EXPECT_EQ(triangle_free_list_size(1000, 100, 0.5, o),
            static_cast<std::int64_t>(std::ceil(2 * (10 + std::sqrt(std::log(1000.0))))));
}

TEST(TriangleFree, CompleteBipartite) {
  const Graph g = complete_bipartite(20, 20);
  const TriangleFreeResult r = color_triangle_free(g, 0.5, 1);
  EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
  EXPECT_LE(std::get<Success>(r.outcome).coloring.max_color(), r.palette);
}

TEST(TriangleFree, RejectsTriangles) {
  EXPECT_THROW(color_triangle_free(complete_graph(3), 0.5, 0), PreconditionError);
}

TEST(TriangleFree, SparseRandomGraphs) {
  const Vertex n = 3000;
  const double p = std::pow(n, -2.0 / 3.0) / 3.0;
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gnp_triangle_free(n, p, seed);
    const TriangleFreeResult r = color_triangle_free(g, 0.5, seed);
    ok += check_success(g, &r.lists, r.outcome).empty() ? 1 : 0;
    if (succeeded(r.outcome)) {
      EXPECT_LE(std::get<Success>(r.outcome).coloring.max_color(), r.palette);
    }
  }
  EXPECT_GE(ok, 45);
}

// The formula palette exceeds Delta + 1 at every desk-scale degree, so the
// nibble only runs when the palette is squeezed below Delta + 1.
TEST(TriangleFree, NibblePathOnSqueezedPalette) {
  const Graph g = bipartite_circulant(1500, 300);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    TriangleFreeOptions o;
    o.palette_override = 150;
    o.b = 2;
    const TriangleFreeResult r = color_triangle_free(g, 0.5, seed, o);
    EXPECT_TRUE(r.nibble_ran);
    EXPECT_GE(r.rounds, 1);
    if (succeeded(r.outcome)) {
      ++ok;
      EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
      EXPECT_LE(std::get<Success>(r.outcome).coloring.max_color(), 150);
    } else {
      EXPECT_FALSE(r.phase.empty());
    }
  }
  EXPECT_GE(ok, 4);
}

TEST(TriangleFree, ForcedNibbleStaysProper) {
  const Graph g = gnp_triangle_free(1500, 0.01, 2);
  TriangleFreeOptions o;
  o.force_nibble = true;
  const TriangleFreeResult r = color_triangle_free(g, 0.5, 2, o);
  EXPECT_TRUE(r.nibble_ran);
  if (succeeded(r.outcome)) EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
}

TEST(DegPlusOne, Star) {
  const Graph g = star_graph(50);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DegPlusOneResult r = color_deg_plus_one(g, seed);
    ASSERT_EQ(check_success(g, &r.lists, r.outcome), "") << seed;
    const Coloring& c = std::get<Success>(r.outcome).coloring;
    for (Vertex v = 1; v <= 50; ++v) EXPECT_LE(c[v], 2);
    EXPECT_LE(c[0], 51);
  }
}

TEST(DegPlusOne, DisjointCliques) {
  const Graph g = clique_collection(19, 10);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DegPlusOneResult r = color_deg_plus_one(g, seed);
    EXPECT_EQ(r.num_cliques, 10);
    EXPECT_EQ(r.clique_vertices, 200);
    if (succeeded(r.outcome)) {
      ++ok;
      EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
      EXPECT_LE(std::get<Success>(r.outcome).coloring.max_color(), 20);
    } else {
      EXPECT_EQ(r.phase, "almost-clique");
    }
  }
  // Measured, not bounded: every clique needs an SDR from its sampled lists.
  RecordProperty("success_rate", ok);
}

TEST(DegPlusOne, SingleVertex) {
  const DegPlusOneResult r = color_deg_plus_one(empty_graph(1), 0);
  ASSERT_TRUE(succeeded(r.outcome));
  EXPECT_EQ(std::get<Success>(r.outcome).coloring[0], 1);
}

TEST(DegPlusOne, BlockCountsMatchDecompose) {
  const Graph g = disjoint_union(clique_collection(24, 3), gnp(300, 0.05, 4));
  DegPlusOneOptions o;
  o.eps = 0.01;
  const DegPlusOneResult r = color_deg_plus_one(g, 1, o);
  const Decomposition d = decompose(g, 0.01);
  EXPECT_EQ(r.num_cliques, static_cast<Vertex>(d.cliques.size()));
  EXPECT_EQ(r.num_sparse, static_cast<Vertex>(d.sparse.size()));
  EXPECT_EQ(r.num_uneven, static_cast<Vertex>(d.uneven.size()));
  EXPECT_EQ(r.num_low, static_cast<Vertex>(d.low_degree.size()));
}

TEST(DegPlusOne, AvailabilityRecountAgrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = disjoint_union(gnp(500, 0.05, seed), testing::cliques_plus_pendants(20, 3));
    DegPlusOneOptions o;
    o.psi_scale = 5e8;  // activate a sizable share so the first step matters
    const DegPlusOneResult r = color_deg_plus_one(g, seed, o);
    EXPECT_GT(r.first_step_activated, 0);
    EXPECT_EQ(r.available_mismatches, 0);
    if (succeeded(r.outcome)) EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
  }
}

TEST(DegPlusOne, ListsWithinDegPlusOne) {
  const Graph g = gnp(400, 0.05, 9);
  const DegPlusOneResult r = color_deg_plus_one(g, 9);
  for (Vertex v = 0; v < 400; ++v) {
    for (Color c : r.lists[v]) EXPECT_LE(c, g.degree(v) + 1);
  }
  EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
}

TEST(OneEpsDeg, LargeEpsAlwaysSucceeds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp(300, 0.05, seed);
    const GreedyPipelineResult r = color_one_eps_deg(g, 1.0, seed);
    EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
  }
}

TEST(OneEpsDeg, GnpSuccessRate) {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gnp(2000, 0.01, seed);
    const GreedyPipelineResult r = color_one_eps_deg(g, 0.2, seed);
    ok += check_success(g, &r.lists, r.outcome).empty() ? 1 : 0;
  }
  EXPECT_GE(ok, 98);
}

TEST(OneEpsDeg, SharedPoolExplicitLists) {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gnp(2000, 0.01, seed);
    const double eps = 0.2;
    const auto pool = static_cast<Color>(std::ceil((1 + eps) * g.max_degree()));
    ColorList all(pool);
    for (Color c = 0; c < pool; ++c) all[c] = c + 1;
    OneEpsDegPalette p{eps, std::vector<ColorList>(2000, all)};
    const GreedyPipelineResult r = color_one_eps_deg(g, p, seed);
    ok += check_success(g, &r.lists, r.outcome).empty() ? 1 : 0;
  }
  EXPECT_GE(ok, 98);
}

TEST(Degeneracy, TreeTwoColors) {
  const Graph g = random_tree(200, 4);
  const GreedyPipelineResult r = color_degeneracy(g, 1.0, 4);
  ASSERT_EQ(check_success(g, &r.lists, r.outcome), "");
  EXPECT_LE(std::get<Success>(r.outcome).coloring.colors_used(), 2);
}

// Each new vertex joins five random earlier ones: 5-degenerate.
Graph five_degenerate(Vertex n, std::uint64_t seed) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    Rng rng(seed, static_cast<std::uint64_t>(v), Phase::kGraph);
    for (auto i : sample_indices(v, std::min<Vertex>(5, v), rng)) {
      e.emplace_back(static_cast<Vertex>(i), v);
    }
  }
  return new_graph(n, e);
}

TEST(Degeneracy, FiveDegenerateFixture) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = five_degenerate(1000, seed);
    ASSERT_LE(degeneracy_order(g).kappa, 5);
    const double eps = 0.5;
    const GreedyPipelineResult r = color_degeneracy(g, eps, seed);
    if (!succeeded(r.outcome)) continue;
    EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
    EXPECT_LE(std::get<Success>(r.outcome).coloring.max_color(), std::ceil(6 * (1 + eps)));
  }
}

TEST(Degeneracy, CompleteGraph) {
  const Graph g = complete_graph(10);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GreedyPipelineResult r = color_degeneracy(g, 0.5, seed);
    if (succeeded(r.outcome)) {
      ++ok;
      EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
    }
  }
  RecordProperty("success_rate", ok);
}

TEST(LowerBoundDemo, ExactProbabilities) {
  EXPECT_DOUBLE_EQ(od_failure_probability(1), 0.25);
  EXPECT_NEAR(od_failure_probability(2), 1.0 / 216, 1e-15);
}

TEST(LowerBoundDemo, EllOneFrequency) {
  const LowerBoundDemo d = lower_bound_demo_od(1, 5000, 1);
  EXPECT_EQ(d.k, 20);
  EXPECT_EQ(d.clique_draws, 100000);
  EXPECT_NEAR(d.clique_frequency(), 0.25, 0.01);
}

TEST(LowerBoundDemo, EllTwoFrequency) {
  const LowerBoundDemo d = lower_bound_demo_od(2, 100000, 2, 1);
  EXPECT_NEAR(d.clique_frequency(), d.q, testing::three_sigma(d.q, d.clique_draws));
}

TEST(LowerBoundDemo, OverallFailure) {
  for (Vertex ell : {1, 2}) {
    const LowerBoundDemo d = lower_bound_demo_od(ell, 400, 3);
    EXPECT_GE(d.k * d.q, 5.0 - 1e-9);
    EXPECT_GE(d.expected_overall, 1 - std::exp(-5.0));
    EXPECT_GE(d.overall_frequency(), 0.95);
  }
}

}  // namespace
}  // namespace pscolor
