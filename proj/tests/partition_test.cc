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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "pscolor/generators.h"
#include "pscolor/partition.h"
#include "pscolor/solver.h"
#include "test_util.h"

namespace pscolor {
namespace {

using testing::check_success;

TEST(Zeta, Values) {
  EXPECT_EQ(zeta(BaseColorer::kGreedy, 22.5, 0.5), 23);
  EXPECT_EQ(zeta(BaseColorer::kTriangleFree, 2.0, 0.5), 3);
  // 9x / (gamma ln x) exceeds x + 1 until x is astronomically large.
  EXPECT_EQ(zeta(BaseColorer::kTriangleFree, 100.0, 0.5), 101);
  const double x = std::exp(40.0);
  EXPECT_LT(zeta(BaseColorer::kTriangleFree, x, 0.5), static_cast<std::int64_t>(x));
}

TEST(Partition, SinglePartIsPlainGreedy) {
  const Graph g = gnp(300, 0.05, 1);
  const PartitionResult r = partition_color(g, 1, 0.5, BaseColorer::kGreedy, 1);
  ASSERT_EQ(check_success(g, &r.lists, r.outcome), "");
  ASSERT_EQ(r.parts.size(), 1u);
  EXPECT_EQ(r.parts[0].size, 300);
  EXPECT_EQ(r.parts[0].max_degree, g.max_degree());
  EXPECT_EQ(r.widenings, 0);

  std::vector<Vertex> order(300);
  std::iota(order.begin(), order.end(), 0);
  std::vector<ColorList> full(300, ColorList(r.parts[0].block_size));
  for (auto& l : full) std::iota(l.begin(), l.end(), 1);
  const SolveOutcome direct = greedy_color(g, make_lists(std::move(full)), order, Coloring(300));
  ASSERT_TRUE(succeeded(direct));
  EXPECT_EQ(std::get<Success>(direct).coloring.assignment,
            std::get<Success>(r.outcome).coloring.assignment);
}

TEST(Partition, PartsCoverAndReportDegrees) {
  const Graph g = gnp(1000, 0.03, 2);
  const PartitionResult r = partition_color(g, 4, 0.5, BaseColorer::kGreedy, 2);
  ASSERT_EQ(check_success(g, &r.lists, r.outcome), "");
  Vertex total = 0;
  for (Vertex i = 0; i < 4; ++i) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < 1000; ++v) {
      if (r.part_of[v] == i) members.push_back(v);
    }
    EXPECT_EQ(r.parts[i].size, static_cast<Vertex>(members.size()));
    EXPECT_EQ(r.parts[i].max_degree, induced_subgraph(g, members).graph.max_degree());
    total += r.parts[i].size;
  }
  EXPECT_EQ(total, 1000);
}

TEST(Partition, PartsUseDisjointBlocks) {
  const Graph g = gnp(800, 0.04, 5);
  const PartitionResult r = partition_color(g, 5, 0.5, BaseColorer::kGreedy, 5);
  ASSERT_TRUE(succeeded(r.outcome));
  const Coloring& c = std::get<Success>(r.outcome).coloring;
  for (Vertex v = 0; v < 800; ++v) {
    const PartInfo& p = r.parts[r.part_of[v]];
    EXPECT_GT(c[v], p.block_offset);
    EXPECT_LE(c[v], p.block_offset + p.block_size);
  }
}

TEST(Partition, ColorsWithinBoundPlusWidening) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gnp(600, 0.08, seed);
    const PartitionResult r = partition_color(g, 3, 0.5, BaseColorer::kGreedy, seed);
    ASSERT_EQ(check_success(g, &r.lists, r.outcome), "");
    std::int64_t extra = 0;
    for (const auto& p : r.parts) {
      extra += p.block_size - r.bound_colors / 3;
    }
    EXPECT_EQ(r.total_colors, r.bound_colors + extra);
    EXPECT_LE(std::get<Success>(r.outcome).coloring.max_color(), r.total_colors);
    if (r.widenings == 0) EXPECT_EQ(r.total_colors, r.bound_colors);
  }
}

TEST(Partition, WideningIsLogged) {
  // Three parts of K30: a part of size m needs m colors, so blocks of
  // zeta(1.5 * 29 / 3) = 15 must widen whenever a part has more than 15.
  const Graph g = complete_graph(30);
  const PartitionResult r = partition_color(g, 3, 0.5, BaseColorer::kGreedy, 4);
  ASSERT_EQ(check_success(g, &r.lists, r.outcome), "");
  int logged = 0;
  for (const auto& line : r.log) logged += line.find("widening") != std::string::npos;
  EXPECT_EQ(logged, r.widenings);
  for (const auto& p : r.parts) {
    EXPECT_EQ(p.widenings > 0, p.size > 15);
    EXPECT_GE(p.block_size, p.size);
  }
}

TEST(Partition, OutOfRangeKIsWarnedNotRejected) {
  const Graph g = gnp(200, 0.05, 7);
  const PartitionResult r = partition_color(g, 6, 0.5, BaseColorer::kGreedy, 7);
  EXPECT_FALSE(r.k_in_range);
  ASSERT_FALSE(r.log.empty());
  EXPECT_NE(r.log.front().find("warning"), std::string::npos);
  EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
  EXPECT_THROW(partition_color(g, 0, 0.5, BaseColorer::kGreedy, 7), std::invalid_argument);
}

TEST(Partition, TriangleFreeColorer) {
  const Graph g = gnp_triangle_free(2000, 0.02, 3);
  const PartitionResult r = partition_color(g, 2, 0.5, BaseColorer::kTriangleFree, 3);
  EXPECT_EQ(check_success(g, &r.lists, r.outcome), "");
}

TEST(Partition, PartDegreeAtDeskScale) {
  const Vertex n = 3000, k = 8;
  const double eps = 0.5;
  int degree_ok = 0, size_ok = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gnp(n, 100.0 / n, seed);
    const PartitionResult r = partition_color(g, k, eps, BaseColorer::kGreedy, seed);
    Vertex worst = 0, biggest = 0;
    for (const auto& p : r.parts) {
      worst = std::max(worst, p.max_degree);
      biggest = std::max(biggest, p.size);
    }
    degree_ok += worst <= r.target_degree;
    size_ok += biggest <= 4 * n / k;
  }
  EXPECT_EQ(size_ok, 20);
  // Measured only: the degree bound is a concentration statement that needs
  // Delta / k well above ln n.
  RecordProperty("degree_ok", degree_ok);
}

TEST(NeighborhoodDensity, Examples) {
  EXPECT_DOUBLE_EQ(neighborhood_density(empty_graph(4)), 0.0);
  EXPECT_DOUBLE_EQ(neighborhood_density(complete_bipartite(5, 5)), 0.0);
  // K_n: d(d-1)/2 edges among d neighbors, over d^2.
  EXPECT_DOUBLE_EQ(neighborhood_density(complete_graph(6)), 10.0 / 25.0);
}

}  // namespace
}  // namespace pscolor
