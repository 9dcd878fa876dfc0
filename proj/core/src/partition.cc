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

#include "pscolor/partition.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pscolor/decomposition.h"
#include "pscolor/pipelines.h"
#include "pscolor/rng.h"
#include "pscolor/solver.h"

namespace pscolor {

std::int64_t zeta(BaseColorer colorer, double x, double gamma) {
  const auto plain = static_cast<std::int64_t>(std::floor(x)) + 1;
  if (colorer == BaseColorer::kGreedy || x <= std::exp(1.0)) return plain;
  const auto tf = static_cast<std::int64_t>(std::ceil(9.0 * x / (gamma * std::log(x))));
  return std::min(plain, std::max<std::int64_t>(1, tf));
}

PartitionResult partition_color(const Graph& g, Vertex k, double eps,
                                BaseColorer colorer, std::uint64_t seed,
                                PartitionOptions options) {
  if (k < 1) throw std::invalid_argument("partition_color: k must be >= 1");
  const Vertex n = g.num_vertices();
  PartitionResult r;
  const double delta = g.max_degree();
  r.target_degree = (1.0 + eps) * delta / k;
  r.bound_colors = static_cast<std::int64_t>(k) * zeta(colorer, r.target_degree, options.gamma);
  r.k_max = eps * eps * delta / (9.0 * std::log(std::max<double>(n, 2)));
  r.k_in_range = k <= r.k_max;
  if (!r.k_in_range) {
    r.log.push_back("warning: k=" + std::to_string(k) + " above eps^2 Delta / (9 ln n) = " +
                    std::to_string(r.k_max));
  }

  r.part_of.resize(n);
  std::vector<std::vector<Vertex>> members(k);
  for (Vertex v = 0; v < n; ++v) {
    Rng rng(seed, static_cast<std::uint64_t>(v), Phase::kPartition);
    r.part_of[v] = static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(k)));
    members[r.part_of[v]].push_back(v);
  }

  Coloring col(n);
  r.lists.spec = ExplicitPalette{};
  r.lists.lists.resize(n);
  Color offset = 0;
  const auto base_block = static_cast<Color>(zeta(colorer, r.target_degree, options.gamma));
  r.parts.resize(k);
  for (Vertex i = 0; i < k; ++i) {
    PartInfo& part = r.parts[i];
    const InducedSubgraph sub = induced_subgraph(g, members[i]);
    const Vertex m = sub.graph.num_vertices();
    part.size = m;
    part.max_degree = sub.graph.max_degree();
    part.block_offset = offset;
    Color block = base_block;
    SolveOutcome out = Abort{};
    for (int attempt = 0;; ++attempt) {
      if (colorer == BaseColorer::kGreedy) {
        std::vector<ColorList> full(m);
        for (auto& l : full) {
          l.resize(block);
          std::iota(l.begin(), l.end(), 1);
        }
        std::vector<Vertex> order(m);
        std::iota(order.begin(), order.end(), 0);
        out = greedy_color(sub.graph, make_lists(std::move(full)), order, Coloring(m));
        part.solver = "greedy";
      } else {
        TriangleFreeOptions tf;
        tf.palette_override = block;
        tf.check_input = false;
        auto res = color_triangle_free(sub.graph, options.gamma,
                                       mix64(seed ^ static_cast<std::uint64_t>(i)), tf);
        part.solver = res.solver;
        out = std::move(res.outcome);
      }
      if (succeeded(out) || attempt >= options.max_widenings) break;
      r.log.push_back("part " + std::to_string(i) + ": widening block " +
                      std::to_string(block) + " -> " + std::to_string(2 * block));
      block *= 2;
      ++part.widenings;
      ++r.widenings;
    }
    part.block_size = block;
    if (!succeeded(out)) {
      Vertex v = -1;
      if (const auto* a = std::get_if<Abort>(&out); a && a->vertex >= 0) {
        v = sub.to_parent[a->vertex];
      }
      r.outcome = Abort{v, "part " + std::to_string(i) + " uncolorable"};
      return r;
    }
    const auto& local = std::get<Success>(out).coloring;
    for (Vertex j = 0; j < m; ++j) {
      const Vertex v = sub.to_parent[j];
      col.assignment[v] = local[j] + offset;
      ColorList l(block);
      std::iota(l.begin(), l.end(), offset + 1);
      r.lists.lists[v] = std::move(l);
    }
    offset += block;
  }
  r.total_colors = offset;
  r.outcome = Success{std::move(col), r.widenings, "partition"};
  const auto check = verify_coloring(g, &r.lists, std::get<Success>(r.outcome).coloring);
  if (!check.ok) throw std::logic_error("partition_color: invalid coloring");
  return r;
}

double neighborhood_density(const Graph& g) {
  const double delta = g.max_degree();
  if (delta == 0) return 0.0;
  double worst = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::int64_t d = g.degree(v);
    const double inside = static_cast<double>(d * (d - 1) / 2 - neighborhood_non_edges(g, v));
    worst = std::max(worst, inside / (delta * delta));
  }
  return worst;
}

}  // namespace pscolor
