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

#ifndef PSCOLOR_PARTITION_H_
#define PSCOLOR_PARTITION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pscolor/coloring.h"
#include "pscolor/graph.h"
#include "pscolor/palette.h"

namespace pscolor {

enum class BaseColorer { kGreedy, kTriangleFree };

// Colors a colorer guarantees on a graph of maximum degree x:
// greedy: floor(x) + 1; triangle-free: min(floor(x) + 1, ceil(9x / (gamma ln x))).
std::int64_t zeta(BaseColorer colorer, double x, double gamma);

struct PartitionOptions {
  double gamma = 0.5;        // for the triangle-free colorer
  int max_widenings = 8;     // per part
};

struct PartInfo {
  Vertex size = 0;
  Vertex max_degree = 0;
  Color block_offset = 0;  // part colors are offset + 1 .. offset + block
  Color block_size = 0;
  int widenings = 0;
  std::string solver;
};

struct PartitionResult {
  SolveOutcome outcome;
  ListAssignment lists;  // each vertex's palette block
  std::vector<Vertex> part_of;
  std::vector<PartInfo> parts;
  double target_degree = 0.0;     // (1 + eps) Delta / k
  std::int64_t bound_colors = 0;  // k * zeta(target)
  std::int64_t total_colors = 0;  // sum of final block sizes
  int widenings = 0;
  bool k_in_range = true;         // 1 <= k <= eps^2 Delta / (9 ln n)
  double k_max = 0.0;
  std::vector<std::string> log;   // one line per widening
};

// Uniform random k-partition (substream (seed, v, kPartition)); each part is
// colored by `colorer` on its own disjoint block of zeta((1+eps)Delta/k)
// colors. A failing part has its block doubled and is retried.
PartitionResult partition_color(const Graph& g, Vertex k, double eps,
                                BaseColorer colorer, std::uint64_t seed,
                                PartitionOptions options = {});

// Max over v of (edges inside N(v)) / Delta^2. A graph has delta-sparse
// neighborhoods when this is at most delta.
double neighborhood_density(const Graph& g);

}  // namespace pscolor

#endif  // PSCOLOR_PARTITION_H_
