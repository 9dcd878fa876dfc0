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

#ifndef PSCOLOR_CONFLICT_H_
#define PSCOLOR_CONFLICT_H_

#include <cstdint>
#include <vector>

#include "pscolor/graph.h"
#include "pscolor/palette.h"

namespace pscolor {

// Edges of the base graph whose endpoint lists intersect. Only these edges
// can ever become monochromatic, so solvers run on `graph` directly.
struct ConflictGraph {
  const Graph* base = nullptr;
  std::vector<Edge> edges;  // u < v, lexicographic
  Graph graph;              // same vertex set, conflict edges only

  std::int64_t size() const { return static_cast<std::int64_t>(edges.size()); }
};

bool lists_intersect(const ColorList& a, const ColorList& b);

ConflictGraph build_conflict_graph(const Graph& g, const ListAssignment& lists);

// Charges each conflict edge to its endpoint of lower base degree (ties to
// the lower id). The charges sum to |E_conflict|.
std::vector<std::int64_t> oriented_out_degrees(const ConflictGraph& cg);

}  // namespace pscolor

#endif  // PSCOLOR_CONFLICT_H_
