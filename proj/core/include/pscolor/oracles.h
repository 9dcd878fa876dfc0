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

#ifndef PSCOLOR_ORACLES_H_
#define PSCOLOR_ORACLES_H_

#include <cstdint>
#include <optional>

#include "pscolor/coloring.h"
#include "pscolor/graph.h"
#include "pscolor/palette.h"

namespace pscolor {

// Triangles via sorted-neighborhood intersection over edges.
std::int64_t count_triangles(const Graph& g);

// O(n^3) triple enumeration; reference for count_triangles.
std::int64_t count_triangles_naive(const Graph& g);

struct SearchBudget {
  Vertex max_vertices = 24;
  std::int64_t max_nodes = std::int64_t{1} << 40;
};

// Exhaustive backtracking in lexicographic order (vertex 0 first, colors
// ascending). Returns the first proper list coloring found, or nullopt.
// Throws BudgetError when n exceeds the budget.
std::optional<Coloring> brute_force_list_color(const Graph& g,
                                               const ListAssignment& lists,
                                               SearchBudget budget = {});

// Exact independence number by branch and bound (maximum clique of the
// complement with a greedy-coloring bound). Throws BudgetError when n or
// the node count exceeds the budget.
Vertex max_independent_set(const Graph& g, SearchBudget budget = {});

}  // namespace pscolor

#endif  // PSCOLOR_ORACLES_H_
