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

#ifndef PSCOLOR_SOLVER_H_
#define PSCOLOR_SOLVER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "pscolor/coloring.h"
#include "pscolor/graph.h"
#include "pscolor/palette.h"

namespace pscolor {

// Colors `order` in sequence with the lowest color of L(v) not used by an
// already-colored neighbor; pre-colored vertices keep their colors. Aborts
// at the first vertex with no available color.
SolveOutcome greedy_color(const Graph& g, const ListAssignment& lists,
                          std::span<const Vertex> order,
                          const Coloring& pre_colored);

// Id order, then `restarts` random orders (substream (seed, r, kRestart)).
SolveOutcome greedy_with_restarts(const Graph& g, const ListAssignment& lists,
                                  int restarts, std::uint64_t seed);

// Default resampling budget: 1000 * n.
std::int64_t default_resample_budget(const Graph& g);

// Moser–Tardos over the events "edge (u, v) is monochromatic". Repeatedly
// resamples both endpoints of the lexicographically least violated edge.
// max_resamples < 0 selects the default budget.
SolveOutcome moser_tardos_list_color(const Graph& g, const ListAssignment& lists,
                                     std::int64_t max_resamples,
                                     std::uint64_t seed);

struct AlmostCliqueOptions {
  std::int64_t backtrack_nodes = 1'000'000;
};

// Colors G[K] from L(v) \ blocked(v). `blocked` is aligned with `block`.
// Tries a system of distinct representatives first, then bounded
// backtracking that may reuse colors on non-adjacent pairs, then greedy in
// decreasing in-block degree order. Success.solver names the stage used.
SolveOutcome color_almost_clique(const Graph& g, std::span<const Vertex> block,
                                 const ListAssignment& lists,
                                 std::span<const ColorList> blocked,
                                 AlmostCliqueOptions options = {});

}  // namespace pscolor

#endif  // PSCOLOR_SOLVER_H_
