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

#ifndef PSCOLOR_NIBBLE_H_
#define PSCOLOR_NIBBLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pscolor/coloring.h"
#include "pscolor/graph.h"
#include "pscolor/palette.h"

namespace pscolor {

// Ideal quantities of one wasteful-coloring round.
struct NibbleStep {
  double alpha = 0.0;  // ideal list size
  double beta = 0.0;   // ideal c-degree
  double p = 0.0;      // 1 / (2 ln d * alpha)
  double keep = 0.0;   // (1 - p)^(2 beta)
  double color = 0.0;  // (1 - p)^(keep * alpha / 2)
};

// steps[i - 1] describes round i; the last entry is round i_star, the first
// with beta < alpha / 100, which is never executed.
struct NibbleSchedule {
  double d = 0.0;
  std::vector<NibbleStep> steps;
  int i_star = 0;

  const NibbleStep& at(int i) const { return steps[static_cast<std::size_t>(i - 1)]; }
};

inline constexpr double kDefaultNibbleFloor = 20.0;

// alpha_1 = 8d / ln d, beta_1 = d, alpha_{i+1} = keep_i alpha_i,
// beta_{i+1} = color_i keep_i beta_i, until beta < alpha / 100. Throws
// std::invalid_argument when d < d0; throws std::logic_error if a schedule
// invariant breaks.
NibbleSchedule nibble_schedule(double d, double d0 = kDefaultNibbleFloor);

// Empty when keep_i >= 3/4 for i < i_star, beta_i / alpha_i is
// non-increasing and at most ln d / 8, and beta_{i_star} < alpha_{i_star}/100.
std::string check_schedule(const NibbleSchedule& s);

struct NibbleState {
  std::vector<bool> active;       // still in G_i
  std::vector<ColorList> lists;   // A_i(v)
  int iteration = 1;
  Coloring coloring;
};

NibbleState initial_nibble_state(const Graph& g, const ListAssignment& lists);

struct NibbleRoundOptions {
  // Replaces p_i (both the assignment rate and keep_i(v, c)); test hook.
  std::optional<double> p_override;
};

struct NibbleRoundStats {
  std::int64_t pairs = 0;           // (v, c) with v active, c in A_i(v)
  std::int64_t kept = 0;            // ... with c surviving into Â_i(v)
  std::int64_t exact_pairs = 0;     // pairs whose b_i(v, c) <= 2 beta_i
  std::int64_t exact_kept = 0;
  std::int64_t colored = 0;
  std::int64_t trimmed = 0;         // colors removed by the c-degree cap
};

// One round of wasteful coloring at state.iteration (must be < i_star):
// assignment, equalized keep, coloring, and trimming to 2 beta_{i+1}.
NibbleState nibble_round(const Graph& g, const NibbleState& state,
                         const NibbleSchedule& schedule, std::uint64_t seed,
                         NibbleRoundStats* stats = nullptr,
                         NibbleRoundOptions options = {});

}  // namespace pscolor

#endif  // PSCOLOR_NIBBLE_H_
