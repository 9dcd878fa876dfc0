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

#ifndef PSCOLOR_COLORING_H_
#define PSCOLOR_COLORING_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pscolor/graph.h"
#include "pscolor/palette.h"

namespace pscolor {

inline constexpr Color kNoColor = 0;

// Partial vertex -> color map; kNoColor marks an uncolored vertex.
struct Coloring {
  std::vector<Color> assignment;

  Coloring() = default;
  explicit Coloring(Vertex n) : assignment(n, kNoColor) {}

  Vertex size() const { return static_cast<Vertex>(assignment.size()); }
  bool is_colored(Vertex v) const { return assignment[v] != kNoColor; }
  Color operator[](Vertex v) const { return assignment[v]; }
  Vertex colored_count() const;
  // Number of distinct colors in use.
  std::int64_t colors_used() const;
  Color max_color() const;
};

struct Success {
  Coloring coloring;
  std::int64_t steps = 0;
  std::string solver;
};
struct Abort {
  Vertex vertex = -1;
  std::string reason;
};
struct BudgetExhausted {
  std::int64_t steps = 0;
};

using SolveOutcome = std::variant<Success, Abort, BudgetExhausted>;

inline bool succeeded(const SolveOutcome& o) {
  return std::holds_alternative<Success>(o);
}
std::string outcome_tag(const SolveOutcome& o);

struct VerifyResult {
  enum class Kind { kNone, kEdge, kList };
  bool ok = true;
  Kind kind = Kind::kNone;
  Vertex u = -1;
  Vertex v = -1;
};

// Checks that no edge between two colored vertices is monochromatic and,
// when `lists` is non-null, that every assigned color lies in its list.
// Reports the first violation in vertex order.
VerifyResult verify_coloring(const Graph& g, const ListAssignment* lists,
                             const Coloring& col);

}  // namespace pscolor

#endif  // PSCOLOR_COLORING_H_
