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

#ifndef PSCOLOR_MATCHING_H_
#define PSCOLOR_MATCHING_H_

#include <vector>

namespace pscolor {

struct BipartiteMatching {
  std::vector<int> match_left;   // right partner of each left vertex, or -1
  std::vector<int> match_right;  // left partner of each right vertex, or -1
  int size = 0;
};

// Maximum matching by Hopcroft–Karp phases (BFS layering, then vertex-
// disjoint shortest augmenting paths by DFS).
BipartiteMatching hopcroft_karp(int num_left, int num_right,
                                const std::vector<std::vector<int>>& adj);

}  // namespace pscolor

#endif  // PSCOLOR_MATCHING_H_
