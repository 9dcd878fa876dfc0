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

#include "pscolor/matching.h"

#include <limits>
#include <algorithm>
#include <queue>

namespace pscolor {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  int num_left;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_left, match_right, dist;
  std::vector<std::size_t> cursor;

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < num_left; ++u) {
      if (match_left[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int r : adj[u]) {
        const int w = match_right[r];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (; cursor[u] < adj[u].size(); ++cursor[u]) {
      const int r = adj[u][cursor[u]];
      const int w = match_right[r];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = r;
        match_right[r] = u;
        ++cursor[u];
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }
};

}  // namespace

BipartiteMatching hopcroft_karp(int num_left, int num_right,
                                const std::vector<std::vector<int>>& adj) {
  HopcroftKarp hk{num_left, adj, std::vector<int>(num_left, -1),
                  std::vector<int>(num_right, -1), std::vector<int>(num_left),
                  std::vector<std::size_t>(num_left)};
  int size = 0;
  while (hk.bfs()) {
    std::fill(hk.cursor.begin(), hk.cursor.end(), 0);
    for (int u = 0; u < num_left; ++u) {
      if (hk.match_left[u] < 0 && hk.dfs(u)) ++size;
    }
  }
  return {std::move(hk.match_left), std::move(hk.match_right), size};
}

}  // namespace pscolor
