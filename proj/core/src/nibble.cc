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

#include "pscolor/nibble.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pscolor/rng.h"

namespace pscolor {

NibbleSchedule nibble_schedule(double d, double d0) {
  if (!(d >= d0)) {
    throw std::invalid_argument("nibble_schedule: d=" + std::to_string(d) +
                                " below floor " + std::to_string(d0) +
                                "; use the greedy fallback");
  }
  const double ln_d = std::log(d);
  NibbleSchedule s;
  s.d = d;
  double alpha = 8.0 * d / ln_d;
  double beta = d;
  // The ratio beta/alpha shrinks geometrically, so this terminates; the cap
  // only guards against a broken recursion.
  for (int i = 1; i <= 1'000'000; ++i) {
    NibbleStep st;
    st.alpha = alpha;
    st.beta = beta;
    st.p = 1.0 / (2.0 * ln_d * alpha);
    st.keep = std::pow(1.0 - st.p, 2.0 * beta);
    st.color = std::pow(1.0 - st.p, st.keep * alpha / 2.0);
    s.steps.push_back(st);
    if (beta < alpha / 100.0) {
      s.i_star = i;
      break;
    }
    alpha = st.keep * alpha;
    beta = st.color * st.keep * beta;
  }
  if (const std::string bad = check_schedule(s); !bad.empty()) {
    throw std::logic_error("nibble_schedule: " + bad);
  }
  return s;
}

std::string check_schedule(const NibbleSchedule& s) {
  if (s.i_star < 1 || static_cast<int>(s.steps.size()) != s.i_star) {
    return "no terminal round";
  }
  const double cap = std::log(s.d) / 8.0 * (1.0 + 1e-12);
  double prev_ratio = INFINITY;
  for (int i = 1; i <= s.i_star; ++i) {
    const auto& st = s.at(i);
    const double ratio = st.beta / st.alpha;
    if (ratio > cap) return "beta/alpha above ln d / 8 at round " + std::to_string(i);
    if (ratio > prev_ratio) return "beta/alpha increased at round " + std::to_string(i);
    prev_ratio = ratio;
    if (i < s.i_star) {
      if (st.keep < 0.75) return "keep below 3/4 at round " + std::to_string(i);
      if (st.beta < st.alpha / 100.0) return "terminated late";
    }
  }
  const auto& last = s.at(s.i_star);
  if (!(last.beta < last.alpha / 100.0)) return "terminal round not below alpha/100";
  return "";
}

NibbleState initial_nibble_state(const Graph& g, const ListAssignment& lists) {
  NibbleState s;
  s.active.assign(g.num_vertices(), true);
  s.lists = lists.lists;
  s.coloring = Coloring(g.num_vertices());
  return s;
}

namespace {

// For each color of `mine`, adds 1 to counts[k] when `theirs` holds it.
void count_shared(const ColorList& mine, const ColorList& theirs,
                  std::vector<int>& counts) {
  std::size_t i = 0, j = 0;
  while (i < mine.size() && j < theirs.size()) {
    if (mine[i] < theirs[j]) {
      ++i;
    } else if (mine[i] > theirs[j]) {
      ++j;
    } else {
      ++counts[i];
      ++i;
      ++j;
    }
  }
}

}  // namespace

NibbleState nibble_round(const Graph& g, const NibbleState& state,
                         const NibbleSchedule& schedule, std::uint64_t seed,
                         NibbleRoundStats* stats, NibbleRoundOptions options) {
  const int i = state.iteration;
  if (i < 1 || i >= schedule.i_star) {
    throw std::invalid_argument("nibble_round: iteration outside [1, i_star)");
  }
  const Vertex n = g.num_vertices();
  const NibbleStep& st = schedule.at(i);
  const double p = options.p_override.value_or(st.p);
  const double keep = st.keep;
  const double cap = 2.0 * st.beta;
  const double next_cap = 2.0 * schedule.at(i + 1).beta;
  const auto round_tag = static_cast<std::uint64_t>(i) << 8;
  NibbleRoundStats local;

  // (1) Tentative assignments C_i(v).
  std::vector<ColorList> assigned(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!state.active[v]) continue;
    Rng rng(seed, static_cast<std::uint64_t>(v),
            static_cast<std::uint64_t>(Phase::kNibbleAssign) + round_tag);
    for (Color c : state.lists[v]) {
      if (rng.bernoulli(p)) assigned[v].push_back(c);
    }
  }

  // (2) Remove neighbors' assignments, then equalize so every color
  // survives with probability exactly keep_i.
  std::vector<ColorList> survived(n);
  std::vector<int> b, hit;
  for (Vertex v = 0; v < n; ++v) {
    if (!state.active[v]) continue;
    const auto& a = state.lists[v];
    b.assign(a.size(), 0);
    hit.assign(a.size(), 0);
    for (Vertex u : g.neighbors(v)) {
      if (!state.active[u]) continue;
      count_shared(a, state.lists[u], b);
      count_shared(a, assigned[u], hit);
    }
    Rng rng(seed, static_cast<std::uint64_t>(v),
            static_cast<std::uint64_t>(Phase::kNibbleEqualize) + round_tag);
    for (std::size_t k = 0; k < a.size(); ++k) {
      // Drawn unconditionally so the tape position never depends on hits.
      const double u01 = rng.uniform01();
      const double own = std::pow(1.0 - p, b[k]);
      const bool exact = b[k] <= cap;
      const bool kept = hit[k] == 0 && (own <= keep || u01 < keep / own);
      ++local.pairs;
      local.kept += kept ? 1 : 0;
      if (exact) {
        ++local.exact_pairs;
        local.exact_kept += kept ? 1 : 0;
      }
      if (kept) survived[v].push_back(a[k]);
    }
  }

  // (3) Color v with its lowest surviving assigned color.
  NibbleState next;
  next.iteration = i + 1;
  next.coloring = state.coloring;
  next.active = state.active;
  next.lists.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    if (!state.active[v]) continue;
    ColorList both;
    std::set_intersection(survived[v].begin(), survived[v].end(),
                          assigned[v].begin(), assigned[v].end(),
                          std::back_inserter(both));
    if (!both.empty()) {
      next.coloring.assignment[v] = both.front();
      next.active[v] = false;
      ++local.colored;
    }
  }

  // (4) Trim colors whose c-degree among remaining vertices is too high.
  std::vector<int> bhat;
  for (Vertex v = 0; v < n; ++v) {
    if (!next.active[v]) continue;
    const auto& a = survived[v];
    bhat.assign(a.size(), 0);
    for (Vertex u : g.neighbors(v)) {
      if (next.active[u]) count_shared(a, survived[u], bhat);
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (bhat[k] <= next_cap) {
        next.lists[v].push_back(a[k]);
      } else {
        ++local.trimmed;
      }
    }
  }
  if (stats != nullptr) *stats = local;
  return next;
}

}  // namespace pscolor
