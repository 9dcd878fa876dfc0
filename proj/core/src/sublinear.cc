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

#include "pscolor/sublinear.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "pscolor/conflict.h"
#include "pscolor/edge_list_io.h"
#include "pscolor/errors.h"
#include "pscolor/pipelines.h"
#include "pscolor/rng.h"
#include "pscolor/solver.h"

namespace pscolor {
namespace {

using Bits = std::vector<std::uint64_t>;

bool meets(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

std::uint64_t edge_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
         static_cast<std::uint32_t>(std::max(u, v));
}

double log_n(Vertex n) { return std::log(std::max<double>(n, 2)); }

// How a mode turns degrees into palettes and list sizes.
struct ModeParams {
  SimMode mode;
  bool global = false;
  std::int64_t family_ell = 1;
  std::int64_t max_palette = 1;
  // Local modes: palette of a vertex of degree d. Global: palette for Delta = d.
  std::function<std::int64_t(Vertex)> palette;
  std::function<std::int64_t(Vertex)> final_ell;  // given Delta
};

TriangleFreeOptions tf_options(const SimOptions& o) {
  TriangleFreeOptions tf;
  tf.b = o.tf_b;
  tf.max_resamples = o.max_resamples;
  tf.check_input = false;
  return tf;
}

ModeParams mode_params(Vertex n, SimMode mode, const SimOptions& o) {
  ModeParams p;
  p.mode = mode;
  const Vertex top = std::max<Vertex>(n - 1, 0);
  auto ceil1 = [](double x) {
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x - 1e-9)));
  };
  switch (mode) {
    case SimMode::kDegPlusOne: {
      p.family_ell = ceil1(o.degp1_list_constant * log_n(n));
      p.palette = [](Vertex d) -> std::int64_t { return d + 1; };
      break;
    }
    case SimMode::kOneEpsDeg: {
      const double eps = o.eps_deg;
      p.family_ell = one_eps_deg_list_size(n, eps);
      p.palette = [eps, ceil1](Vertex d) { return ceil1((1.0 + eps) * d); };
      break;
    }
    case SimMode::kOneEpsDelta: {
      const double eps = o.eps_delta;
      p.global = true;
      p.family_ell = one_eps_delta_list_size(n, eps, o.od_list_constant);
      p.palette = [eps, ceil1](Vertex d) { return ceil1((1.0 + eps) * d); };
      break;
    }
    case SimMode::kTriangleFree: {
      const double gamma = o.gamma;
      const TriangleFreeOptions tf = tf_options(o);
      p.global = true;
      p.family_ell = triangle_free_list_size(n, top, gamma, tf);
      p.palette = [gamma](Vertex d) -> std::int64_t {
        return triangle_free_palette(d, gamma);
      };
      p.final_ell = [n, gamma, tf](Vertex d) {
        return triangle_free_list_size(n, d, gamma, tf);
      };
      break;
    }
  }
  if (!p.final_ell) {
    const std::int64_t ell = p.family_ell;
    p.final_ell = [ell](Vertex) { return ell; };
  }
  p.max_palette = std::max<std::int64_t>(p.palette(top), 3);
  return p;
}

// Potential lists of every vertex, as sorted lists and as bitsets over
// colors 1..2^t (bit c - 1).
struct FamilyTables {
  int t = 1;
  std::size_t words = 1;
  std::int64_t list_words = 0;
  std::vector<std::vector<Bits>> scale;  // [v][i], i = 1..t at index i - 1

  FamilyTables(const PotentialListFamily& fam, Vertex n) : t(fam.num_scales()) {
    words = std::max<std::size_t>(1, (std::size_t{1} << t) / 64);
    scale.assign(n, std::vector<Bits>(t, Bits(words, 0)));
    for (Vertex v = 0; v < n; ++v) {
      for (int i = 1; i <= t; ++i) {
        const ColorList l = fam.list(v, i);
        list_words += static_cast<std::int64_t>(l.size());
        Bits& b = scale[v][i - 1];
        for (Color c : l) b[(c - 1) >> 6] |= std::uint64_t{1} << ((c - 1) & 63);
      }
    }
  }
  const Bits& at(Vertex v, int i) const { return scale[v][i - 1]; }
};

SolveOutcome solve_on_lists(const Graph& conflict, ListAssignment& lists,
                            const ModeParams& p, Vertex delta, std::int64_t ell,
                            std::uint64_t seed, const SimOptions& o,
                            std::string& solver) {
  const Vertex n = conflict.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  switch (p.mode) {
    case SimMode::kOneEpsDelta: {
      OneEpsDeltaOptions od;
      od.list_constant = o.od_list_constant;
      od.max_resamples = o.max_resamples;
      auto r = finish_one_eps_delta(conflict, lists, static_cast<Color>(p.palette(delta)),
                                    o.eps_delta, ell, seed, od);
      solver = r.solver;
      lists = std::move(r.lists);
      return std::move(r.outcome);
    }
    case SimMode::kTriangleFree: {
      auto r = finish_triangle_free(conflict, lists, static_cast<Color>(p.palette(delta)),
                                    delta, seed, tf_options(o));
      solver = r.solver;
      return std::move(r.outcome);
    }
    case SimMode::kOneEpsDeg: {
      solver = "greedy";
      return greedy_color(conflict, lists, order, Coloring(n));
    }
    case SimMode::kDegPlusOne: {
      SolveOutcome out = greedy_color(conflict, lists, order, Coloring(n));
      solver = "greedy";
      if (!succeeded(out)) {
        out = moser_tardos_list_color(conflict, lists, o.max_resamples, seed);
        solver = succeeded(out) ? "moser_tardos" : "none";
      }
      return out;
    }
  }
  return Abort{-1, "unknown mode"};
}

// Resolves lists, keeps the stored edges whose lists meet, and solves.
void finish_simulation(SimResult& r, Vertex n, const std::vector<Vertex>& deg,
                       const ModeParams& p, const PotentialListFamily& fam,
                       std::uint64_t seed, const SimOptions& o) {
  Vertex delta = 0;
  for (Vertex d : deg) delta = std::max(delta, d);
  r.max_degree = delta;
  r.ell = p.final_ell(delta);
  r.lists.spec = ExplicitPalette{};
  r.lists.ell = r.ell;
  r.lists.lists.assign(n, {});
  r.palette = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::int64_t s = p.global ? p.palette(delta) : p.palette(deg[v]);
    r.palette = std::max<Color>(r.palette, static_cast<Color>(s));
    ResolvedList res = resolve_for_palette(fam, v, s, r.ell);
    r.short_lists |= res.short_list;
    r.lists.lists[v] = std::move(res.colors);
  }
  r.conflict.clear();
  for (const auto& [u, v] : r.stored) {
    if (lists_intersect(r.lists[u], r.lists[v])) r.conflict.emplace_back(u, v);
  }
  const Graph cg = Graph::from_edges(n, r.conflict);
  r.outcome = solve_on_lists(cg, r.lists, p, delta, r.ell, seed, o, r.solver);
  if (const auto* s = std::get_if<Success>(&r.outcome)) {
    if (r.solver == "moser_tardos") r.ledger.resample_steps += s->steps;
  } else if (const auto* b = std::get_if<BudgetExhausted>(&r.outcome)) {
    r.ledger.resample_steps += b->steps;
  }
}

}  // namespace

std::string sim_mode_name(SimMode mode) {
  switch (mode) {
    case SimMode::kOneEpsDelta: return "one-eps-delta";
    case SimMode::kTriangleFree: return "triangle-free";
    case SimMode::kOneEpsDeg: return "one-eps-deg";
    case SimMode::kDegPlusOne: return "deg-plus-one";
  }
  return "unknown";
}

std::optional<SimMode> parse_sim_mode(const std::string& name) {
  if (name == "one-eps-delta" || name == "od") return SimMode::kOneEpsDelta;
  if (name == "triangle-free" || name == "trifree") return SimMode::kTriangleFree;
  if (name == "one-eps-deg" || name == "onedeg") return SimMode::kOneEpsDeg;
  if (name == "deg-plus-one" || name == "degp1") return SimMode::kDegPlusOne;
  return std::nullopt;
}

EdgeStream make_edge_stream(const Graph& g, StreamOrder order, std::uint64_t seed) {
  EdgeStream s;
  s.n = g.num_vertices();
  s.edges = g.edges();
  if (order == StreamOrder::kReversed) {
    std::reverse(s.edges.begin(), s.edges.end());
  } else if (order == StreamOrder::kShuffled) {
    Rng rng(seed, 0, Phase::kGraph);
    std::shuffle(s.edges.begin(), s.edges.end(), rng);
  }
  return s;
}

SimResult stream_color(Vertex n, const std::function<std::optional<Edge>()>& next,
                       SimMode mode, std::uint64_t seed, const SimOptions& options) {
  const ModeParams p = mode_params(n, mode, options);
  const PotentialListFamily fam(p.max_palette, p.family_ell, seed);
  const FamilyTables tables(fam, n);
  const int t = tables.t;
  SimResult r;

  // Suffix unions over scales >= i, for the local storage rule.
  std::vector<std::vector<Bits>> suffix;
  if (!p.global) {
    suffix.assign(n, std::vector<Bits>(t, Bits(tables.words, 0)));
    for (Vertex v = 0; v < n; ++v) {
      for (int i = t; i >= 1; --i) {
        Bits& b = suffix[v][i - 1];
        b = tables.at(v, i);
        if (i < t) {
          for (std::size_t w = 0; w < b.size(); ++w) b[w] |= suffix[v][i][w];
        }
      }
    }
  }

  std::vector<Vertex> deg(n, 0);
  std::vector<int> low(n, fam.scale_for(p.palette(0)));
  int global_low = fam.scale_for(p.palette(0));
  Vertex running_max = 0;
  const std::int64_t base_words = tables.list_words + n;
  r.ledger.observe_words(base_words);

  std::unordered_set<std::uint64_t> held;
  std::vector<std::vector<Vertex>> held_adj(n);

  auto admissible = [&](Vertex u, Vertex v) {
    if (!p.global) return meets(suffix[u][low[u] - 1], suffix[v][low[v] - 1]);
    for (int i = global_low; i <= t; ++i) {
      if (meets(tables.at(u, i), tables.at(v, i))) return true;
    }
    return false;
  };
  auto recheck_vertex = [&](Vertex x) {
    auto& adj = held_adj[x];
    std::size_t keep = 0;
    for (Vertex y : adj) {
      const auto key = edge_key(x, y);
      if (!held.count(key)) continue;
      if (!admissible(x, y)) {
        held.erase(key);
        continue;
      }
      adj[keep++] = y;
    }
    adj.resize(keep);
  };
  auto recheck_all = [&] {
    for (auto it = held.begin(); it != held.end();) {
      const auto u = static_cast<Vertex>(*it >> 32);
      const auto v = static_cast<Vertex>(*it & 0xffffffffu);
      it = admissible(u, v) ? std::next(it) : held.erase(it);
    }
  };

  while (auto e = next()) {
    auto [u, v] = *e;
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw MalformedInputError("stream_color: bad edge");
    }
    ++deg[u];
    ++deg[v];
    if (!p.global) {
      for (Vertex x : {u, v}) {
        const int s = fam.scale_for(p.palette(deg[x]));
        if (s > low[x]) {
          low[x] = s;
          recheck_vertex(x);
        }
      }
    } else {
      running_max = std::max({running_max, deg[u], deg[v]});
      const int s = fam.scale_for(p.palette(running_max));
      if (s > global_low) {
        global_low = s;
        recheck_all();
      }
    }
    if (admissible(u, v) && held.insert(edge_key(u, v)).second) {
      ++r.ledger.admitted_edges;
      held_adj[u].push_back(v);
      held_adj[v].push_back(u);
    }
    r.ledger.observe_words(base_words + static_cast<std::int64_t>(held.size()));
  }

  // Final degrees pin every vertex to one scale; drop what no longer meets.
  Vertex delta = 0;
  for (Vertex d : deg) delta = std::max(delta, d);
  for (std::uint64_t key : held) {
    const auto u = static_cast<Vertex>(key >> 32);
    const auto v = static_cast<Vertex>(key & 0xffffffffu);
    const int iu = fam.scale_for(p.global ? p.palette(delta) : p.palette(deg[u]));
    const int iv = fam.scale_for(p.global ? p.palette(delta) : p.palette(deg[v]));
    if (meets(tables.at(u, iu), tables.at(v, iv))) r.stored.emplace_back(u, v);
  }
  std::sort(r.stored.begin(), r.stored.end());
  finish_simulation(r, n, deg, p, fam, seed, options);
  // Resolved lists are known now, so only true conflict edges stay stored.
  r.stored = r.conflict;
  r.ledger.stored_edges = static_cast<std::int64_t>(r.stored.size());
  return r;
}

SimResult stream_color(const EdgeStream& stream, SimMode mode, std::uint64_t seed,
                       const SimOptions& options) {
  std::size_t pos = 0;
  return stream_color(
      stream.n,
      [&]() -> std::optional<Edge> {
        if (pos == stream.edges.size()) return std::nullopt;
        return stream.edges[pos++];
      },
      mode, seed, options);
}

SimResult stream_color_file(const std::string& path, SimMode mode,
                            std::uint64_t seed, const SimOptions& options) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open " + path);
  ForwardEdgeReader reader(in);
  return stream_color(reader.num_vertices(), [&] { return reader.next(); }, mode,
                      seed, options);
}

// ---------------------------------------------------------------------------

void CountingOracle::record(std::uint64_t kind, std::uint64_t a, std::uint64_t b) {
  call_hash = mix64(call_hash ^ mix64((kind << 62) ^ (a << 31) ^ b));
}

Vertex CountingOracle::degree(Vertex v) {
  ++degree_calls;
  record(1, static_cast<std::uint64_t>(v), 0);
  return g_.degree(v);
}

std::optional<Vertex> CountingOracle::neighbor(Vertex v, std::int64_t i) {
  ++neighbor_calls;
  record(2, static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(i));
  if (i < 0 || i >= g_.degree(v)) return std::nullopt;
  return g_.neighbors(v)[static_cast<std::size_t>(i)];
}

bool CountingOracle::pair(Vertex u, Vertex v) {
  ++pair_calls;
  record(3, static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v));
  return g_.has_edge(u, v);
}

QueryPlan build_query_plan(Vertex n, SimMode mode, std::uint64_t seed,
                           const SimOptions& options) {
  const ModeParams p = mode_params(n, mode, options);
  const PotentialListFamily fam(p.max_palette, p.family_ell, seed);
  const FamilyTables tables(fam, n);
  QueryPlan plan;
  plan.n = n;
  const double root = std::sqrt(static_cast<double>(n));
  plan.neighbors_per_vertex = std::min<std::int64_t>(
      static_cast<std::int64_t>(std::ceil(options.neighbor_factor * root)),
      std::max<Vertex>(n - 1, 0));
  // Both endpoints of an unseen edge have degree >= the neighbor budget, so
  // their final palettes are at least this large.
  const auto threshold = std::min<double>(
      root, static_cast<double>(p.palette(static_cast<Vertex>(plan.neighbors_per_vertex))));

  std::vector<Bits> high(n, Bits(tables.words, 0));
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 1; i <= tables.t; ++i) {
      if (static_cast<double>(PotentialListFamily::scale_size(i)) < threshold) continue;
      const Bits& b = tables.at(v, i);
      for (std::size_t w = 0; w < b.size(); ++w) high[v][w] |= b[w];
    }
  }
  std::uint64_t h = mix64(static_cast<std::uint64_t>(n) ^
                          (static_cast<std::uint64_t>(plan.neighbors_per_vertex) << 32));
  // No degree can exceed n - 1, so neighbor answers already see every edge.
  const bool need_pairs = plan.neighbors_per_vertex < n - 1;
  for (Vertex u = 0; need_pairs && u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (meets(high[u], high[v])) {
        plan.pairs.emplace_back(u, v);
        h = mix64(h ^ edge_key(u, v));
      }
    }
  }
  plan.hash = h;
  return plan;
}

SimResult query_color(GraphOracle& oracle, SimMode mode, std::uint64_t seed,
                      const SimOptions& options) {
  const Vertex n = oracle.num_vertices();
  const ModeParams p = mode_params(n, mode, options);
  ResourceLedger ledger;
  SimResult r;
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t s =
        attempt == 0 ? seed : mix64(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt)));
    const QueryPlan plan = build_query_plan(n, mode, s, options);

    // Execute the whole plan; nothing below feeds back into it.
    std::vector<Vertex> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = oracle.degree(v);
    ledger.degree_queries += n;
    std::vector<Edge> found;
    for (Vertex v = 0; v < n; ++v) {
      for (std::int64_t i = 0; i < plan.neighbors_per_vertex; ++i) {
        if (auto u = oracle.neighbor(v, i)) found.emplace_back(std::min(v, *u), std::max(v, *u));
      }
    }
    ledger.neighbor_queries += n * plan.neighbors_per_vertex;
    for (const auto& [u, v] : plan.pairs) {
      if (oracle.pair(u, v)) found.emplace_back(u, v);
    }
    ledger.pair_queries += static_cast<std::int64_t>(plan.pairs.size());
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    const PotentialListFamily fam(p.max_palette, p.family_ell, s);
    r = SimResult{};
    r.plan_hash = plan.hash;
    r.plan_size = plan.size();
    r.retries = attempt;
    r.stored = std::move(found);
    ledger.stored_edges = static_cast<std::int64_t>(r.stored.size());
    ledger.admitted_edges += static_cast<std::int64_t>(r.stored.size());
    ledger.observe_words(n + static_cast<std::int64_t>(r.stored.size()));
    r.ledger = ledger;
    finish_simulation(r, n, deg, p, fam, s, options);
    if (!r.short_lists || attempt >= options.max_retries) return r;
    ledger = r.ledger;
  }
}

}  // namespace pscolor
