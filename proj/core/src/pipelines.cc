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

#include "pscolor/pipelines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pscolor/conflict.h"
#include "pscolor/errors.h"
#include "pscolor/generators.h"
#include "pscolor/oracles.h"
#include "pscolor/rng.h"
#include "pscolor/solver.h"

namespace pscolor {
namespace {

double log_n(Vertex n) { return std::log(std::max<double>(n, 2)); }

std::int64_t ceil_pos(double x) {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x - 1e-9)));
}

// Success must be proper on the full input graph, not just on whatever
// subgraph a solver ran on.
void ensure_proper(const Graph& g, const ListAssignment& lists,
                   const SolveOutcome& outcome, const char* pipeline) {
  if (const auto* s = std::get_if<Success>(&outcome)) {
    const auto check = verify_coloring(g, &lists, s->coloring);
    if (!check.ok) {
      throw std::logic_error(std::string(pipeline) + ": invalid coloring at (" +
                             std::to_string(check.u) + "," +
                             std::to_string(check.v) + ")");
    }
  }
}

std::vector<Vertex> identity_order(Vertex n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

// ---------------------------------------------------------------------------

std::int64_t one_eps_delta_list_size(Vertex n, double eps, double c) {
  return ceil_pos(c * std::sqrt(log_n(n)) / std::pow(eps, 1.5));
}

OneEpsDeltaResult color_one_eps_delta(const Graph& g, double eps,
                                      std::uint64_t seed,
                                      OneEpsDeltaOptions options) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("color_one_eps_delta: eps must lie in (0, 1/2)");
  }
  const auto palette =
      static_cast<Color>(ceil_pos((1.0 + eps) * g.max_degree()));
  const std::int64_t ell =
      one_eps_delta_list_size(g.num_vertices(), eps, options.list_constant);
  const ListAssignment sampled =
      sample_lists(g, GlobalPalette{palette}, ell, seed);
  return finish_one_eps_delta(g, sampled, palette, eps, ell, seed, options);
}

OneEpsDeltaResult finish_one_eps_delta(const Graph& g,
                                       const ListAssignment& sampled,
                                       Color palette, double eps,
                                       std::int64_t ell, std::uint64_t seed,
                                       const OneEpsDeltaOptions& options) {
  OneEpsDeltaResult r;
  r.palette = palette;
  r.ell = ell;
  // When ell exceeds the palette the list is the whole palette; the
  // threshold must use the size actually drawn.
  const std::int64_t drawn = std::min<std::int64_t>(ell, palette);
  TrimResult trim = trim_bad_colors(g, sampled, eps, drawn);
  r.trim_threshold = trim.threshold;
  for (std::int64_t x : trim.removed) {
    r.trimmed_total += x;
    r.trimmed_max = std::max(r.trimmed_max, x);
    if (static_cast<double>(x) > eps * static_cast<double>(drawn) / 4.0) {
      ++r.heavy_trim_vertices;
    }
  }
  r.lists = std::move(trim.lists);
  const ConflictGraph cg = build_conflict_graph(g, r.lists);
  r.conflict_edges = cg.size();

  r.outcome = moser_tardos_list_color(cg.graph, r.lists, options.max_resamples, seed);
  r.solver = "moser_tardos";
  if (!succeeded(r.outcome)) {
    SolveOutcome greedy = greedy_color(cg.graph, r.lists,
                                       identity_order(g.num_vertices()),
                                       Coloring(g.num_vertices()));
    if (succeeded(greedy)) {
      r.outcome = std::move(greedy);
      r.solver = "greedy";
    }
  }
  if (!succeeded(r.outcome) && g.num_vertices() <= 24) {
    if (auto col = brute_force_list_color(cg.graph, r.lists)) {
      r.outcome = Success{std::move(*col), 0, "brute_force"};
      r.solver = "brute_force";
    }
  }
  if (!succeeded(r.outcome)) r.solver = "none";
  ensure_proper(g, r.lists, r.outcome, "color_one_eps_delta");
  return r;
}

// ---------------------------------------------------------------------------

Color triangle_free_palette(Vertex max_degree, double gamma) {
  if (max_degree <= 2) return max_degree + 1;
  return static_cast<Color>(
      ceil_pos(9.0 * max_degree / (gamma * std::log(static_cast<double>(max_degree)))));
}

std::int64_t triangle_free_list_size(Vertex n, Vertex max_degree, double gamma,
                                     const TriangleFreeOptions& options) {
  const double tail = options.sqrt_log ? std::sqrt(log_n(n)) : log_n(n);
  return ceil_pos(options.b * (std::pow(static_cast<double>(max_degree), gamma) + tail));
}

TriangleFreeResult color_triangle_free(const Graph& g, double gamma,
                                       std::uint64_t seed,
                                       TriangleFreeOptions options) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("color_triangle_free: gamma must lie in (0, 1)");
  }
  if (options.check_input && count_triangles(g) > 0) {
    throw PreconditionError("color_triangle_free: input contains a triangle");
  }
  const Vertex delta = g.max_degree();
  const Color palette = options.palette_override > 0
                            ? options.palette_override
                            : triangle_free_palette(delta, gamma);
  const std::int64_t ell =
      triangle_free_list_size(g.num_vertices(), delta, gamma, options);
  const ListAssignment sampled =
      sample_lists(g, GlobalPalette{palette}, ell, seed);
  return finish_triangle_free(g, sampled, palette, delta, seed, options);
}

TriangleFreeResult finish_triangle_free(const Graph& g,
                                        const ListAssignment& sampled,
                                        Color palette, Vertex max_degree,
                                        std::uint64_t seed,
                                        const TriangleFreeOptions& options) {
  const Vertex n = g.num_vertices();
  TriangleFreeResult r;
  r.lists = sampled;
  r.palette = palette;
  r.ell = sampled.ell;
  const double drawn = static_cast<double>(std::min<std::int64_t>(sampled.ell, palette));
  r.d = 1.1 * (drawn / palette) * max_degree;
  const bool run_nibble =
      options.force_nibble || (r.d >= options.d0 && palette < max_degree + 1);

  if (!run_nibble) {
    r.outcome = greedy_color(g, sampled, identity_order(n), Coloring(n));
    r.solver = "greedy";
    if (!succeeded(r.outcome)) {
      r.outcome = moser_tardos_list_color(g, sampled, options.max_resamples, seed);
      r.solver = succeeded(r.outcome) ? "moser_tardos" : "none";
      if (!succeeded(r.outcome)) r.phase = "bypass";
    }
    ensure_proper(g, r.lists, r.outcome, "color_triangle_free");
    return r;
  }

  const double d = std::max(r.d, options.d0);
  const NibbleSchedule schedule = nibble_schedule(d, options.d0);
  r.nibble_ran = true;
  r.i_star = schedule.i_star;
  NibbleState state = initial_nibble_state(g, sampled);
  auto any_active = [&] {
    return std::find(state.active.begin(), state.active.end(), true) !=
           state.active.end();
  };
  while (state.iteration < schedule.i_star && any_active()) {
    state = nibble_round(g, state, schedule, seed);
    ++r.rounds;
  }

  std::vector<Vertex> residual;
  for (Vertex v = 0; v < n; ++v) {
    if (state.active[v]) residual.push_back(v);
  }
  r.residual_vertices = static_cast<Vertex>(residual.size());
  Coloring col = state.coloring;
  if (!residual.empty()) {
    const InducedSubgraph sub = induced_subgraph(g, residual);
    auto attempt = [&](std::vector<ColorList> lists) -> SolveOutcome {
      const ListAssignment local = make_lists(std::move(lists));
      return moser_tardos_list_color(sub.graph, local, options.max_resamples, seed);
    };
    // First the trimmed nibble lists, then everything in L(v) that no
    // colored neighbor uses.
    std::vector<ColorList> trimmed, full;
    for (Vertex v : residual) {
      trimmed.push_back(state.lists[v]);
      ColorList used;
      for (Vertex u : g.neighbors(v)) {
        if (col.is_colored(u)) used.push_back(col[u]);
      }
      std::sort(used.begin(), used.end());
      ColorList rest;
      std::set_difference(sampled[v].begin(), sampled[v].end(), used.begin(),
                          used.end(), std::back_inserter(rest));
      full.push_back(std::move(rest));
    }
    SolveOutcome finish = attempt(std::move(trimmed));
    r.solver = "nibble+moser_tardos";
    if (!succeeded(finish)) {
      finish = attempt(std::move(full));
      r.solver = "nibble+moser_tardos(full residual)";
    }
    if (!succeeded(finish)) {
      r.solver = "none";
      r.phase = "nibble-residual";
      if (auto* a = std::get_if<Abort>(&finish)) {
        a->vertex = sub.to_parent[a->vertex];
      }
      r.outcome = std::move(finish);
      return r;
    }
    const auto& local = std::get<Success>(finish).coloring;
    for (std::size_t i = 0; i < residual.size(); ++i) {
      col.assignment[residual[i]] = local[static_cast<Vertex>(i)];
    }
  } else {
    r.solver = "nibble";
  }
  r.outcome = Success{std::move(col), r.rounds, r.solver};
  ensure_proper(g, r.lists, r.outcome, "color_triangle_free");
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Per-vertex count of list colors not used by a colored neighbor, kept up
// to date as vertices are colored and uncolored.
class Availability {
 public:
  Availability(const Graph& g, const ListAssignment& lists,
               const std::vector<bool>& tracked)
      : g_(g), lists_(lists), tracked_(tracked), avail_(g.num_vertices(), 0),
        bans_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!tracked_[v]) continue;
      avail_[v] = static_cast<std::int64_t>(lists[v].size());
      bans_[v].assign(lists[v].size(), 0);
    }
  }

  void update(Vertex u, Color c, int delta) {
    for (Vertex w : g_.neighbors(u)) {
      if (!tracked_[w]) continue;
      const auto& l = lists_[w];
      auto it = std::lower_bound(l.begin(), l.end(), c);
      if (it == l.end() || *it != c) continue;
      int& ban = bans_[w][it - l.begin()];
      if (delta > 0 && ban++ == 0) --avail_[w];
      if (delta < 0 && --ban == 0) ++avail_[w];
    }
  }

  std::int64_t available(Vertex v) const { return avail_[v]; }

 private:
  const Graph& g_;
  const ListAssignment& lists_;
  const std::vector<bool>& tracked_;
  std::vector<std::int64_t> avail_;
  std::vector<std::vector<int>> bans_;
};

std::vector<Color> neighbor_colors(const Graph& g, const Coloring& col, Vertex v) {
  std::vector<Color> used;
  for (Vertex u : g.neighbors(v)) {
    if (col.is_colored(u)) used.push_back(col[u]);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

Color lowest_unused(const ColorList& list, const std::vector<Color>& used) {
  for (Color c : list) {
    if (!std::binary_search(used.begin(), used.end(), c)) return c;
  }
  return kNoColor;
}

}  // namespace

DegPlusOneResult color_deg_plus_one(const Graph& g, std::uint64_t seed,
                                    DegPlusOneOptions options) {
  const Vertex n = g.num_vertices();
  DegPlusOneResult r;
  r.eps = options.eps;
  const Decomposition dec =
      decompose(g, options.eps, {options.alpha, options.min_degree_floor});
  r.d_min = dec.d_min;
  r.num_sparse = static_cast<Vertex>(dec.sparse.size());
  r.num_uneven = static_cast<Vertex>(dec.uneven.size());
  r.num_low = static_cast<Vertex>(dec.low_degree.size());
  r.num_cliques = static_cast<Vertex>(dec.cliques.size());
  for (const auto& k : dec.cliques) r.clique_vertices += static_cast<Vertex>(k.vertices.size());

  const double psi = options.eps * options.eps / 32.0;
  r.p_active = std::min(1.0, options.psi_scale * psi / 16.0);
  r.ell = ceil_pos(options.list_constant * log_n(n));

  std::vector<bool> two_step(n, false);  // sparse or uneven
  for (Vertex v : dec.sparse) two_step[v] = true;
  for (Vertex v : dec.uneven) two_step[v] = true;
  for (Vertex v = 0; v < n; ++v) {
    if (!two_step[v]) continue;
    const double dv = g.degree(v);
    Vertex small = 0, large = 0;
    for (Vertex u : g.neighbors(v)) {
      if (g.degree(u) < psi * dv) ++small;
      if (g.degree(u) > 2.0 * dv) ++large;
    }
    if (small >= 2.0 * psi * dv) ++r.num_small;
    if (large >= psi * dv) ++r.num_large;
  }

  // Main lists, and an independent single color per vertex for the first
  // step. Both are uniform over S(v) = {1..deg(v)+1}.
  const ListAssignment main_lists = sample_lists(g, DegPlusOnePalette{}, r.ell, seed);
  std::vector<Color> first_color(n);
  std::vector<bool> activated(n);
  for (Vertex v = 0; v < n; ++v) {
    Rng rng(seed, static_cast<std::uint64_t>(v), Phase::kFirstStep);
    activated[v] = rng.bernoulli(r.p_active);
    first_color[v] = static_cast<Color>(1 + rng.uniform(static_cast<std::uint64_t>(g.degree(v)) + 1));
  }

  r.lists.spec = ExplicitPalette{};
  r.lists.ell = r.ell;
  r.lists.lists.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (dec.kind[v] == BlockKind::kLow) {
      r.lists.lists[v] = palette_of(g, DegPlusOnePalette{}, v);
    } else {
      ColorList l = main_lists[v];
      l.push_back(first_color[v]);
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
      r.lists.lists[v] = std::move(l);
    }
  }

  Coloring col(n);
  Availability avail(g, main_lists, two_step);

  // First step: every vertex participates, in id order.
  for (Vertex v = 0; v < n; ++v) {
    if (!activated[v]) continue;
    ++r.first_step_activated;
    const Color c = first_color[v];
    bool clash = false;
    for (Vertex u : g.neighbors(v)) {
      if (col[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    col.assignment[v] = c;
    avail.update(v, c, +1);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (col.is_colored(v) && !two_step[v]) {
      avail.update(v, col[v], -1);
      col.assignment[v] = kNoColor;
    }
  }
  r.first_step_colored = col.colored_count();

  // Recount from scratch and compare with the incremental bookkeeping.
  for (Vertex v = 0; v < n; ++v) {
    if (!two_step[v] || col.is_colored(v)) continue;
    const auto used = neighbor_colors(g, col, v);
    std::int64_t free = 0;
    for (Color c : main_lists[v]) {
      if (!std::binary_search(used.begin(), used.end(), c)) ++free;
    }
    if (free != avail.available(v)) ++r.available_mismatches;
  }

  // Second step.
  for (Vertex v = 0; v < n; ++v) {
    if (!two_step[v] || col.is_colored(v)) continue;
    const Color c = lowest_unused(main_lists[v], neighbor_colors(g, col, v));
    if (c == kNoColor) {
      r.phase = "second-step";
      r.outcome = Abort{v, "second step: list exhausted"};
      return r;
    }
    col.assignment[v] = c;
  }

  // Almost-cliques, in index order.
  for (const auto& k : dec.cliques) {
    std::vector<ColorList> blocked;
    blocked.reserve(k.vertices.size());
    for (Vertex v : k.vertices) blocked.push_back(neighbor_colors(g, col, v));
    SolveOutcome out = color_almost_clique(g, k.vertices, main_lists, blocked);
    if (!succeeded(out)) {
      r.phase = "almost-clique";
      r.outcome = std::move(out);
      return r;
    }
    const auto& s = std::get<Success>(out);
    r.clique_solvers.push_back(s.solver);
    for (Vertex v : k.vertices) col.assignment[v] = s.coloring[v];
  }

  // Low-degree vertices from their full palettes; deg + 1 colors always
  // leave one free.
  for (Vertex v : dec.low_degree) {
    const Color c = lowest_unused(r.lists[v], neighbor_colors(g, col, v));
    if (c == kNoColor) {
      r.phase = "low-degree";
      r.outcome = Abort{v, "low-degree finish: list exhausted"};
      return r;
    }
    col.assignment[v] = c;
  }
  r.outcome = Success{std::move(col), 0, "deg_plus_one"};
  ensure_proper(g, r.lists, r.outcome, "color_deg_plus_one");
  return r;
}

// ---------------------------------------------------------------------------

std::int64_t one_eps_deg_list_size(Vertex n, double eps) {
  return ceil_pos(10.0 / eps * log_n(n));
}

GreedyPipelineResult color_one_eps_deg(const Graph& g,
                                       const OneEpsDegPalette& palette,
                                       std::uint64_t seed) {
  GreedyPipelineResult r;
  r.ell = one_eps_deg_list_size(g.num_vertices(), palette.eps);
  r.lists = sample_lists(g, palette, r.ell, seed);
  const Vertex n = g.num_vertices();
  r.outcome = greedy_color(g, r.lists, identity_order(n), Coloring(n));
  ensure_proper(g, r.lists, r.outcome, "color_one_eps_deg");
  return r;
}

GreedyPipelineResult color_one_eps_deg(const Graph& g, double eps,
                                       std::uint64_t seed) {
  return color_one_eps_deg(g, OneEpsDegPalette{eps, {}}, seed);
}

GreedyPipelineResult color_degeneracy(const Graph& g, double eps,
                                      std::uint64_t seed) {
  GreedyPipelineResult r;
  const DegeneracyResult deg = degeneracy_order(g);
  r.ell = one_eps_deg_list_size(g.num_vertices(), eps);
  r.lists = sample_lists(g, DegeneracyPalette{eps, deg.kappa_v}, r.ell, seed);
  r.outcome = greedy_color(g, r.lists, deg.order, Coloring(g.num_vertices()));
  ensure_proper(g, r.lists, r.outcome, "color_degeneracy");
  return r;
}

// ---------------------------------------------------------------------------

double od_failure_probability(Vertex ell) {
  // C(2 ell, ell)^-(ell + 1), in logs to stay finite for larger ell.
  const double log_binom = std::lgamma(2.0 * ell + 1) - 2.0 * std::lgamma(ell + 1.0);
  return std::exp(-(ell + 1.0) * log_binom);
}

LowerBoundDemo lower_bound_demo_od(Vertex ell, std::int64_t trials,
                                   std::uint64_t seed, Vertex k) {
  if (ell < 1 || trials < 1) {
    throw std::invalid_argument("lower_bound_demo_od: ell and trials must be >= 1");
  }
  LowerBoundDemo r;
  r.ell = ell;
  r.q = od_failure_probability(ell);
  r.k = k > 0 ? k : static_cast<Vertex>(std::ceil(5.0 / r.q - 1e-9));
  r.trials = trials;
  r.expected_overall = 1.0 - std::pow(1.0 - r.q, r.k);
  const Graph g = clique_collection(ell, r.k);
  const Vertex s = ell + 1;
  for (std::int64_t t = 0; t < trials; ++t) {
    const ListAssignment lists =
        sample_lists(g, GlobalPalette{2 * ell}, ell,
                     mix64(seed ^ mix64(static_cast<std::uint64_t>(t))), Phase::kDemo);
    bool any = false;
    for (Vertex b = 0; b < r.k; ++b) {
      // Every list equal to {1..ell}: the clique cannot be colored.
      bool fail = true;
      for (Vertex i = 0; i < s && fail; ++i) {
        const auto& l = lists[b * s + i];
        fail = l.back() == ell;  // sorted, distinct, size ell
      }
      r.clique_failures += fail ? 1 : 0;
      any |= fail;
    }
    r.clique_draws += r.k;
    r.trial_failures += any ? 1 : 0;
  }
  return r;
}

}  // namespace pscolor
