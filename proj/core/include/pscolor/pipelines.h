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

#ifndef PSCOLOR_PIPELINES_H_
#define PSCOLOR_PIPELINES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pscolor/coloring.h"
#include "pscolor/decomposition.h"
#include "pscolor/graph.h"
#include "pscolor/nibble.h"
#include "pscolor/palette.h"

namespace pscolor {

// ---------------------------------------------------------------------------
// (1 + eps) Delta coloring from sampled lists.

struct OneEpsDeltaOptions {
  double list_constant = 20.0;  // ell = ceil(c * sqrt(ln n) / eps^1.5)
  std::int64_t max_resamples = -1;
};

struct OneEpsDeltaResult {
  SolveOutcome outcome;
  ListAssignment lists;  // after trimming; governs verification
  Color palette = 0;     // ceil((1 + eps) Delta)
  std::int64_t ell = 0;
  double trim_threshold = 0.0;
  std::int64_t trimmed_total = 0;
  std::int64_t trimmed_max = 0;
  std::int64_t heavy_trim_vertices = 0;  // lost more than eps * ell / 4
  std::int64_t conflict_edges = 0;
  std::string solver;  // which stage succeeded, or "none"
};

std::int64_t one_eps_delta_list_size(Vertex n, double eps, double c);

OneEpsDeltaResult color_one_eps_delta(const Graph& g, double eps,
                                      std::uint64_t seed,
                                      OneEpsDeltaOptions options = {});

// Trimming plus the solver ladder (Moser–Tardos, greedy, brute force when
// n <= 24) on already-sampled lists. Works on any supergraph of the
// conflict graph.
OneEpsDeltaResult finish_one_eps_delta(const Graph& g,
                                       const ListAssignment& sampled,
                                       Color palette, double eps,
                                       std::int64_t ell, std::uint64_t seed,
                                       const OneEpsDeltaOptions& options);

// ---------------------------------------------------------------------------
// Triangle-free coloring with O(Delta / (gamma ln Delta)) colors.

struct TriangleFreeOptions {
  double b = 1.0;             // list size b * (Delta^gamma + ln n)
  bool sqrt_log = false;      // use sqrt(ln n) instead of ln n
  double d0 = kDefaultNibbleFloor;
  bool force_nibble = false;  // run the nibble even when C >= Delta + 1
  Color palette_override = 0; // use this C instead of the formula
  std::int64_t max_resamples = -1;
  bool check_input = true;    // reject graphs with triangles
};

struct TriangleFreeResult {
  SolveOutcome outcome;
  ListAssignment lists;  // sampled lists; govern verification
  Color palette = 0;
  std::int64_t ell = 0;
  double d = 0.0;
  bool nibble_ran = false;
  int rounds = 0;
  int i_star = 0;
  Vertex residual_vertices = 0;
  std::string solver;
  std::string phase;  // where an abort happened
};

// ceil(9 Delta / (gamma ln Delta)); Delta + 1 when Delta <= 2.
Color triangle_free_palette(Vertex max_degree, double gamma);
std::int64_t triangle_free_list_size(Vertex n, Vertex max_degree, double gamma,
                                     const TriangleFreeOptions& options);

TriangleFreeResult color_triangle_free(const Graph& g, double gamma,
                                       std::uint64_t seed,
                                       TriangleFreeOptions options = {});

// Nibble (or greedy bypass) plus residual finish on sampled lists.
// `max_degree` is Delta of the original graph.
TriangleFreeResult finish_triangle_free(const Graph& g,
                                        const ListAssignment& sampled,
                                        Color palette, Vertex max_degree,
                                        std::uint64_t seed,
                                        const TriangleFreeOptions& options);

// ---------------------------------------------------------------------------
// (deg + 1) coloring: decomposition, two-step coloring, almost-cliques.

struct DegPlusOneOptions {
  double eps = 1e-4;
  double alpha = 1.0;               // D_min = max(floor, alpha eps^10 ln n)
  Vertex min_degree_floor = 1;
  double list_constant = 4.0;       // ell = ceil(c ln n)
  double psi_scale = 1.0;           // p_active = psi_scale * (eps^2 / 32) / 16
};

struct DegPlusOneResult {
  SolveOutcome outcome;
  ListAssignment lists;  // governing lists per vertex
  std::int64_t ell = 0;
  double eps = 0.0;
  double p_active = 0.0;
  Vertex d_min = 0;
  Vertex num_sparse = 0;
  Vertex num_uneven = 0;
  Vertex num_low = 0;
  Vertex num_cliques = 0;
  Vertex clique_vertices = 0;
  Vertex num_small = 0;  // V_small among sparse and uneven
  Vertex num_large = 0;  // V_large among sparse and uneven
  Vertex first_step_activated = 0;
  Vertex first_step_colored = 0;   // kept after uncoloring
  std::int64_t available_mismatches = 0;  // incremental vs recount
  std::vector<std::string> clique_solvers;
  std::string phase;
};

DegPlusOneResult color_deg_plus_one(const Graph& g, std::uint64_t seed,
                                    DegPlusOneOptions options = {});

// ---------------------------------------------------------------------------
// (1 + eps) deg and degeneracy list coloring.

struct GreedyPipelineResult {
  SolveOutcome outcome;
  ListAssignment lists;
  std::int64_t ell = 0;
};

// ell = ceil((10 / eps) ln n).
std::int64_t one_eps_deg_list_size(Vertex n, double eps);

GreedyPipelineResult color_one_eps_deg(const Graph& g, const OneEpsDegPalette& palette,
                                       std::uint64_t seed);
GreedyPipelineResult color_one_eps_deg(const Graph& g, double eps,
                                       std::uint64_t seed);

GreedyPipelineResult color_degeneracy(const Graph& g, double eps,
                                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// Lower-bound demonstrator on a collection of (ell + 1)-cliques.

struct LowerBoundDemo {
  Vertex ell = 0;
  Vertex k = 0;                 // cliques per trial
  double q = 0.0;               // C(2 ell, ell)^-(ell + 1)
  std::int64_t trials = 0;
  std::int64_t clique_draws = 0;
  std::int64_t clique_failures = 0;
  std::int64_t trial_failures = 0;
  double expected_overall = 0.0;  // 1 - (1 - q)^k

  double clique_frequency() const {
    return clique_draws ? static_cast<double>(clique_failures) / clique_draws : 0.0;
  }
  double overall_frequency() const {
    return trials ? static_cast<double>(trial_failures) / trials : 0.0;
  }
};

double od_failure_probability(Vertex ell);

// k = 0 picks the smallest k with k q >= 5.
LowerBoundDemo lower_bound_demo_od(Vertex ell, std::int64_t trials,
                                   std::uint64_t seed, Vertex k = 0);

}  // namespace pscolor

#endif  // PSCOLOR_PIPELINES_H_
