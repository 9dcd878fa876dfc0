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

#ifndef PSCOLOR_SUBLINEAR_H_
#define PSCOLOR_SUBLINEAR_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pscolor/coloring.h"
#include "pscolor/graph.h"
#include "pscolor/palette.h"

namespace pscolor {

// Monotone resource counters. Memory is counted in words: one per stored
// edge, per potential-list color, per degree record.
struct ResourceLedger {
  std::int64_t stored_edges = 0;    // edges kept after the final prune
  std::int64_t admitted_edges = 0;  // edges ever admitted to storage
  std::int64_t degree_queries = 0;
  std::int64_t neighbor_queries = 0;
  std::int64_t pair_queries = 0;
  std::int64_t peak_words = 0;
  std::int64_t resample_steps = 0;

  std::int64_t total_queries() const {
    return degree_queries + neighbor_queries + pair_queries;
  }
  void observe_words(std::int64_t words) {
    if (words > peak_words) peak_words = words;
  }
};

enum class SimMode { kOneEpsDelta, kTriangleFree, kOneEpsDeg, kDegPlusOne };

std::string sim_mode_name(SimMode mode);
// Accepts "one-eps-delta"/"od", "triangle-free"/"trifree",
// "one-eps-deg"/"onedeg", "deg-plus-one"/"degp1".
std::optional<SimMode> parse_sim_mode(const std::string& name);

struct SimOptions {
  double eps_delta = 0.3;        // one-eps-delta
  double od_list_constant = 20.0;
  double gamma = 0.5;            // triangle-free
  double tf_b = 1.0;
  double eps_deg = 0.5;          // one-eps-deg
  double degp1_list_constant = 2.0;  // ell = ceil(c ln n)
  double neighbor_factor = 10.0; // neighbor queries per vertex: ceil(c sqrt n)
  int max_retries = 3;
  std::int64_t max_resamples = -1;
};

struct SimResult {
  SolveOutcome outcome;
  ResourceLedger ledger;
  ListAssignment lists;       // resolved lists; govern verification
  std::vector<Edge> stored;   // edges kept by the simulator (u < v)
  std::vector<Edge> conflict; // stored edges whose resolved lists meet
  Color palette = 0;          // global modes: C; local modes: max |S(v)|
  std::int64_t ell = 0;
  Vertex max_degree = 0;
  bool short_lists = false;
  int retries = 0;
  std::string solver;
  std::uint64_t plan_hash = 0;   // query model only
  std::int64_t plan_size = 0;    // query model only
};

// ---------------------------------------------------------------------------
// Streaming.

struct EdgeStream {
  Vertex n = 0;
  std::vector<Edge> edges;
};

enum class StreamOrder { kNatural, kReversed, kShuffled };
EdgeStream make_edge_stream(const Graph& g, StreamOrder order = StreamOrder::kNatural,
                            std::uint64_t seed = 0);

// Single pass over `next` (returns nullopt at the end). Potential lists are
// drawn before the first edge; an edge is held while some pair of scales
// still reachable from the endpoints' running degrees has intersecting
// lists, and held edges are re-tested whenever an endpoint's lowest
// reachable scale moves up.
SimResult stream_color(Vertex n, const std::function<std::optional<Edge>()>& next,
                       SimMode mode, std::uint64_t seed, const SimOptions& options = {});
SimResult stream_color(const EdgeStream& stream, SimMode mode, std::uint64_t seed,
                       const SimOptions& options = {});
// Reads an edge-list file strictly forward.
SimResult stream_color_file(const std::string& path, SimMode mode,
                            std::uint64_t seed, const SimOptions& options = {});

// ---------------------------------------------------------------------------
// Query model.

class GraphOracle {
 public:
  virtual ~GraphOracle() = default;
  virtual Vertex num_vertices() const = 0;
  virtual Vertex degree(Vertex v) = 0;
  // i-th neighbor of v, or nullopt when i >= deg(v).
  virtual std::optional<Vertex> neighbor(Vertex v, std::int64_t i) = 0;
  virtual bool pair(Vertex u, Vertex v) = 0;
};

// Answers from an in-memory graph and counts every call on its own,
// independently of any ledger.
class CountingOracle : public GraphOracle {
 public:
  explicit CountingOracle(const Graph& g) : g_(g) {}
  Vertex num_vertices() const override { return g_.num_vertices(); }
  Vertex degree(Vertex v) override;
  std::optional<Vertex> neighbor(Vertex v, std::int64_t i) override;
  bool pair(Vertex u, Vertex v) override;

  std::int64_t degree_calls = 0;
  std::int64_t neighbor_calls = 0;
  std::int64_t pair_calls = 0;
  // Order-sensitive hash of every call made, for plan comparisons.
  std::uint64_t call_hash = 0;

 private:
  void record(std::uint64_t kind, std::uint64_t a, std::uint64_t b);
  const Graph& g_;
};

struct QueryPlan {
  Vertex n = 0;
  std::int64_t neighbors_per_vertex = 0;
  std::vector<Edge> pairs;  // u < v
  std::uint64_t hash = 0;

  std::int64_t size() const {
    return n + n * neighbors_per_vertex + static_cast<std::int64_t>(pairs.size());
  }
};

// Fixed before any answer is read: a pure function of (n, mode, seed).
QueryPlan build_query_plan(Vertex n, SimMode mode, std::uint64_t seed,
                           const SimOptions& options = {});

SimResult query_color(GraphOracle& oracle, SimMode mode, std::uint64_t seed,
                      const SimOptions& options = {});

}  // namespace pscolor

#endif  // PSCOLOR_SUBLINEAR_H_
