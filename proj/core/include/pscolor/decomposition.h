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

#ifndef PSCOLOR_DECOMPOSITION_H_
#define PSCOLOR_DECOMPOSITION_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pscolor/graph.h"

namespace pscolor {

// Common neighbors are counted over closed neighborhoods N[u] ∩ N[v], which
// for an edge adds u and v themselves. Only vertices of degree >= 1 can be
// dense.
struct FriendEdgeSet {
  double theta = 0.0;
  std::vector<Edge> edges;              // u < v
  std::vector<bool> dense;              // D_theta membership
  std::vector<Vertex> friend_degree;    // friend edges incident to v
};

// (u, v) is theta-balanced when min(deg) >= (1 - theta) * max(deg), and a
// theta-friend edge when it is also balanced with
// |N[u] ∩ N[v]| >= (1 - theta) * min(deg u, deg v). v is theta-dense when
// at least (1 - theta) * deg(v) of its edges are friend edges.
FriendEdgeSet friend_edges(const Graph& g, double theta);

// Direct per-pair re-derivation of friend_edges (no shared helpers), used
// as a test oracle.
FriendEdgeSet friend_edges_reference(const Graph& g, double theta);

struct AlmostClique {
  std::vector<Vertex> vertices;  // sorted
  Vertex delta = 0;              // max degree over the block
};

enum class BlockKind : std::uint8_t { kUneven, kSparse, kLow, kClique };

struct Decomposition {
  double eps = 0.0;
  Vertex d_min = 1;
  std::vector<Vertex> uneven;
  std::vector<Vertex> sparse;
  std::vector<Vertex> low_degree;
  std::vector<AlmostClique> cliques;
  // Per-vertex label; clique_of[v] is the block index for kClique.
  std::vector<BlockKind> kind;
  std::vector<int> clique_of;
};

struct DecompositionOptions {
  // D_min = max(min_degree_floor, alpha * eps^10 * ln n).
  double alpha = 1.0;
  Vertex min_degree_floor = 1;
};

Vertex low_degree_threshold(Vertex n, double eps,
                            const DecompositionOptions& options);

Decomposition decompose(const Graph& g, double eps,
                        DecompositionOptions options = {});

// Non-edges inside N(v): C(deg, 2) minus edges among neighbors.
std::int64_t neighborhood_non_edges(const Graph& g, Vertex v);
bool is_sparse_vertex(const Graph& g, Vertex v, double eps);
bool is_uneven_vertex(const Graph& g, Vertex v, double eps);

struct DecompositionViolation {
  Vertex vertex = -1;  // -1 for block-level clauses
  int block = -1;
  std::string clause;  // "i", "ii", "iii", "iv", "sparse", "uneven", "partition"
};

// Checks every almost-clique clause at its own constant:
//   (i)   deg(v) >= (1 - 8 eps) Delta(K)
//   (ii)  (1 - eps) Delta(K) <= |K| <= (1 + 8 eps) Delta(K)
//   (iii) at most 8 eps Delta(K) non-neighbors of v inside K
//   (iv)  at most 9 eps Delta(K) neighbors of v outside K
// plus (eps/2)-sparseness, (eps/4)-unevenness, and that the five sets
// partition V.
std::vector<DecompositionViolation> verify_decomposition(const Graph& g,
                                                         const Decomposition& d);

// One line per vertex: "v: uneven|sparse|low|K<i>".
void write_decomposition(std::ostream& out, const Decomposition& d);

}  // namespace pscolor

#endif  // PSCOLOR_DECOMPOSITION_H_
