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

#ifndef PSCOLOR_PALETTE_H_
#define PSCOLOR_PALETTE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pscolor/graph.h"
#include "pscolor/rng.h"

namespace pscolor {

using ColorList = std::vector<Color>;

// The palettes S(v) a sample is drawn from.
struct GlobalPalette {
  Color num_colors = 1;  // S(v) = {1..C}
};
struct DegPlusOnePalette {};  // S(v) = {1..deg(v)+1}
struct OneEpsDegPalette {
  double eps = 0.5;
  // Optional arbitrary S(v); when empty S(v) = {1..ceil((1+eps)deg(v))}.
  std::vector<ColorList> explicit_lists;
};
struct DegeneracyPalette {
  double eps = 0.5;
  std::vector<Vertex> kappa_v;  // S(v) = {1..ceil((1+eps)kappa_v)}
};
struct ExplicitPalette {
  std::vector<ColorList> lists;
};

using PaletteSpec = std::variant<GlobalPalette, DegPlusOnePalette,
                                 OneEpsDegPalette, DegeneracyPalette,
                                 ExplicitPalette>;

// Number of colors k with S(v) = {1..k} for the implicit variants, or
// |S(v)| for the explicit ones. Never below 1.
std::int64_t palette_size(const Graph& g, const PaletteSpec& spec, Vertex v);

// The i-th smallest color of S(v), 0-indexed.
Color palette_color(const PaletteSpec& spec, Vertex v, std::int64_t i);

// Materialized S(v).
ColorList palette_of(const Graph& g, const PaletteSpec& spec, Vertex v);

// Throws std::invalid_argument when the spec does not fit g.
void check_palette(const Graph& g, const PaletteSpec& spec);

DegeneracyPalette make_degeneracy_palette(const Graph& g, double eps);

struct ListAssignment {
  std::vector<ColorList> lists;  // sorted, duplicate-free
  PaletteSpec spec = ExplicitPalette{};
  std::int64_t ell = 0;

  Vertex size() const { return static_cast<Vertex>(lists.size()); }
  const ColorList& operator[](Vertex v) const { return lists[v]; }
  bool contains(Vertex v, Color c) const;
  Color max_color() const;
};

// Wraps explicit per-vertex lists (sorting and deduplicating each).
ListAssignment make_lists(std::vector<ColorList> lists);

// Uniform size-min(ell, |S(v)|) subset of S(v) per vertex, drawn from the
// substream (seed, v, tag).
ListAssignment sample_lists(const Graph& g, const PaletteSpec& spec,
                            std::int64_t ell, std::uint64_t seed,
                            Phase tag = Phase::kSample);

// Uniform k-subset of {0..n-1}, sorted (Floyd's algorithm).
std::vector<std::int64_t> sample_indices(std::int64_t n, std::int64_t k,
                                         Rng& rng);

// |{u in N(v) : c in L(u)}|.
Vertex c_degree(const Graph& g, const ListAssignment& lists, Vertex v,
                Color c);

// c-degree of every color in L(v), aligned with lists[v].
std::vector<Vertex> c_degrees(const Graph& g, const ListAssignment& lists,
                              Vertex v);

struct TrimResult {
  ListAssignment lists;
  std::vector<std::int64_t> removed;  // bad colors dropped per vertex
  double threshold = 0.0;
};

// Drops every color whose c-degree exceeds (1 + eps/2) * ell / (1 + eps).
TrimResult trim_bad_colors(const Graph& g, const ListAssignment& lists,
                           double eps, std::int64_t ell);

// Lazily sampled family of lists L_i(v) ⊆ P_i = {1..2^i}, i = 1..t, each
// color kept with probability min(1, 10 ell / 2^i). Lists are regenerated
// deterministically from (seed, v, i) on demand, so nothing is held in
// memory; accounting code charges words as if they were stored.
class PotentialListFamily {
 public:
  PotentialListFamily(std::int64_t max_palette, std::int64_t ell,
                      std::uint64_t seed);

  int num_scales() const { return t_; }
  std::int64_t ell() const { return ell_; }
  std::uint64_t seed() const { return seed_; }
  static std::int64_t scale_size(int i) { return std::int64_t{1} << i; }
  double rate(int i) const;

  ColorList list(Vertex v, int i) const;

  // Smallest i with 2^i >= s (at least 1, at most t).
  int scale_for(std::int64_t s) const;

 private:
  std::int64_t ell_;
  std::uint64_t seed_;
  int t_;
};

// t = max(1, ceil(log2 n)).
PotentialListFamily potential_lists(Vertex n, std::int64_t ell,
                                    std::uint64_t seed);

struct ResolvedList {
  ColorList colors;
  bool short_list = false;  // fewer than min(ell, s) colors survived
};

// L_i(v) ∩ {1..s} at the smallest scale with 2^i >= s, cut to a uniform
// ell-subset (substream (seed, v, kResolve)) when larger than ell.
ResolvedList resolve_for_palette(const PotentialListFamily& family, Vertex v,
                                 std::int64_t s, std::int64_t ell);

// Degree form: s = deg_v + 1.
ResolvedList resolve_list(const PotentialListFamily& family, Vertex v,
                          Vertex deg_v, std::int64_t ell);

// Text format: one line per vertex, "v: c1 c2 ...".
void write_lists(std::ostream& out, const ListAssignment& lists);
ListAssignment read_lists(std::istream& in);

}  // namespace pscolor

#endif  // PSCOLOR_PALETTE_H_
