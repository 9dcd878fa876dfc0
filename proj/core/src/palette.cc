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

#include "pscolor/palette.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pscolor/errors.h"

namespace pscolor {
namespace {

// ceil that ignores floating-point fuzz just above an integer.
std::int64_t fuzzy_ceil(double x) {
  return static_cast<std::int64_t>(std::ceil(x - 1e-9));
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::int64_t palette_size(const Graph& g, const PaletteSpec& spec, Vertex v) {
  return std::visit(
      Overloaded{
          [](const GlobalPalette& p) -> std::int64_t { return p.num_colors; },
          [&](const DegPlusOnePalette&) -> std::int64_t {
            return g.degree(v) + 1;
          },
          [&](const OneEpsDegPalette& p) -> std::int64_t {
            if (!p.explicit_lists.empty()) {
              return static_cast<std::int64_t>(p.explicit_lists[v].size());
            }
            return std::max<std::int64_t>(1, fuzzy_ceil((1.0 + p.eps) * g.degree(v)));
          },
          [&](const DegeneracyPalette& p) -> std::int64_t {
            return std::max<std::int64_t>(1, fuzzy_ceil((1.0 + p.eps) * p.kappa_v[v]));
          },
          [&](const ExplicitPalette& p) -> std::int64_t {
            return static_cast<std::int64_t>(p.lists[v].size());
          },
      },
      spec);
}

Color palette_color(const PaletteSpec& spec, Vertex v, std::int64_t i) {
  if (const auto* p = std::get_if<OneEpsDegPalette>(&spec)) {
    if (!p->explicit_lists.empty()) return p->explicit_lists[v][i];
  }
  if (const auto* p = std::get_if<ExplicitPalette>(&spec)) return p->lists[v][i];
  return static_cast<Color>(i + 1);
}

ColorList palette_of(const Graph& g, const PaletteSpec& spec, Vertex v) {
  const std::int64_t s = palette_size(g, spec, v);
  ColorList out;
  out.reserve(static_cast<std::size_t>(s));
  for (std::int64_t i = 0; i < s; ++i) out.push_back(palette_color(spec, v, i));
  std::sort(out.begin(), out.end());
  return out;
}

void check_palette(const Graph& g, const PaletteSpec& spec) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  auto check_lists = [&](const std::vector<ColorList>& lists) {
    if (lists.size() != n) throw std::invalid_argument("palette: list count != n");
    for (const auto& l : lists) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] < 1) throw std::invalid_argument("palette: colors must be >= 1");
        if (i > 0 && l[i - 1] >= l[i]) {
          throw std::invalid_argument("palette: lists must be sorted and distinct");
        }
      }
    }
  };
  std::visit(
      Overloaded{
          [](const GlobalPalette& p) {
            if (p.num_colors < 1) throw std::invalid_argument("palette: C < 1");
          },
          [](const DegPlusOnePalette&) {},
          [&](const OneEpsDegPalette& p) {
            if (!(p.eps > 0)) throw std::invalid_argument("palette: eps <= 0");
            if (p.explicit_lists.empty()) return;
            check_lists(p.explicit_lists);
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
              const auto need = fuzzy_ceil((1.0 + p.eps) * g.degree(v));
              if (static_cast<std::int64_t>(p.explicit_lists[v].size()) < need) {
                throw std::invalid_argument("palette: |S(" + std::to_string(v) +
                                            ")| below (1+eps)deg");
              }
            }
          },
          [&](const DegeneracyPalette& p) {
            if (!(p.eps > 0)) throw std::invalid_argument("palette: eps <= 0");
            if (p.kappa_v.size() != n) throw std::invalid_argument("palette: kappa size");
          },
          [&](const ExplicitPalette& p) { check_lists(p.lists); },
      },
      spec);
}

DegeneracyPalette make_degeneracy_palette(const Graph& g, double eps) {
  return DegeneracyPalette{eps, degeneracy_order(g).kappa_v};
}

bool ListAssignment::contains(Vertex v, Color c) const {
  return std::binary_search(lists[v].begin(), lists[v].end(), c);
}

Color ListAssignment::max_color() const {
  Color m = 0;
  for (const auto& l : lists) {
    if (!l.empty()) m = std::max(m, l.back());
  }
  return m;
}

ListAssignment make_lists(std::vector<ColorList> lists) {
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  ListAssignment out;
  std::int64_t ell = 0;
  for (const auto& l : lists) ell = std::max<std::int64_t>(ell, static_cast<std::int64_t>(l.size()));
  out.spec = ExplicitPalette{lists};
  out.lists = std::move(lists);
  out.ell = ell;
  return out;
}

std::vector<std::int64_t> sample_indices(std::int64_t n, std::int64_t k,
                                         Rng& rng) {
  std::vector<std::int64_t> out;
  if (k >= n) {
    out.resize(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    for (std::int64_t i = 0; i < n; ++i) out[i] = i;
    return out;
  }
  std::set<std::int64_t> chosen;
  for (std::int64_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(j + 1)));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  out.assign(chosen.begin(), chosen.end());
  return out;
}

ListAssignment sample_lists(const Graph& g, const PaletteSpec& spec,
                            std::int64_t ell, std::uint64_t seed, Phase tag) {
  check_palette(g, spec);
  ListAssignment out;
  out.spec = spec;
  out.ell = ell;
  out.lists.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::int64_t s = palette_size(g, spec, v);
    Rng rng(seed, static_cast<std::uint64_t>(v), tag);
    auto& l = out.lists[v];
    for (std::int64_t idx : sample_indices(s, std::min(ell, s), rng)) {
      l.push_back(palette_color(spec, v, idx));
    }
    std::sort(l.begin(), l.end());
  }
  return out;
}

Vertex c_degree(const Graph& g, const ListAssignment& lists, Vertex v,
                Color c) {
  Vertex count = 0;
  for (Vertex u : g.neighbors(v)) count += lists.contains(u, c) ? 1 : 0;
  return count;
}

std::vector<Vertex> c_degrees(const Graph& g, const ListAssignment& lists,
                              Vertex v) {
  const auto& mine = lists[v];
  std::vector<Vertex> counts(mine.size(), 0);
  for (Vertex u : g.neighbors(v)) {
    const auto& theirs = lists[u];
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
  return counts;
}

TrimResult trim_bad_colors(const Graph& g, const ListAssignment& lists,
                           double eps, std::int64_t ell) {
  TrimResult r;
  r.threshold = (1.0 + eps / 2.0) * static_cast<double>(ell) / (1.0 + eps);
  r.lists.spec = lists.spec;
  r.lists.ell = lists.ell;
  r.lists.lists.resize(lists.lists.size());
  r.removed.assign(lists.lists.size(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto degs = c_degrees(g, lists, v);
    for (std::size_t i = 0; i < degs.size(); ++i) {
      if (static_cast<double>(degs[i]) > r.threshold) {
        ++r.removed[v];
      } else {
        r.lists.lists[v].push_back(lists[v][i]);
      }
    }
  }
  return r;
}

PotentialListFamily::PotentialListFamily(std::int64_t max_palette,
                                         std::int64_t ell, std::uint64_t seed)
    : ell_(ell), seed_(seed), t_(1) {
  if (ell < 1) throw std::invalid_argument("potential_lists: ell must be >= 1");
  while ((std::int64_t{1} << t_) < max_palette) ++t_;
}

double PotentialListFamily::rate(int i) const {
  return std::min(1.0, 10.0 * static_cast<double>(ell_) /
                           static_cast<double>(scale_size(i)));
}

ColorList PotentialListFamily::list(Vertex v, int i) const {
  const std::int64_t size = scale_size(i);
  const double p = rate(i);
  ColorList out;
  if (p >= 1.0) {
    out.resize(static_cast<std::size_t>(size));
    for (std::int64_t c = 0; c < size; ++c) out[c] = static_cast<Color>(c + 1);
    return out;
  }
  Rng rng(seed_, static_cast<std::uint64_t>(v),
          static_cast<std::uint64_t>(Phase::kPotential) + (static_cast<std::uint64_t>(i) << 8));
  const double log_q = std::log1p(-p);
  std::int64_t c = 0;
  while (true) {
    const double r = 1.0 - rng.uniform01();
    c += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
    if (c > size) break;
    out.push_back(static_cast<Color>(c));
  }
  return out;
}

int PotentialListFamily::scale_for(std::int64_t s) const {
  int i = 1;
  while (i < t_ && scale_size(i) < s) ++i;
  return i;
}

PotentialListFamily potential_lists(Vertex n, std::int64_t ell,
                                    std::uint64_t seed) {
  return PotentialListFamily(n, ell, seed);
}

ResolvedList resolve_for_palette(const PotentialListFamily& family, Vertex v,
                                 std::int64_t s, std::int64_t ell) {
  ResolvedList out;
  const int i = family.scale_for(s);
  for (Color c : family.list(v, i)) {
    if (c <= s) out.colors.push_back(c);
  }
  const auto have = static_cast<std::int64_t>(out.colors.size());
  if (have > ell) {
    Rng rng(family.seed(), static_cast<std::uint64_t>(v),
            static_cast<std::uint64_t>(Phase::kResolve) +
                (static_cast<std::uint64_t>(s) << 8));
    ColorList cut;
    for (std::int64_t idx : sample_indices(have, ell, rng)) {
      cut.push_back(out.colors[idx]);
    }
    out.colors = std::move(cut);
  }
  out.short_list = static_cast<std::int64_t>(out.colors.size()) < std::min(ell, s);
  return out;
}

ResolvedList resolve_list(const PotentialListFamily& family, Vertex v,
                          Vertex deg_v, std::int64_t ell) {
  return resolve_for_palette(family, v, static_cast<std::int64_t>(deg_v) + 1, ell);
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  for (Vertex v = 0; v < lists.size(); ++v) {
    out << v << ':';
    for (Color c : lists[v]) out << ' ' << c;
    out << '\n';
  }
}

ListAssignment read_lists(std::istream& in) {
  std::vector<ColorList> lists;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    auto bad = [&](const std::string& what) {
      throw MalformedInputError("line " + std::to_string(line_no) + ": " + what);
    };
    if (colon == std::string::npos) bad("missing ':'");
    std::istringstream head(line.substr(0, colon));
    long long v = -1;
    std::string extra;
    if (!(head >> v) || v < 0 || (head >> extra)) bad("bad vertex id");
    if (static_cast<std::size_t>(v) >= lists.size()) lists.resize(static_cast<std::size_t>(v) + 1);
    std::istringstream rest(line.substr(colon + 1));
    long long c = 0;
    ColorList l;
    while (rest >> c) {
      if (c < 1) bad("colors must be positive");
      l.push_back(static_cast<Color>(c));
    }
    if (!rest.eof()) bad("bad color token");
    lists[static_cast<std::size_t>(v)] = std::move(l);
  }
  return make_lists(std::move(lists));
}

}  // namespace pscolor
