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

#include "pscolor/edge_list_io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pscolor/errors.h"

namespace pscolor {
namespace {

[[noreturn]] void fail(std::int64_t line, const std::string& what) {
  throw MalformedInputError("line " + std::to_string(line) + ": " + what);
}

// Parses exactly two non-negative integers; anything else is malformed.
bool parse_pair(const std::string& s, std::int64_t& a, std::int64_t& b) {
  std::istringstream in(s);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return a >= 0 && b >= 0;
}

}  // namespace

ForwardEdgeReader::ForwardEdgeReader(std::istream& in) : in_(in) {
  std::string s;
  if (!next_content_line(s)) fail(line_ + 1, "missing header \"n m\"");
  std::int64_t n = 0;
  if (!parse_pair(s, n, m_)) fail(line_, "malformed header \"" + s + "\"");
  if (n > 0x7fffffff) fail(line_, "vertex count too large");
  n_ = static_cast<Vertex>(n);
}

bool ForwardEdgeReader::next_content_line(std::string& out) {
  while (std::getline(in_, out)) {
    ++line_;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    if (out.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

std::optional<Edge> ForwardEdgeReader::next() {
  if (read_ == m_) return std::nullopt;
  std::string s;
  if (!next_content_line(s)) {
    fail(line_ + 1, "expected " + std::to_string(m_) + " edges, found " +
                        std::to_string(read_));
  }
  std::int64_t u = 0, v = 0;
  if (!parse_pair(s, u, v)) fail(line_, "malformed edge \"" + s + "\"");
  if (u >= n_ || v >= n_) fail(line_, "vertex out of range");
  if (u == v) fail(line_, "self-loop");
  ++read_;
  return Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

Graph read_edge_list(std::istream& in) {
  ForwardEdgeReader reader(in);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(reader.declared_edges()));
  while (auto e = reader.next()) edges.push_back(*e);
  return Graph::from_edges(reader.num_vertices(), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw MalformedInputError("cannot write " + path);
  write_edge_list(out, g);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError("cannot open " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 14];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace pscolor
