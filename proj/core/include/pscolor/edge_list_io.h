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

#ifndef PSCOLOR_EDGE_LIST_IO_H_
#define PSCOLOR_EDGE_LIST_IO_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pscolor/graph.h"

namespace pscolor {

// Sequential reader for the edge-list format: a header line "n m" followed
// by m lines "u v". Reads strictly forward; errors carry 1-based line
// numbers.
class ForwardEdgeReader {
 public:
  explicit ForwardEdgeReader(std::istream& in);

  Vertex num_vertices() const { return n_; }
  std::int64_t declared_edges() const { return m_; }

  // Next edge, or nullopt once m edges have been read. Throws
  // MalformedInputError on a bad line or a premature end of input.
  std::optional<Edge> next();

  std::int64_t line() const { return line_; }

 private:
  bool next_content_line(std::string& out);

  std::istream& in_;
  Vertex n_ = 0;
  std::int64_t m_ = 0;
  std::int64_t read_ = 0;
  std::int64_t line_ = 0;
};

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// FNV-1a over the file bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

}  // namespace pscolor

#endif  // PSCOLOR_EDGE_LIST_IO_H_
