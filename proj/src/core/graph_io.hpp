// Copyright 2026 The ppsp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Graph file formats.
//
// Text edge list: '#' starts a comment; the first non-comment line is "n m",
// followed by m lines "u v w" describing undirected edges. The reader
// symmetrizes.
//
// Binary CSR (little-endian):
//   "OCSR" | version u32 (=1) | n u64 | m u64 |
//   offsets (n+1) x u64 | targets m x u32 | weights m x f64
//
// Coordinates: a header line "euclidean" or "spherical", then n lines
// "id c1 c2" (spherical: latitude longitude in degrees).

#ifndef PPSP_CORE_GRAPH_IO_HPP_
#define PPSP_CORE_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace ppsp {

inline constexpr char kBinaryMagic[4] = {'O', 'C', 'S', 'R'};
inline constexpr std::uint32_t kBinaryVersion = 1;

CsrGraph read_text_graph(std::istream& in);
void write_text_graph(const CsrGraph& graph, std::ostream& out);

CsrGraph read_binary_graph(std::istream& in);
void write_binary_graph(const CsrGraph& graph, std::ostream& out);

struct Coordinates {
  CoordKind kind = CoordKind::kNone;
  std::vector<Point> points;
};

Coordinates read_coordinates(std::istream& in, std::uint64_t n);
void write_coordinates(const CsrGraph& graph, std::ostream& out);

// Path helpers. load_graph sniffs the magic bytes to pick the format.
CsrGraph load_graph(const std::string& path);
void save_text_graph(const CsrGraph& graph, const std::string& path);
void save_binary_graph(const CsrGraph& graph, const std::string& path);
void attach_coordinates(CsrGraph& graph, const std::string& path);

using QueryPair = std::pair<VertexId, VertexId>;

// One "s t" pair per line; '#' comments and blank lines are skipped.
std::vector<QueryPair> read_query_pairs(std::istream& in);
std::vector<QueryPair> load_query_pairs(const std::string& path);
void write_query_pairs(const std::vector<QueryPair>& pairs, std::ostream& out);

}  // namespace ppsp

#endif  // PPSP_CORE_GRAPH_IO_HPP_
