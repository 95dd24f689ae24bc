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

#include "core/graph_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ppsp {
namespace {

static_assert(std::endian::native == std::endian::little,
              "binary CSR I/O assumes a little-endian host");

// Returns false at end of input. Strips '#' comments and skips blank lines.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void format_error(std::size_t lineno, const std::string& what) {
  throw Error(Errc::kFormat, "line " + std::to_string(lineno) + ": " + what);
}

template <typename T>
void write_pod(std::ostream& out, const T* data, std::size_t count) {
  out.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(sizeof(T) * count));
}

template <typename T>
void read_pod(std::istream& in, T* data, std::size_t count) {
  in.read(reinterpret_cast<char*>(data),
          static_cast<std::streamsize>(sizeof(T) * count));
  if (!in) throw Error(Errc::kFormat, "truncated binary CSR file");
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = {}) {
  std::ifstream in(path, std::ios::in | mode);
  if (!in) throw Error(Errc::kIo, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = {}) {
  std::ofstream out(path, std::ios::out | std::ios::trunc | mode);
  if (!out) throw Error(Errc::kIo, "cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

CsrGraph read_text_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) {
    throw Error(Errc::kFormat, "empty edge list: missing 'n m' header");
  }
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m)) format_error(lineno, "expected 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_data_line(in, line, lineno)) {
      throw Error(Errc::kFormat, "expected " + std::to_string(m) +
                                     " edges, found " + std::to_string(i));
    }
    std::istringstream fields(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    Weight w = 0;
    if (!(fields >> u >> v >> w)) format_error(lineno, "expected 'u v w'");
    if (u >= n || v >= n) {
      throw Error(Errc::kOutOfRange, "line " + std::to_string(lineno) +
                                         ": endpoint out of range");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }
  if (next_data_line(in, line, lineno)) {
    format_error(lineno, "trailing data after " + std::to_string(m) + " edges");
  }
  return build_csr(n, edges, /*symmetrize=*/true);
}

void write_text_graph(const CsrGraph& graph, std::ostream& out) {
  if (!graph.symmetric()) {
    throw Error(Errc::kInvalidArgument,
                "text edge lists describe undirected graphs; graph is not "
                "symmetric");
  }
  std::uint64_t m = 0;
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    for (VertexId v : graph.neighbors(u)) m += (u <= v);
  }
  out << graph.num_vertices() << ' ' << m << '\n';
  out << std::setprecision(17);
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    for (std::uint64_t a = graph.arc_begin(u); a < graph.arc_end(u); ++a) {
      VertexId v = graph.arc_target(a);
      if (u <= v) out << u << ' ' << v << ' ' << graph.arc_weight(a) << '\n';
    }
  }
}

CsrGraph read_binary_graph(std::istream& in) {
  char magic[4];
  read_pod(in, magic, 4);
  if (std::memcmp(magic, kBinaryMagic, 4) != 0) {
    throw Error(Errc::kFormat, "bad magic: not an OCSR file");
  }
  std::uint32_t version = 0;
  read_pod(in, &version, 1);
  if (version != kBinaryVersion) {
    throw Error(Errc::kFormat,
                "unsupported OCSR version " + std::to_string(version));
  }
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  read_pod(in, &n, 1);
  read_pod(in, &m, 1);
  if (n == 0 || n > std::numeric_limits<VertexId>::max()) {
    throw Error(Errc::kFormat, "invalid vertex count in OCSR header");
  }
  std::vector<std::uint64_t> offsets(n + 1);
  std::vector<VertexId> targets(m);
  std::vector<Weight> weights(m);
  read_pod(in, offsets.data(), offsets.size());
  read_pod(in, targets.data(), targets.size());
  read_pod(in, weights.data(), weights.size());
  return CsrGraph(std::move(offsets), std::move(targets), std::move(weights));
}

void write_binary_graph(const CsrGraph& graph, std::ostream& out) {
  const std::uint64_t n = graph.num_vertices();
  const std::uint64_t m = graph.num_arcs();
  write_pod(out, kBinaryMagic, 4);
  write_pod(out, &kBinaryVersion, 1);
  write_pod(out, &n, 1);
  write_pod(out, &m, 1);
  write_pod(out, graph.offsets().data(), graph.offsets().size());
  write_pod(out, graph.targets().data(), graph.targets().size());
  write_pod(out, graph.weights().data(), graph.weights().size());
}

Coordinates read_coordinates(std::istream& in, std::uint64_t n) {
  std::string line;
  std::size_t lineno = 0;
  Coordinates out;
  if (!next_data_line(in, line, lineno)) {
    throw Error(Errc::kFormat, "empty coordinates file");
  }
  {
    std::istringstream header(line);
    std::string kind;
    header >> kind;
    if (kind == "euclidean") {
      out.kind = CoordKind::kEuclidean;
    } else if (kind == "spherical") {
      out.kind = CoordKind::kSpherical;
    } else {
      format_error(lineno, "expected 'euclidean' or 'spherical', got '" +
                               kind + "'");
    }
  }
  out.points.resize(n);
  std::vector<bool> seen(n, false);
  std::uint64_t count = 0;
  while (next_data_line(in, line, lineno)) {
    std::istringstream fields(line);
    std::uint64_t id = 0;
    Point p;
    if (!(fields >> id >> p.x >> p.y)) format_error(lineno, "expected 'id c1 c2'");
    if (id >= n) format_error(lineno, "vertex id out of range");
    if (seen[id]) format_error(lineno, "duplicate vertex id");
    seen[id] = true;
    out.points[id] = p;
    ++count;
  }
  if (count != n) {
    throw Error(Errc::kFormat, "coordinates file lists " +
                                   std::to_string(count) + " of " +
                                   std::to_string(n) + " vertices");
  }
  return out;
}

void write_coordinates(const CsrGraph& graph, std::ostream& out) {
  if (!graph.has_coords()) {
    throw Error(Errc::kMissingCoordinates, "graph has no coordinates");
  }
  out << (graph.coord_kind() == CoordKind::kSpherical ? "spherical"
                                                        : "euclidean")
      << '\n'
      << std::setprecision(17);
  auto coords = graph.coords();
  for (VertexId v = 0; v < coords.size(); ++v) {
    out << v << ' ' << coords[v].x << ' ' << coords[v].y << '\n';
  }
}

CsrGraph load_graph(const std::string& path) {
  std::ifstream in = open_in(path, std::ios::binary);
  char magic[4] = {};
  in.read(magic, 4);
  const bool binary =
      in.gcount() == 4 && std::memcmp(magic, kBinaryMagic, 4) == 0;
  in.clear();
  in.seekg(0);
  return binary ? read_binary_graph(in) : read_text_graph(in);
}

void save_text_graph(const CsrGraph& graph, const std::string& path) {
  std::ofstream out = open_out(path);
  write_text_graph(graph, out);
  if (!out) throw Error(Errc::kIo, "write failed: " + path);
}

void save_binary_graph(const CsrGraph& graph, const std::string& path) {
  std::ofstream out = open_out(path, std::ios::binary);
  write_binary_graph(graph, out);
  if (!out) throw Error(Errc::kIo, "write failed: " + path);
}

void attach_coordinates(CsrGraph& graph, const std::string& path) {
  std::ifstream in = open_in(path);
  Coordinates c = read_coordinates(in, graph.num_vertices());
  graph.set_coords(c.kind, std::move(c.points));
}

std::vector<QueryPair> read_query_pairs(std::istream& in) {
  std::vector<QueryPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (next_data_line(in, line, lineno)) {
    std::istringstream fields(line);
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    if (!(fields >> s >> t)) format_error(lineno, "expected 's t'");
    if (s > std::numeric_limits<VertexId>::max() ||
        t > std::numeric_limits<VertexId>::max()) {
      throw Error(Errc::kOutOfRange, "line " + std::to_string(lineno) +
                                         ": vertex id out of range");
    }
    pairs.emplace_back(static_cast<VertexId>(s), static_cast<VertexId>(t));
  }
  return pairs;
}

std::vector<QueryPair> load_query_pairs(const std::string& path) {
  std::ifstream in = open_in(path);
  return read_query_pairs(in);
}

void write_query_pairs(const std::vector<QueryPair>& pairs,
                       std::ostream& out) {
  for (const auto& [s, t] : pairs) out << s << ' ' << t << '\n';
}

}  // namespace ppsp
