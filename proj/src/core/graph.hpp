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

#ifndef PPSP_CORE_GRAPH_HPP_
#define PPSP_CORE_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "core/common.hpp"

namespace ppsp {

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;
};

enum class CoordKind { kNone, kEuclidean, kSpherical };

// For kSpherical, x is latitude and y is longitude, both in degrees.
struct Point {
  double x = 0;
  double y = 0;
};

/**
 * Compressed adjacency with per-arc weights.
 *
 * Immutable once built; safe to share across threads. Parallel arcs are kept.
 * `symmetric()` reports whether every arc (u,v,w) has a mirror (v,u,w); it is
 * set by `build_csr(..., true)` and verified when loading binary files.
 */
class CsrGraph {
 public:
  CsrGraph() : offsets_{0} {}
  // Validates the arrays (kFormat / kInvalidWeight) and detects symmetry.
  CsrGraph(std::vector<std::uint64_t> offsets, std::vector<VertexId> targets,
           std::vector<Weight> weights);
  // Same, trusting the caller's symmetry flag.
  CsrGraph(std::vector<std::uint64_t> offsets, std::vector<VertexId> targets,
           std::vector<Weight> weights, bool symmetric);

  std::uint64_t num_vertices() const { return offsets_.size() - 1; }
  std::uint64_t num_arcs() const { return targets_.size(); }
  bool symmetric() const { return symmetric_; }

  std::uint64_t arc_begin(VertexId v) const { return offsets_[v]; }
  std::uint64_t arc_end(VertexId v) const { return offsets_[v + 1]; }
  std::uint64_t degree(VertexId v) const { return arc_end(v) - arc_begin(v); }
  VertexId arc_target(std::uint64_t a) const { return targets_[a]; }
  Weight arc_weight(std::uint64_t a) const { return weights_[a]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + arc_begin(v), degree(v)};
  }
  std::span<const Weight> neighbor_weights(VertexId v) const {
    return {weights_.data() + arc_begin(v), degree(v)};
  }

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const VertexId> targets() const { return targets_; }
  std::span<const Weight> weights() const { return weights_; }
  Weight max_weight() const;

  CoordKind coord_kind() const { return coord_kind_; }
  bool has_coords() const { return coord_kind_ != CoordKind::kNone; }
  std::span<const Point> coords() const { return coords_; }
  // Throws kInvalidArgument unless coords.size() == n; spherical coordinates
  // are range checked (|lat| <= 90, |lon| <= 180).
  void set_coords(CoordKind kind, std::vector<Point> coords);

  // Same topology and coordinates, new per-arc weights (size m).
  CsrGraph with_weights(std::vector<Weight> weights) const;

 private:
  friend CsrGraph build_csr(std::uint64_t, std::span<const Edge>, bool);

  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<Weight> weights_;
  bool symmetric_ = true;
  CoordKind coord_kind_ = CoordKind::kNone;
  std::vector<Point> coords_;
};

// Builds CSR from an edge list. With `symmetrize`, each edge (u,v,w), u != v,
// also contributes its mirror (v,u,w); self loops stay a single arc.
// Errors: kOutOfRange for an endpoint >= n, kInvalidWeight for a negative or
// non-finite weight.
CsrGraph build_csr(std::uint64_t n, std::span<const Edge> edges,
                   bool symmetrize);

// Checks arc-multiset closure under (u,v,w) -> (v,u,w).
bool is_symmetric(const CsrGraph& graph);

// Every arc (u,v,w) becomes (v,u,w). Coordinates are carried over.
CsrGraph transpose(const CsrGraph& graph);

enum class WeightDistribution { kInteger, kReal };

// Draws one weight per undirected edge from the "splitmix64-v1" stream keyed by
// the edge's (min endpoint, max endpoint, occurrence) triple. Mirror arcs get
// identical values. kInteger draws uniformly from the integers in [lo, hi];
// kReal draws lo + (hi - lo) * U[0,1).
CsrGraph generate_uniform_weights(
    const CsrGraph& graph, std::uint64_t seed, Weight lo, Weight hi,
    WeightDistribution dist = WeightDistribution::kInteger);

struct ComponentInfo {
  std::vector<std::uint32_t> label;  // component ids in order of min vertex
  std::uint32_t num_components = 0;
  std::uint32_t largest = 0;
  std::uint64_t largest_size = 0;
};

ComponentInfo largest_component(const CsrGraph& graph);

// Vertices of the given component in increasing id order.
std::vector<VertexId> component_vertices(const ComponentInfo& info,
                                         std::uint32_t component);

}  // namespace ppsp

#endif  // PPSP_CORE_GRAPH_HPP_
