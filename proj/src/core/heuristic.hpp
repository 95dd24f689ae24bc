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

#ifndef PPSP_CORE_HEURISTIC_HPP_
#define PPSP_CORE_HEURISTIC_HPP_

#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "core/graph.hpp"

namespace ppsp {

// Mean Earth radius in kilometres; the default unit for spherical heuristics.
inline constexpr Weight kEarthRadiusKm = 6371.0088;

// Great-circle distance between two (latitude, longitude) points in degrees,
// scaled by `radius`. Haversine form.
Weight haversine_distance(Point a, Point b, Weight radius);

Weight euclidean_distance(Point a, Point b);

/**
 * Geometric lower bound on the distance from a vertex to a fixed anchor.
 * kZero is the trivial (always consistent) estimate.
 */
class Heuristic {
 public:
  enum class Kind { kZero, kEuclidean, kSpherical };

  static Heuristic zero() { return Heuristic(); }
  // Both throw kMissingCoordinates unless the graph carries the matching
  // coordinate kind, and kOutOfRange for a bad anchor.
  static Heuristic euclidean(const CsrGraph& graph, VertexId anchor);
  static Heuristic spherical(const CsrGraph& graph, VertexId anchor,
                             Weight radius = kEarthRadiusKm);
  // Chooses by the graph's coordinate kind.
  static Heuristic for_graph(const CsrGraph& graph, VertexId anchor,
                             Weight radius = kEarthRadiusKm);

  Weight operator()(VertexId v) const {
    switch (kind_) {
      case Kind::kZero:
        return 0;
      case Kind::kEuclidean:
        return euclidean_distance(coords_[v], anchor_);
      case Kind::kSpherical:
        return haversine_distance(coords_[v], anchor_, radius_);
    }
    return 0;
  }

  Kind kind() const { return kind_; }

 private:
  Heuristic() = default;

  Kind kind_ = Kind::kZero;
  std::span<const Point> coords_;
  Point anchor_;
  Weight radius_ = 0;
};

// The averaged pair for bidirectional A*:
//   forward(v)  = (h_t(v) - h_s(v)) / 2
//   backward(v) = (h_s(v) - h_t(v)) / 2 = -forward(v)
// where h_s estimates the distance to the source and h_t to the target.
struct AveragedHeuristics {
  Heuristic to_source;
  Heuristic to_target;

  Weight forward(VertexId v) const { return (to_target(v) - to_source(v)) / 2; }
  Weight backward(VertexId v) const { return -forward(v); }
};

inline AveragedHeuristics make_bidirectional_heuristics(Heuristic h_s,
                                                        Heuristic h_t) {
  return {h_s, h_t};
}

// Smallest reduced weight w(u,v) - h(u) + h(v) over all arcs; a heuristic is
// consistent when this is >= 0 (up to rounding). +inf for an arcless graph.
template <typename H>
Weight min_reduced_weight(const CsrGraph& graph, const H& h) {
  Weight best = kInf;
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    const Weight hu = h(u);
    for (std::uint64_t a = graph.arc_begin(u); a < graph.arc_end(u); ++a) {
      const Weight reduced = graph.arc_weight(a) - hu + h(graph.arc_target(a));
      if (reduced < best) best = reduced;
    }
  }
  return best;
}

template <typename H>
bool is_consistent(const CsrGraph& graph, const H& h,
                   Weight tolerance = 1e-9) {
  return min_reduced_weight(graph, h) >= -tolerance;
}

/**
 * Per-query cache of heuristic values, filled on first use.
 *
 * Entries hold the bit pattern of a Weight, or kUnset (a NaN payload no
 * heuristic produces). Concurrent first accesses may compute the same value
 * twice; both writes store identical bits.
 */
class MemoTable {
 public:
  static constexpr std::uint64_t kUnset = 0x7ff4dead0000beefULL;

  explicit MemoTable(std::uint64_t n) : bits_(n, kUnset) {}

  template <typename F>
  Weight get(VertexId v, F&& compute) {
    std::atomic_ref<std::uint64_t> slot(bits_[v]);
    std::uint64_t b = slot.load(std::memory_order_relaxed);
    if (b != kUnset) return std::bit_cast<Weight>(b);
    Weight value = compute(v);
    computations_.fetch_add(1, std::memory_order_relaxed);
    slot.store(std::bit_cast<std::uint64_t>(value), std::memory_order_relaxed);
    return value;
  }

  bool is_set(VertexId v) const { return bits_[v] != kUnset; }
  std::uint64_t computations() const {
    return computations_.load(std::memory_order_relaxed);
  }

 private:
  std::vector<std::uint64_t> bits_;
  std::atomic<std::uint64_t> computations_{0};
};

}  // namespace ppsp

#endif  // PPSP_CORE_HEURISTIC_HPP_
