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

#include "core/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ppsp {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_anchor(const CsrGraph& graph, VertexId anchor) {
  if (anchor >= graph.num_vertices()) {
    throw Error(Errc::kOutOfRange,
                "heuristic anchor " + std::to_string(anchor) + " out of range");
  }
}

}  // namespace

Weight haversine_distance(Point a, Point b, Weight radius) {
  const double lat1 = a.x * kDegToRad;
  const double lat2 = b.x * kDegToRad;
  const double dlat = lat2 - lat1;
  const double dlon = (b.y - a.y) * kDegToRad;
  const double s1 = std::sin(dlat / 2);
  const double s2 = std::sin(dlon / 2);
  double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
  h = std::clamp(h, 0.0, 1.0);
  return 2 * radius * std::asin(std::sqrt(h));
}

Weight euclidean_distance(Point a, Point b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Heuristic Heuristic::euclidean(const CsrGraph& graph, VertexId anchor) {
  if (graph.coord_kind() != CoordKind::kEuclidean) {
    throw Error(Errc::kMissingCoordinates,
                "euclidean heuristic needs euclidean coordinates");
  }
  check_anchor(graph, anchor);
  Heuristic h;
  h.kind_ = Kind::kEuclidean;
  h.coords_ = graph.coords();
  h.anchor_ = h.coords_[anchor];
  return h;
}

Heuristic Heuristic::spherical(const CsrGraph& graph, VertexId anchor,
                               Weight radius) {
  if (graph.coord_kind() != CoordKind::kSpherical) {
    throw Error(Errc::kMissingCoordinates,
                "spherical heuristic needs latitude/longitude coordinates");
  }
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw Error(Errc::kInvalidArgument, "sphere radius must be > 0");
  }
  check_anchor(graph, anchor);
  Heuristic h;
  h.kind_ = Kind::kSpherical;
  h.coords_ = graph.coords();
  h.anchor_ = h.coords_[anchor];
  h.radius_ = radius;
  return h;
}

Heuristic Heuristic::for_graph(const CsrGraph& graph, VertexId anchor,
                               Weight radius) {
  switch (graph.coord_kind()) {
    case CoordKind::kEuclidean:
      return euclidean(graph, anchor);
    case CoordKind::kSpherical:
      return spherical(graph, anchor, radius);
    case CoordKind::kNone:
      break;
  }
  throw Error(Errc::kMissingCoordinates,
              "heuristic search requested on a graph without coordinates");
}

}  // namespace ppsp
