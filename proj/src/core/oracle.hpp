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

// Sequential reference searches used as ground truth.

#ifndef PPSP_CORE_ORACLE_HPP_
#define PPSP_CORE_ORACLE_HPP_

#include <vector>

#include "core/graph.hpp"

namespace ppsp {

// Binary-heap Dijkstra. Entries are +inf for unreachable vertices.
std::vector<Weight> dijkstra(const CsrGraph& graph, VertexId source);

// Order in which dijkstra() settles vertices (nondecreasing distance).
std::vector<VertexId> dijkstra_order(const CsrGraph& graph, VertexId source);

// The vertex at the p-th distance percentile from `source`: reachable
// vertices other than the source are sorted by (distance, id) and the one at
// rank max(0, floor(p/100 * |R|) - 1) is returned, so p = 100 gives the
// farthest vertex. p in (0, 100].
// Throws kIsolatedSource when nothing else is reachable.
VertexId percentile_target(const CsrGraph& graph, VertexId source, double p);

// Same, reusing precomputed distances from `source`.
VertexId percentile_target(const std::vector<Weight>& dist, VertexId source,
                           double p);

}  // namespace ppsp

#endif  // PPSP_CORE_ORACLE_HPP_
