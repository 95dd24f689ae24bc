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

#include "core/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace ppsp {
namespace {

void check_source(const CsrGraph& graph, VertexId source) {
  if (source >= graph.num_vertices()) {
    throw Error(Errc::kOutOfRange,
                "source " + std::to_string(source) + " out of range");
  }
}

std::vector<Weight> run(const CsrGraph& graph, VertexId source,
                        std::vector<VertexId>* order) {
  check_source(graph, source);
  using Entry = std::pair<Weight, VertexId>;
  std::vector<Weight> dist(graph.num_vertices(), kInf);
  std::vector<bool> done(graph.num_vertices(), false);
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    if (order != nullptr) order->push_back(u);
    for (std::uint64_t a = graph.arc_begin(u); a < graph.arc_end(u); ++a) {
      const VertexId v = graph.arc_target(a);
      const Weight nd = d + graph.arc_weight(a);
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Weight> dijkstra(const CsrGraph& graph, VertexId source) {
  return run(graph, source, nullptr);
}

std::vector<VertexId> dijkstra_order(const CsrGraph& graph, VertexId source) {
  std::vector<VertexId> order;
  run(graph, source, &order);
  return order;
}

VertexId percentile_target(const std::vector<Weight>& dist, VertexId source,
                           double p) {
  if (!(p > 0) || p > 100) {
    throw Error(Errc::kInvalidArgument, "percentile must be in (0, 100]");
  }
  if (source >= dist.size()) {
    throw Error(Errc::kOutOfRange,
                "source " + std::to_string(source) + " out of range");
  }
  std::vector<VertexId> reach;
  for (VertexId v = 0; v < dist.size(); ++v) {
    if (v != source && dist[v] < kInf) reach.push_back(v);
  }
  if (reach.empty()) {
    throw Error(Errc::kIsolatedSource,
                "source " + std::to_string(source) + " reaches no vertex");
  }
  std::sort(reach.begin(), reach.end(), [&](VertexId a, VertexId b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });
  auto rank = static_cast<std::int64_t>(
                  std::floor(p * static_cast<double>(reach.size()) / 100.0)) -
              1;
  rank = std::clamp<std::int64_t>(rank, 0,
                                  static_cast<std::int64_t>(reach.size()) - 1);
  return reach[static_cast<std::size_t>(rank)];
}

VertexId percentile_target(const CsrGraph& graph, VertexId source, double p) {
  return percentile_target(dijkstra(graph, source), source, p);
}

}  // namespace ppsp
