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

#include "core/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "core/random.hpp"

namespace ppsp {

CsrGraph::CsrGraph(std::vector<std::uint64_t> offsets,
                   std::vector<VertexId> targets, std::vector<Weight> weights,
                   bool symmetric)
    : offsets_(std::move(offsets)),
      targets_(std::move(targets)),
      weights_(std::move(weights)),
      symmetric_(symmetric) {
  if (offsets_.empty() || offsets_.front() != 0 ||
      offsets_.back() != targets_.size() ||
      weights_.size() != targets_.size()) {
    throw Error(Errc::kFormat, "inconsistent CSR arrays");
  }
  if (!std::is_sorted(offsets_.begin(), offsets_.end())) {
    throw Error(Errc::kFormat, "CSR offsets are not nondecreasing");
  }
  const std::uint64_t n = num_vertices();
  for (VertexId t : targets_) {
    if (t >= n) throw Error(Errc::kFormat, "arc target out of range");
  }
  for (Weight w : weights_) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw Error(Errc::kInvalidWeight, "arc weight must be finite and >= 0");
    }
  }
}

CsrGraph::CsrGraph(std::vector<std::uint64_t> offsets,
                   std::vector<VertexId> targets, std::vector<Weight> weights)
    : CsrGraph(std::move(offsets), std::move(targets), std::move(weights),
               false) {
  symmetric_ = is_symmetric(*this);
}

Weight CsrGraph::max_weight() const {
  Weight best = 0;
  for (Weight w : weights_) best = std::max(best, w);
  return best;
}

void CsrGraph::set_coords(CoordKind kind, std::vector<Point> coords) {
  if (kind == CoordKind::kNone) {
    coord_kind_ = kind;
    coords_.clear();
    return;
  }
  if (coords.size() != num_vertices()) {
    throw Error(Errc::kInvalidArgument,
                "coordinate count " + std::to_string(coords.size()) +
                    " does not match vertex count " +
                    std::to_string(num_vertices()));
  }
  for (const Point& p : coords) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(Errc::kInvalidArgument, "non-finite coordinate");
    }
    if (kind == CoordKind::kSpherical &&
        (std::abs(p.x) > 90.0 || std::abs(p.y) > 180.0)) {
      throw Error(Errc::kInvalidArgument,
                  "latitude/longitude out of range");
    }
  }
  coord_kind_ = kind;
  coords_ = std::move(coords);
}

CsrGraph CsrGraph::with_weights(std::vector<Weight> weights) const {
  if (weights.size() != num_arcs()) {
    throw Error(Errc::kInvalidArgument, "weight array size mismatch");
  }
  CsrGraph out(offsets_, targets_, std::move(weights), symmetric_);
  out.coord_kind_ = coord_kind_;
  out.coords_ = coords_;
  return out;
}

CsrGraph build_csr(std::uint64_t n, std::span<const Edge> edges,
                   bool symmetrize) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "graph needs n >= 1");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw Error(Errc::kInvalidArgument, "vertex count exceeds 32-bit ids");
  }
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(Errc::kOutOfRange,
                  "edge endpoint out of range: (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ") with n=" + std::to_string(n));
    }
    if (!(e.w >= 0) || !std::isfinite(e.w)) {
      throw Error(Errc::kInvalidWeight,
                  "edge weight must be finite and >= 0, got " +
                      std::to_string(e.w));
    }
    ++offsets[e.u + 1];
    if (symmetrize && e.u != e.v) ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  const std::uint64_t m = offsets[n];
  std::vector<VertexId> targets(m);
  std::vector<Weight> weights(m);
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    std::uint64_t a = cursor[e.u]++;
    targets[a] = e.v;
    weights[a] = e.w;
    if (symmetrize && e.u != e.v) {
      std::uint64_t b = cursor[e.v]++;
      targets[b] = e.u;
      weights[b] = e.w;
    }
  }
  CsrGraph g(std::move(offsets), std::move(targets), std::move(weights), true);
  // Directed input may still be symmetric; record the truth.
  if (!symmetrize) g.symmetric_ = is_symmetric(g);
  return g;
}

bool is_symmetric(const CsrGraph& graph) {
  using Arc = std::tuple<VertexId, VertexId, Weight>;
  std::vector<Arc> forward;
  std::vector<Arc> mirrored;
  forward.reserve(graph.num_arcs());
  mirrored.reserve(graph.num_arcs());
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    for (std::uint64_t a = graph.arc_begin(u); a < graph.arc_end(u); ++a) {
      VertexId v = graph.arc_target(a);
      forward.emplace_back(u, v, graph.arc_weight(a));
      mirrored.emplace_back(v, u, graph.arc_weight(a));
    }
  }
  std::sort(forward.begin(), forward.end());
  std::sort(mirrored.begin(), mirrored.end());
  return forward == mirrored;
}

CsrGraph transpose(const CsrGraph& graph) {
  const std::uint64_t n = graph.num_vertices();
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (VertexId t : graph.targets()) ++offsets[t + 1];
  for (std::uint64_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<VertexId> targets(graph.num_arcs());
  std::vector<Weight> weights(graph.num_arcs());
  std::vector<std::uint64_t> next(offsets.begin(), offsets.end() - 1);
  for (VertexId u = 0; u < n; ++u) {
    for (std::uint64_t a = graph.arc_begin(u); a < graph.arc_end(u); ++a) {
      const std::uint64_t slot = next[graph.arc_target(a)]++;
      targets[slot] = u;
      weights[slot] = graph.arc_weight(a);
    }
  }
  CsrGraph out(std::move(offsets), std::move(targets), std::move(weights),
               graph.symmetric());
  if (graph.has_coords()) {
    out.set_coords(graph.coord_kind(), std::vector<Point>(graph.coords().begin(),
                                                          graph.coords().end()));
  }
  return out;
}

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

CsrGraph generate_uniform_weights(const CsrGraph& graph, std::uint64_t seed,
                                  Weight lo, Weight hi,
                                  WeightDistribution dist) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0) {
    throw Error(Errc::kInvalidArgument, "weight range needs 0 <= lo");
  }
  if (lo > hi) throw Error(Errc::kInvalidArgument, "weight range has lo > hi");
  if (!graph.symmetric()) {
    throw Error(Errc::kInvalidArgument,
                "weight synthesis requires a symmetrized graph");
  }
  Weight ilo = std::ceil(lo);
  Weight ihi = std::floor(hi);
  if (dist == WeightDistribution::kInteger && ilo > ihi) {
    throw Error(Errc::kInvalidArgument, "no integer inside [lo, hi]");
  }

  // An undirected edge {a,b}, a <= b, that appears k times is identified by
  // (a, b, occurrence). The u->v arcs of u (u < v) and the v->u arcs of v are
  // paired by occurrence index in CSR order.
  auto draw = [&](VertexId a, VertexId b, std::uint32_t occurrence) {
    std::uint64_t key = splitmix64_mix(pair_key(a, b)) ^
                        (static_cast<std::uint64_t>(occurrence) << 1);
    SplitMix64 rng(seed, key);
    if (dist == WeightDistribution::kInteger) {
      auto span = static_cast<std::uint64_t>(ihi - ilo) + 1;
      return ilo + static_cast<Weight>(rng.next_below(span));
    }
    return lo + (hi - lo) * rng.next_unit();
  };

  std::vector<Weight> weights(graph.num_arcs());
  std::unordered_map<std::uint64_t, std::uint32_t> seen_low;
  std::unordered_map<std::uint64_t, std::uint32_t> seen_high;
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    for (std::uint64_t a = graph.arc_begin(u); a < graph.arc_end(u); ++a) {
      VertexId v = graph.arc_target(a);
      VertexId lo_end = std::min(u, v);
      VertexId hi_end = std::max(u, v);
      auto& seen = (u <= v) ? seen_low : seen_high;
      std::uint32_t occurrence = seen[pair_key(lo_end, hi_end)]++;
      weights[a] = draw(lo_end, hi_end, occurrence);
    }
  }
  return graph.with_weights(std::move(weights));
}

ComponentInfo largest_component(const CsrGraph& graph) {
  const std::uint64_t n = graph.num_vertices();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  ComponentInfo info;
  info.label.assign(n, kUnset);
  std::vector<std::uint64_t> sizes;
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (info.label[root] != kUnset) continue;
    const std::uint32_t id = info.num_components++;
    std::uint64_t size = 0;
    info.label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId v : graph.neighbors(u)) {
        if (info.label[v] == kUnset) {
          info.label[v] = id;
          stack.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }
  for (std::uint32_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > info.largest_size) {
      info.largest_size = sizes[c];
      info.largest = c;
    }
  }
  return info;
}

std::vector<VertexId> component_vertices(const ComponentInfo& info,
                                         std::uint32_t component) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < info.label.size(); ++v) {
    if (info.label[v] == component) out.push_back(v);
  }
  return out;
}

}  // namespace ppsp
