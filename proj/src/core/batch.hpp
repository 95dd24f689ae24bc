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

// Batch point-to-point queries over a query graph.
//
// The requested pairs become a small graph Gq: its vertices vq are the
// distinct endpoints and its edges eq the distinct unordered pairs. Four
// solvers answer every edge:
//
//   multi_bids      one search copy per query vertex, all run together;
//                   copy (v,i) is pruned once d[v<i>] >= mu_max[i] / 2
//   vc_sssp_batch   one SSSP per vertex of a vertex cover of Gq
//   plain-bids      one bidirectional search per edge, issued in turn
//   plain-bids-concurrent  same, all edges at once (one thread each)
//   plain-sssp      one SSSP per edge source (smaller vq index)

#ifndef PPSP_CORE_BATCH_HPP_
#define PPSP_CORE_BATCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/stepping.hpp"

namespace ppsp {

struct QueryGraph {
  std::vector<VertexId> vq;  // distinct endpoints, in order of first use
  std::vector<std::pair<std::uint32_t, std::uint32_t>> eq;  // i < j
  std::vector<std::vector<std::uint32_t>> adjacency;  // Nq(q_i) as indices
  std::vector<std::vector<std::uint32_t>> incident;   // edge ids per q_i
  // The input pairs and, for each, its edge id (kSelfPair for s == t).
  std::vector<QueryPair> pairs;
  std::vector<std::uint32_t> pair_edge;

  static constexpr std::uint32_t kSelfPair = 0xffffffffu;

  std::uint32_t num_vertices() const {
    return static_cast<std::uint32_t>(vq.size());
  }
  std::uint32_t num_edges() const {
    return static_cast<std::uint32_t>(eq.size());
  }
};

// Throws kOutOfRange when an endpoint is >= num_vertices.
QueryGraph build_query_graph(const std::vector<QueryPair>& pairs,
                             std::uint64_t num_vertices);

// Minimum vertex cover by enumeration in order of size; among minimum covers
// the lexicographically smallest sorted index set wins. kCoverTooLarge when
// |vq| > kMaxExactCover.
inline constexpr std::uint32_t kMaxExactCover = 20;
std::vector<std::uint32_t> exact_vertex_cover(const QueryGraph& qg);

// Repeatedly takes the vertex covering most uncovered edges (ties to the
// smaller index). Sorted output.
std::vector<std::uint32_t> greedy_vertex_cover(const QueryGraph& qg);

bool is_vertex_cover(const QueryGraph& qg,
                     const std::vector<std::uint32_t>& cover);

enum class BatchAlgo {
  kMultiBids,
  kVertexCover,
  kPlainBids,
  kPlainBidsConcurrent,
  kPlainSssp,
};

std::string_view to_string(BatchAlgo algo);
std::optional<BatchAlgo> parse_batch_algo(std::string_view name);

// Live view of a multi_bids run, handed to BatchOptions::on_step_end.
struct MultiBidsView {
  const QueryGraph& qg;
  const DistanceState& dist;
  std::span<const Weight> mu_edge;
  std::span<const Weight> mu_max;
};

struct BatchOptions {
  StepPolicy policy;
  int threads = 0;
  std::uint64_t max_cells = std::uint64_t{1} << 31;  // multi_bids only
  std::function<void(const MultiBidsView&)> on_step_end;
};

struct BatchAnswer {
  std::vector<Weight> distances;       // one per input pair
  std::vector<Weight> edge_distances;  // one per edge of eq
  Counters counters;
  std::uint64_t sssp_runs = 0;  // SSSPs (vc / plain-sssp) or searches
  std::uint64_t cells = 0;      // distance cells allocated by multi_bids
  std::vector<Weight> mu_max;   // final radii (multi_bids)
  std::vector<std::uint32_t> cover;  // vc only
};

// All solvers need a symmetric graph (kInvalidArgument otherwise).
BatchAnswer multi_bids(const CsrGraph& graph, const QueryGraph& qg,
                       const BatchOptions& options = {});
BatchAnswer vc_sssp_batch(const CsrGraph& graph, const QueryGraph& qg,
                          const BatchOptions& options = {});
BatchAnswer baseline_batch(const CsrGraph& graph, const QueryGraph& qg,
                           BatchAlgo mode, const BatchOptions& options = {});

BatchAnswer run_batch(const CsrGraph& graph, const QueryGraph& qg,
                      BatchAlgo algo, const BatchOptions& options = {});

}  // namespace ppsp

#endif  // PPSP_CORE_BATCH_HPP_
