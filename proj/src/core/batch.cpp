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

#include "core/batch.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "core/ppsp.hpp"

namespace ppsp {

QueryGraph build_query_graph(const std::vector<QueryPair>& pairs,
                             std::uint64_t num_vertices) {
  QueryGraph qg;
  qg.pairs = pairs;
  std::unordered_map<VertexId, std::uint32_t> index;
  auto intern = [&](VertexId v) {
    if (v >= num_vertices) {
      throw Error(Errc::kOutOfRange,
                  "query vertex " + std::to_string(v) + " out of range");
    }
    auto [it, inserted] = index.emplace(v, qg.num_vertices());
    if (inserted) qg.vq.push_back(v);
    return it->second;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edge_id;
  for (const auto& [s, t] : pairs) {
    std::uint32_t i = intern(s);
    std::uint32_t j = intern(t);
    if (i == j) {
      qg.pair_edge.push_back(QueryGraph::kSelfPair);
      continue;
    }
    if (i > j) std::swap(i, j);
    auto [it, inserted] = edge_id.emplace(std::pair{i, j}, qg.num_edges());
    if (inserted) qg.eq.emplace_back(i, j);
    qg.pair_edge.push_back(it->second);
  }
  qg.adjacency.assign(qg.vq.size(), {});
  qg.incident.assign(qg.vq.size(), {});
  for (std::uint32_t e = 0; e < qg.num_edges(); ++e) {
    auto [i, j] = qg.eq[e];
    qg.adjacency[i].push_back(j);
    qg.adjacency[j].push_back(i);
    qg.incident[i].push_back(e);
    qg.incident[j].push_back(e);
  }
  return qg;
}

bool is_vertex_cover(const QueryGraph& qg,
                     const std::vector<std::uint32_t>& cover) {
  std::vector<bool> in(qg.vq.size(), false);
  for (std::uint32_t i : cover) {
    if (i >= in.size()) return false;
    in[i] = true;
  }
  return std::all_of(qg.eq.begin(), qg.eq.end(),
                     [&](const auto& e) { return in[e.first] || in[e.second]; });
}

std::vector<std::uint32_t> exact_vertex_cover(const QueryGraph& qg) {
  const std::uint32_t k = qg.num_vertices();
  if (k > kMaxExactCover) {
    throw Error(Errc::kCoverTooLarge,
                "exact vertex cover supports at most " +
                    std::to_string(kMaxExactCover) + " query vertices, got " +
                    std::to_string(k));
  }
  auto covers = [&](std::uint32_t mask) {
    for (auto [i, j] : qg.eq) {
      if (((mask >> i) & 1u) == 0 && ((mask >> j) & 1u) == 0) return false;
    }
    return true;
  };
  // Combinations of each size in lexicographic order.
  for (std::uint32_t size = 0; size <= k; ++size) {
    std::vector<std::uint32_t> pick(size);
    for (std::uint32_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (std::uint32_t i : pick) mask |= 1u << i;
      if (covers(mask)) return pick;
      std::int64_t pos = static_cast<std::int64_t>(size) - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] ==
                             k - size + static_cast<std::uint32_t>(pos)) {
        --pos;
      }
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
      for (auto p = static_cast<std::size_t>(pos) + 1; p < size; ++p) {
        pick[p] = pick[p - 1] + 1;
      }
    }
  }
  throw Error(Errc::kInternal, "no vertex cover found");
}

std::vector<std::uint32_t> greedy_vertex_cover(const QueryGraph& qg) {
  std::vector<bool> covered(qg.eq.size(), false);
  std::vector<std::uint32_t> degree(qg.vq.size());
  for (std::uint32_t i = 0; i < qg.num_vertices(); ++i) {
    degree[i] = static_cast<std::uint32_t>(qg.incident[i].size());
  }
  std::vector<std::uint32_t> cover;
  while (true) {
    auto best = std::max_element(degree.begin(), degree.end());
    if (best == degree.end() || *best == 0) break;
    const auto i = static_cast<std::uint32_t>(best - degree.begin());
    cover.push_back(i);
    for (std::uint32_t e : qg.incident[i]) {
      if (covered[e]) continue;
      covered[e] = true;
      --degree[qg.eq[e].first];
      --degree[qg.eq[e].second];
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::string_view to_string(BatchAlgo algo) {
  switch (algo) {
    case BatchAlgo::kMultiBids:
      return "multi";
    case BatchAlgo::kVertexCover:
      return "vc";
    case BatchAlgo::kPlainBids:
      return "plain-bids";
    case BatchAlgo::kPlainBidsConcurrent:
      return "plain-bids-concurrent";
    case BatchAlgo::kPlainSssp:
      return "plain-sssp";
  }
  return "?";
}

std::optional<BatchAlgo> parse_batch_algo(std::string_view name) {
  for (BatchAlgo a : {BatchAlgo::kMultiBids, BatchAlgo::kVertexCover,
                      BatchAlgo::kPlainBids, BatchAlgo::kPlainBidsConcurrent,
                      BatchAlgo::kPlainSssp}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

namespace {

void require_symmetric(const CsrGraph& graph) {
  if (!graph.symmetric()) {
    throw Error(Errc::kInvalidArgument,
                "batch queries need a symmetrized graph");
  }
}

void fan_out(const QueryGraph& qg, BatchAnswer& answer) {
  answer.distances.assign(qg.pairs.size(), 0);
  for (std::size_t p = 0; p < qg.pairs.size(); ++p) {
    const std::uint32_t e = qg.pair_edge[p];
    if (e != QueryGraph::kSelfPair) answer.distances[p] = answer.edge_distances[e];
  }
}

struct MultiHooks {
  const QueryGraph& qg;
  DistanceState& dist;
  std::vector<Weight>& mu_edge;
  std::vector<Weight>& mu_max;
  const std::function<void(const MultiBidsView&)>& observer;
  std::uint32_t k;

  Weight key(CellId c) const { return dist.get(c); }

  bool prune(CellId c) const {
    return dist.get(c) >= atomic_load(mu_max[c % k]) / 2;
  }

  void refresh(std::uint32_t i) const {
    Weight m = 0;
    for (std::uint32_t e : qg.incident[i]) {
      m = std::max(m, atomic_load(mu_edge[e]));
    }
    write_min(mu_max[i], m);
  }

  void on_relaxed(CellId c) const {
    const auto i = static_cast<std::uint32_t>(c % k);
    const CellId base = c - i;
    const Weight di = dist.get(c);
    for (std::uint32_t e : qg.incident[i]) {
      const std::uint32_t j = qg.eq[e].first == i ? qg.eq[e].second
                                                  : qg.eq[e].first;
      if (write_min(mu_edge[e], di + dist.get(base + j))) {
        refresh(i);
        refresh(j);
      }
    }
  }

  bool stop(const Frontier&) const { return false; }

  void on_step_end() const {
    if (observer) observer(MultiBidsView{qg, dist, mu_edge, mu_max});
  }
};

}  // namespace

BatchAnswer multi_bids(const CsrGraph& graph, const QueryGraph& qg,
                       const BatchOptions& options) {
  require_symmetric(graph);
  validate(options.policy);
  BatchAnswer answer;
  const std::uint32_t k = qg.num_vertices();
  answer.edge_distances.assign(qg.eq.size(), kInf);
  answer.mu_max.assign(k, kInf);
  if (qg.eq.empty()) {
    fan_out(qg, answer);
    return answer;
  }
  const std::uint64_t cells = graph.num_vertices() * k;
  if (cells > options.max_cells) {
    throw Error(Errc::kBatchTooLarge,
                "batch needs " + std::to_string(cells) +
                    " distance cells, cap is " +
                    std::to_string(options.max_cells) +
                    "; split the batch");
  }
  const int threads = resolve_threads(options.threads);
  DistanceState dist(graph.num_vertices(), k);
  answer.cells = dist.num_cells();
  Frontier frontier(dist.num_cells(), threads);
  MultiHooks hooks{qg, dist, answer.edge_distances, answer.mu_max,
                   options.on_step_end, k};
  for (std::uint32_t i = 0; i < k; ++i) {
    if (qg.incident[i].empty()) continue;  // only self pairs
    const CellId c = dist.cell(qg.vq[i], i);
    dist.set(c, 0);
    frontier.add(c);
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!qg.incident[i].empty()) hooks.on_relaxed(dist.cell(qg.vq[i], i));
  }
  answer.counters =
      run_stepping(graph, dist, frontier, options.policy, threads, hooks);
  answer.sssp_runs = 1;
  fan_out(qg, answer);
  return answer;
}

namespace {

// SSSP from each listed query vertex; edge (i, j) is answered from i when i
// is a source, else from j.
BatchAnswer sssp_from(const CsrGraph& graph, const QueryGraph& qg,
                      const std::vector<std::uint32_t>& sources,
                      const BatchOptions& options) {
  BatchAnswer answer;
  answer.edge_distances.assign(qg.eq.size(), kInf);
  std::vector<std::int64_t> slot(qg.vq.size(), -1);
  std::vector<std::vector<Weight>> dist;
  SsspOptions sssp_options{options.policy, options.threads, nullptr};
  for (std::uint32_t i : sources) {
    SsspResult r = sssp(graph, qg.vq[i], sssp_options);
    slot[i] = static_cast<std::int64_t>(dist.size());
    dist.push_back(r.dist.distances_of(0));
    answer.counters += r.counters;
    ++answer.sssp_runs;
  }
  for (std::uint32_t e = 0; e < qg.num_edges(); ++e) {
    auto [i, j] = qg.eq[e];
    if (slot[i] >= 0) {
      answer.edge_distances[e] = dist[static_cast<std::size_t>(slot[i])][qg.vq[j]];
    } else if (slot[j] >= 0) {
      answer.edge_distances[e] = dist[static_cast<std::size_t>(slot[j])][qg.vq[i]];
    } else {
      throw Error(Errc::kInternal, "edge not covered by any SSSP source");
    }
  }
  fan_out(qg, answer);
  return answer;
}

}  // namespace

BatchAnswer vc_sssp_batch(const CsrGraph& graph, const QueryGraph& qg,
                          const BatchOptions& options) {
  require_symmetric(graph);
  std::vector<std::uint32_t> cover = qg.num_vertices() <= kMaxExactCover
                                         ? exact_vertex_cover(qg)
                                         : greedy_vertex_cover(qg);
  BatchAnswer answer = sssp_from(graph, qg, cover, options);
  answer.cover = std::move(cover);
  return answer;
}

BatchAnswer baseline_batch(const CsrGraph& graph, const QueryGraph& qg,
                           BatchAlgo mode, const BatchOptions& options) {
  require_symmetric(graph);
  if (mode == BatchAlgo::kPlainSssp) {
    std::vector<std::uint32_t> sources;
    for (auto [i, j] : qg.eq) sources.push_back(i);
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    return sssp_from(graph, qg, sources, options);
  }
  if (mode != BatchAlgo::kPlainBids && mode != BatchAlgo::kPlainBidsConcurrent) {
    throw Error(Errc::kInvalidArgument,
                "baseline_batch mode must be plain-bids, "
                "plain-bids-concurrent or plain-sssp");
  }
  validate(options.policy);
  BatchAnswer answer;
  const auto m = static_cast<std::int64_t>(qg.eq.size());
  answer.edge_distances.assign(qg.eq.size(), kInf);
  std::vector<Counters> per_edge(qg.eq.size());
  PpspOptions ppsp_options;
  ppsp_options.strategy = Strategy::kBidirectional;
  ppsp_options.policy = options.policy;
  ppsp_options.threads = options.threads;
  if (mode == BatchAlgo::kPlainBids) {
    for (std::int64_t e = 0; e < m; ++e) {
      auto [i, j] = qg.eq[static_cast<std::size_t>(e)];
      PpspAnswer a = ppsp(graph, qg.vq[i], qg.vq[j], ppsp_options);
      answer.edge_distances[static_cast<std::size_t>(e)] = a.distance;
      per_edge[static_cast<std::size_t>(e)] = a.counters;
    }
  } else {
    const int threads = resolve_threads(options.threads);
    ppsp_options.threads = 1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t e = 0; e < m; ++e) {
      auto [i, j] = qg.eq[static_cast<std::size_t>(e)];
      PpspAnswer a = ppsp(graph, qg.vq[i], qg.vq[j], ppsp_options);
      answer.edge_distances[static_cast<std::size_t>(e)] = a.distance;
      per_edge[static_cast<std::size_t>(e)] = a.counters;
    }
  }
  for (const Counters& c : per_edge) answer.counters += c;
  answer.sssp_runs = qg.eq.size();
  fan_out(qg, answer);
  return answer;
}

BatchAnswer run_batch(const CsrGraph& graph, const QueryGraph& qg,
                      BatchAlgo algo, const BatchOptions& options) {
  switch (algo) {
    case BatchAlgo::kMultiBids:
      return multi_bids(graph, qg, options);
    case BatchAlgo::kVertexCover:
      return vc_sssp_batch(graph, qg, options);
    default:
      return baseline_batch(graph, qg, algo, options);
  }
}

}  // namespace ppsp
