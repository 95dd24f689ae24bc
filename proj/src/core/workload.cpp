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

#include "core/workload.hpp"

#include <numeric>
#include <string>

#include "core/oracle.hpp"
#include "core/random.hpp"

namespace ppsp {
namespace {

// Stream keys for the generators below.
constexpr std::uint64_t kSampleKey = 0x51;
constexpr std::uint64_t kRandomEdgeKey = 0x52;
constexpr std::uint64_t kSourceKey = 0x53;

}  // namespace

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::kStar:
      return "star";
    case Pattern::kChain:
      return "chain";
    case Pattern::kClique:
      return "clique";
    case Pattern::kBipartite:
      return "bipartite";
    case Pattern::kFork:
      return "fork";
    case Pattern::kRandom:
      return "random";
    case Pattern::kSeparate:
      return "separate";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (Pattern p : kAllPatterns) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::uint32_t min_pattern_size(Pattern p) {
  switch (p) {
    case Pattern::kFork:
      return 5;
    case Pattern::kRandom:
      return 3;
    default:
      return 2;
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pattern_edges(
    Pattern p, std::uint32_t v, std::uint64_t seed) {
  if (v < min_pattern_size(p)) {
    throw Error(Errc::kInvalidArgument,
                std::string(to_string(p)) + " needs at least " +
                    std::to_string(min_pattern_size(p)) + " vertices");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  switch (p) {
    case Pattern::kStar:
      for (std::uint32_t i = 1; i < v; ++i) edges.emplace_back(0, i);
      break;
    case Pattern::kChain:
      for (std::uint32_t i = 0; i + 1 < v; ++i) edges.emplace_back(i, i + 1);
      break;
    case Pattern::kClique:
      for (std::uint32_t i = 0; i < v; ++i) {
        for (std::uint32_t j = i + 1; j < v; ++j) edges.emplace_back(i, j);
      }
      break;
    case Pattern::kBipartite: {
      const std::uint32_t a = (v + 1) / 2;
      for (std::uint32_t i = 0; i < a; ++i) {
        for (std::uint32_t j = a; j < v; ++j) edges.emplace_back(i, j);
      }
      break;
    }
    case Pattern::kFork: {
      for (std::uint32_t i = 0; i + 3 < v; ++i) edges.emplace_back(i, i + 1);
      const std::uint32_t branch = (v - 3) / 2;
      edges.emplace_back(branch, v - 2);
      edges.emplace_back(branch, v - 1);
      break;
    }
    case Pattern::kRandom: {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
      for (std::uint32_t i = 0; i < v; ++i) {
        for (std::uint32_t j = i + 1; j < v; ++j) all.emplace_back(i, j);
      }
      SplitMix64 rng(seed, kRandomEdgeKey);
      for (std::uint32_t k = 0; k < v; ++k) {
        const std::uint64_t pick = k + rng.next_below(all.size() - k);
        std::swap(all[k], all[pick]);
        edges.push_back(all[k]);
      }
      break;
    }
    case Pattern::kSeparate:
      for (std::uint32_t i = 0; i + 1 < v; i += 2) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

std::vector<VertexId> sample_component_vertices(const CsrGraph& graph,
                                                std::uint32_t v,
                                                std::uint64_t seed) {
  ComponentInfo info = largest_component(graph);
  std::vector<VertexId> pool = component_vertices(info, info.largest);
  if (pool.size() < v) {
    throw Error(Errc::kInvalidArgument,
                "largest component has " + std::to_string(pool.size()) +
                    " vertices, need " + std::to_string(v));
  }
  SplitMix64 rng(seed, kSampleKey);
  for (std::uint32_t k = 0; k < v; ++k) {
    const std::uint64_t pick = k + rng.next_below(pool.size() - k);
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(v);
  return pool;
}

std::vector<QueryPair> generate_batch(const CsrGraph& graph, Pattern p,
                                      std::uint32_t v, std::uint64_t seed) {
  auto edges = pattern_edges(p, v, seed);
  std::vector<VertexId> q = sample_component_vertices(graph, v, seed);
  std::vector<QueryPair> pairs;
  pairs.reserve(edges.size());
  for (auto [i, j] : edges) pairs.emplace_back(q[i], q[j]);
  return pairs;
}

std::vector<QueryPair> generate_percentile_queries(const CsrGraph& graph,
                                                   double percentile,
                                                   std::uint32_t count,
                                                   std::uint64_t seed) {
  ComponentInfo info = largest_component(graph);
  if (info.largest_size < 2) {
    throw Error(Errc::kIsolatedSource,
                "largest component has a single vertex");
  }
  std::vector<VertexId> pool = component_vertices(info, info.largest);
  SplitMix64 rng(seed, kSourceKey);
  std::vector<QueryPair> pairs;
  pairs.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    const VertexId s = pool[rng.next_below(pool.size())];
    pairs.emplace_back(s, percentile_target(graph, s, percentile));
  }
  return pairs;
}

}  // namespace ppsp
