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

// Seeded query workloads: percentile-ranked pairs and batch patterns.
//
// Batch patterns over v query vertices q0..q{v-1}:
//   star       q0 joined to every other vertex
//   chain      q0 - q1 - ... - q{v-1}
//   clique     all pairs
//   bipartite  {q0..q{a-1}} x {qa..q{v-1}}, a = ceil(v/2)
//   fork       chain q0..q{v-3}; q{v-2} and q{v-1} hang off q{(v-3)/2}
//   random     v distinct pairs drawn uniformly
//   separate   floor(v/2) disjoint pairs (q0,q1), (q2,q3), ...
// The q's are v distinct vertices of the largest component.

#ifndef PPSP_CORE_WORKLOAD_HPP_
#define PPSP_CORE_WORKLOAD_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/graph_io.hpp"

namespace ppsp {

enum class Pattern { kStar, kChain, kClique, kBipartite, kFork, kRandom, kSeparate };

inline constexpr Pattern kAllPatterns[] = {
    Pattern::kStar, Pattern::kChain,  Pattern::kClique,  Pattern::kBipartite,
    Pattern::kFork, Pattern::kRandom, Pattern::kSeparate};

std::string_view to_string(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);

// Smallest v the pattern accepts.
std::uint32_t min_pattern_size(Pattern p);

// Edges of the pattern over indices 0..v-1. kInvalidArgument when v is too
// small for the pattern.
std::vector<std::pair<std::uint32_t, std::uint32_t>> pattern_edges(
    Pattern p, std::uint32_t v, std::uint64_t seed);

// v distinct vertices from the largest component, in sampled order.
std::vector<VertexId> sample_component_vertices(const CsrGraph& graph,
                                                std::uint32_t v,
                                                std::uint64_t seed);

std::vector<QueryPair> generate_batch(const CsrGraph& graph, Pattern p,
                                      std::uint32_t v, std::uint64_t seed);

// `count` pairs (s, t): s uniform over the largest component, t its
// p-percentile target.
std::vector<QueryPair> generate_percentile_queries(const CsrGraph& graph,
                                                   double percentile,
                                                   std::uint32_t count,
                                                   std::uint64_t seed);

}  // namespace ppsp

#endif  // PPSP_CORE_WORKLOAD_HPP_
