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

// Point-to-point shortest paths on the stepping engine.
//
// A strategy is a triple (Init, Prune, UpdateDistance) over a shared upper
// bound mu on d(s,t):
//
//   strategy   copies  Init                 Prune(copy)             Update
//   ET         1       d[s]=0               d[v] >= mu              v == t: mu <- min(mu, d[t])
//   A*         1       d[s]=0               d[v] + h(v) >= mu       v == t: mu <- min(mu, d[t])
//   BiDS       2       d[s+]=0, d[t-]=0     d[v.] >= mu/2           mu <- min(mu, d[v+] + d[v-])
//   BiD-A*     2       d[s+]=0, d[t-]=0     d[v+] + hF(v) >= mu/2   mu <- min(mu, d[v+] + d[v-])
//                                           d[v-] + hB(v) >= mu/2
//
// Extraction keys are d for ET/BiDS and d + h for A*/BiD-A*.

#ifndef PPSP_CORE_PPSP_HPP_
#define PPSP_CORE_PPSP_HPP_

#include <functional>
#include <optional>
#include <string_view>

#include "core/distance_state.hpp"
#include "core/graph.hpp"
#include "core/heuristic.hpp"
#include "core/stepping.hpp"

namespace ppsp {

enum class Strategy {
  kEarlyTermination,
  kAStar,
  kBidirectional,
  kBidirectionalAStar,
};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

constexpr bool is_bidirectional(Strategy s) {
  return s == Strategy::kBidirectional || s == Strategy::kBidirectionalAStar;
}
constexpr bool uses_heuristic(Strategy s) {
  return s == Strategy::kAStar || s == Strategy::kBidirectionalAStar;
}

inline constexpr std::uint32_t kForward = 0;
inline constexpr std::uint32_t kBackward = 1;

struct PpspState {
  PpspState(std::uint64_t num_vertices, VertexId s, VertexId t,
            Strategy strategy)
      : source(s),
        target(t),
        dist(num_vertices, is_bidirectional(strategy) ? 2 : 1) {}

  VertexId source;
  VertexId target;
  DistanceState dist;
  Weight mu = kInf;  // updated only through write_min
};

// The Prune column: `heuristic` is h(v) for A*, hF(v) / hB(v) (by direction)
// for BiD-A*, and ignored for ET / BiDS.
constexpr bool prune_predicate(Strategy s, Weight dist, Weight heuristic,
                               Weight mu) {
  switch (s) {
    case Strategy::kEarlyTermination:
      return dist >= mu;
    case Strategy::kAStar:
      return dist + heuristic >= mu;
    case Strategy::kBidirectional:
      return dist >= mu / 2;
    case Strategy::kBidirectionalAStar:
      return dist + heuristic >= mu / 2;
  }
  return false;
}

// Returns true iff the copy is skipped.
bool strategy_prune(Strategy s, const PpspState& state, SearchCopy copy,
                    Weight heuristic = 0);

// UpdateDistance for a copy that was just relaxed; returns the current mu.
// An unreached opposite copy contributes +inf.
Weight strategy_update(Strategy s, PpspState& state, SearchCopy copy);

struct PpspOptions {
  Strategy strategy = Strategy::kBidirectional;
  // key_offset is ignored for A* / BiD-A*: it is set to the smallest initial
  // key (h(s), resp. min(hF(s), hB(t))).
  StepPolicy policy;
  int threads = 0;
  bool memoize = true;
  Weight sphere_radius = kEarthRadiusKm;
  // Test hooks: disable Prune entirely / the disconnected-query early exit.
  bool prune = true;
  bool early_out = true;
  // Transpose of a directed graph for the backward search; computed on the
  // fly when a bidirectional strategy meets an asymmetric graph without it.
  const CsrGraph* reverse = nullptr;
  std::function<void(const PpspState&)> on_step_end;
};

struct PpspAnswer {
  Weight distance = kInf;
  Counters counters;
  bool early_out = false;  // stopped by the one-direction-left check
};

// Exact d(s,t), or +inf when t is unreachable. Heuristic strategies need
// graph coordinates (kMissingCoordinates otherwise).
PpspAnswer ppsp(const CsrGraph& graph, VertexId s, VertexId t,
                const PpspOptions& options = {});

}  // namespace ppsp

#endif  // PPSP_CORE_PPSP_HPP_
