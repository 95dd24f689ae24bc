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

// The parallel stepping loop shared by SSSP, the point-to-point strategies
// and the batch searches.
//
// Each step asks the policy for a threshold, extracts every pending copy whose
// key is <= threshold, and relaxes the arcs of the extracted copies in
// parallel. A successful write_min adds the target copy back to the frontier.
// The search-specific behaviour lives in a Hooks object:
//
//   Weight key(CellId) const        ordering key (delta, or delta + h)
//   bool prune(CellId)              true to skip a copy
//   void on_relaxed(CellId)         after a successful write_min
//   bool stop(const Frontier&)      checked at every step boundary
//   void on_step_end()              instrumentation
//
// prune / on_relaxed / key run concurrently and must be thread-safe.
//
// With two copies per vertex, `backward` (if given) supplies the arcs for
// copy 1; bidirectional searches on directed graphs pass the transpose.

#ifndef PPSP_CORE_STEPPING_HPP_
#define PPSP_CORE_STEPPING_HPP_

#include <omp.h>

#include <cmath>
#include <functional>
#include <vector>

#include "core/distance_state.hpp"
#include "core/frontier.hpp"
#include "core/graph.hpp"

namespace ppsp {

// Delta*-stepping: the i-th threshold (i from 0) is key_offset + i * delta.
struct StepPolicy {
  Weight delta = 1;
  Weight key_offset = 0;

  Weight threshold(std::uint64_t i) const {
    if (i == 0) return key_offset;
    return key_offset + static_cast<Weight>(i) * delta;
  }

  // Smallest i >= from whose threshold covers `key`.
  std::uint64_t first_index_covering(Weight key, std::uint64_t from) const {
    if (threshold(from) >= key) return from;
    if (std::isinf(delta)) return std::max<std::uint64_t>(from, 1);
    double guess = std::ceil((key - key_offset) / delta);
    std::uint64_t i = from;
    if (guess > static_cast<double>(from)) {
      i = guess >= 1.8e19 ? static_cast<std::uint64_t>(1.8e19)
                          : static_cast<std::uint64_t>(guess);
    }
    while (threshold(i) < key) ++i;
    return i;
  }
};

// Throws kInvalidArgument unless delta > 0 (may be +inf) and offset finite.
void validate(const StepPolicy& policy);

// Resolves a thread-count request: 0 means "library default" (the
// PPSP_NUM_THREADS environment variable, else omp_get_max_threads()).
int resolve_threads(int requested);

inline constexpr std::size_t kParallelCutoff = 128;

template <typename Hooks>
Counters run_stepping(const CsrGraph& graph, DistanceState& dist,
                      Frontier& frontier, const StepPolicy& policy,
                      int threads, Hooks& hooks,
                      const CsrGraph* backward = nullptr) {
  Counters total;
  const std::uint32_t copies = dist.copies();
  const bool pull_enabled = graph.symmetric() && backward == nullptr;
  std::uint64_t step_index = 0;
  auto key = [&hooks](CellId c) { return hooks.key(c); };

  frontier.finish_step();
  while (!frontier.empty()) {
    if (hooks.stop(frontier)) break;
    Weight theta = policy.threshold(step_index);
    Weight rest = kInf;
    std::vector<CellId> batch = frontier.extract(theta, key, &rest);
    while (batch.empty()) {
      if (!(rest < kInf)) throw Error(Errc::kInternal, "unorderable frontier key");
      // Skip thresholds that cover nothing.
      step_index = policy.first_index_covering(rest, step_index + 1);
      theta = policy.threshold(step_index);
      batch = frontier.extract(theta, key, &rest);
    }
    ++step_index;
    ++total.steps;
    const bool pull = pull_enabled && frontier.mode() == FrontierMode::kDense;

    std::uint64_t relaxations = 0;
    std::uint64_t settled = 0;
    std::uint64_t pruned = 0;
    std::uint64_t scanned = 0;
    const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) \
    if (batch.size() > kParallelCutoff)                               \
    reduction(+ : relaxations, settled, pruned, scanned)
    for (std::int64_t b = 0; b < count; ++b) {
      const CellId c = batch[static_cast<std::size_t>(b)];
      if (hooks.prune(c)) {
        ++pruned;
        continue;
      }
      ++settled;
      const VertexId u = static_cast<VertexId>(c / copies);
      const CellId base = c - static_cast<CellId>(u) * copies;
      const CsrGraph& arcs =
          backward != nullptr && base == 1 ? *backward : graph;
      const std::uint64_t begin = arcs.arc_begin(u);
      const std::uint64_t end = arcs.arc_end(u);
      if (pull) {
        // Pull first: settle u against its own neighbourhood before pushing.
        bool improved = false;
        for (std::uint64_t a = begin; a < end; ++a) {
          const CellId from =
              static_cast<CellId>(arcs.arc_target(a)) * copies + base;
          if (dist.relax(c, dist.get(from) + arcs.arc_weight(a))) {
            improved = true;
            ++relaxations;
          }
        }
        scanned += end - begin;
        if (improved) hooks.on_relaxed(c);
      }
      const Weight du = dist.get(c);
      for (std::uint64_t a = begin; a < end; ++a) {
        const CellId to =
            static_cast<CellId>(arcs.arc_target(a)) * copies + base;
        if (dist.relax(to, du + arcs.arc_weight(a))) {
          ++relaxations;
          hooks.on_relaxed(to);
          if (!hooks.prune(to)) frontier.add(to);
        }
      }
      scanned += end - begin;
    }
    total.relaxations += relaxations;
    total.settled_copies += settled;
    total.pruned_copies += pruned;
    total.arcs_scanned += scanned;
    frontier.finish_step();
    hooks.on_step_end();
  }
  return total;
}

struct SsspOptions {
  StepPolicy policy;
  int threads = 0;
  // Called after every step with the current distances (instrumentation).
  std::function<void(const DistanceState&)> on_step_end;
};

struct SsspResult {
  DistanceState dist;
  Counters counters;
};

// Exact single-source distances; +inf for unreachable vertices.
SsspResult sssp(const CsrGraph& graph, VertexId source,
                const SsspOptions& options = {});

}  // namespace ppsp

#endif  // PPSP_CORE_STEPPING_HPP_
