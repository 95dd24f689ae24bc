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

#include "core/stepping.hpp"

#include <cstdlib>
#include <string>

namespace ppsp {

void validate(const StepPolicy& policy) {
  if (!(policy.delta > 0)) {
    throw Error(Errc::kInvalidArgument, "delta must be > 0");
  }
  if (!std::isfinite(policy.key_offset)) {
    throw Error(Errc::kInvalidArgument, "key offset must be finite");
  }
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PPSP_NUM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

namespace {

struct SsspHooks {
  const DistanceState& dist;
  const std::function<void(const DistanceState&)>& observer;

  Weight key(CellId c) const { return dist.get(c); }
  bool prune(CellId) const { return false; }
  void on_relaxed(CellId) const {}
  bool stop(const Frontier&) const { return false; }
  void on_step_end() const {
    if (observer) observer(dist);
  }
};

}  // namespace

SsspResult sssp(const CsrGraph& graph, VertexId source,
                const SsspOptions& options) {
  if (source >= graph.num_vertices()) {
    throw Error(Errc::kOutOfRange,
                "source " + std::to_string(source) + " out of range");
  }
  validate(options.policy);
  const int threads = resolve_threads(options.threads);
  SsspResult result{DistanceState(graph.num_vertices(), 1), {}};
  Frontier frontier(result.dist.num_cells(), threads);
  result.dist.set(source, 0);
  frontier.add(source);
  SsspHooks hooks{result.dist, options.on_step_end};
  result.counters = run_stepping(graph, result.dist, frontier, options.policy,
                                 threads, hooks);
  return result;
}

}  // namespace ppsp
