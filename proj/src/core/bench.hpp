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

// Workload execution and the timing harness behind `ppsp bench`.

#ifndef PPSP_CORE_BENCH_HPP_
#define PPSP_CORE_BENCH_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/batch.hpp"
#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/heuristic.hpp"
#include "core/workload.hpp"

namespace ppsp {

// Algorithm names accepted by run_workload: the single-pair strategies
// "sssp", "et", "astar", "bids", "bidastar" (each pair answered on its own;
// "sssp" runs a full SSSP from s) and the batch algorithms "multi", "vc",
// "plain-bids", "plain-bids-concurrent", "plain-sssp" (pairs answered as one
// batch).
bool is_known_algo(const std::string& algo);
bool is_batch_algo(const std::string& algo);

struct RunSpec {
  std::string algo = "bids";
  Weight delta = 1;
  int threads = 0;
  Weight sphere_radius = kEarthRadiusKm;
  bool memoize = true;
};

struct WorkloadResult {
  std::vector<Weight> distances;  // one per pair
  Counters counters;
  std::uint64_t searches = 0;  // ppsp calls, SSSPs, or batch runs
};

WorkloadResult run_workload(const CsrGraph& graph,
                            const std::vector<QueryPair>& pairs,
                            const RunSpec& spec);

struct DeltaTrial {
  Weight delta;
  double cost;
};

struct AutoDeltaResult {
  Weight delta;
  std::vector<DeltaTrial> trials;
};

// Doubling search: tries d0 = max(1, max_weight / 1024), 2 d0, 4 d0, ...
// and stops after two consecutive doublings without a strictly lower cost,
// or once delta would exceed 4 * max(max_weight, 1). Returns the cheapest.
AutoDeltaResult auto_delta(Weight max_weight,
                           const std::function<double(Weight)>& cost);

enum class DeltaCost { kWallTime, kWork };

// Work proxy used by DeltaCost::kWork: deterministic on one thread.
double work_cost(const Counters& c);

// auto_delta over a workload sample (the first 8 pairs for single-pair
// strategies, the whole batch otherwise).
AutoDeltaResult auto_delta_for(const CsrGraph& graph,
                               const std::vector<QueryPair>& pairs,
                               const RunSpec& spec, DeltaCost cost);

struct BenchConfig {
  std::string graph_path;
  std::string coords_path;
  std::string algo = "bids";
  std::optional<Weight> delta;  // empty: auto
  DeltaCost delta_cost = DeltaCost::kWallTime;
  int warmup = 1;
  int rounds = 5;
  int threads = 0;
  std::uint64_t seed = 1;
  Weight sphere_radius = kEarthRadiusKm;
  bool memoize = true;
  // Query source, first match wins: explicit pairs, queries_path, pattern,
  // percentile.
  std::vector<QueryPair> pairs;
  std::string queries_path;
  std::optional<Pattern> pattern;
  std::uint32_t size = 6;
  double percentile = 0;
  std::uint32_t count = 1;
};

void validate(const BenchConfig& config);

// The pairs a config asks for (kInvalidArgument if it names none).
std::vector<QueryPair> resolve_queries(const CsrGraph& graph,
                                       const BenchConfig& config);

struct BenchReport {
  BenchConfig config;
  std::string query_source;  // explicit | file | pattern | percentile
  Weight delta = 0;
  std::vector<DeltaTrial> delta_trials;  // empty unless auto
  int threads = 0;
  std::vector<QueryPair> pairs;
  std::vector<Weight> distances;
  std::vector<double> warmup_seconds;
  std::vector<double> round_seconds;
  double mean_seconds = 0;  // over round_seconds only
  Counters counters;        // last timed round
  std::uint64_t searches = 0;
};

// Runs config.warmup untimed and config.rounds timed rounds. Throws kInternal
// if any round returns different distances.
BenchReport run_bench(const CsrGraph& graph, const BenchConfig& config);

// One "record=<kind> key=value ..." line per config, trial, round, result and
// summary. Values containing whitespace are double-quoted.
std::string format_report(const BenchReport& report);
// Header plus one row per result.
std::string format_csv(const BenchReport& report);

// "%.17g", or "inf".
std::string format_weight(Weight w);

}  // namespace ppsp

#endif  // PPSP_CORE_BENCH_HPP_
