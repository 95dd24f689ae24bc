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

#include "core/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <sstream>

#include "core/ppsp.hpp"
#include "core/random.hpp"
#include "core/stepping.hpp"

namespace ppsp {
namespace {

constexpr std::size_t kAutoDeltaSample = 8;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string quote(const std::string& value) {
  if (!value.empty() &&
      std::none_of(value.begin(), value.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '"' ||
               c == '\\';
      })) {
    return value;
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool is_batch_algo(const std::string& algo) {
  return parse_batch_algo(algo).has_value();
}

bool is_known_algo(const std::string& algo) {
  return algo == "sssp" || parse_strategy(algo).has_value() ||
         is_batch_algo(algo);
}

WorkloadResult run_workload(const CsrGraph& graph,
                            const std::vector<QueryPair>& pairs,
                            const RunSpec& spec) {
  WorkloadResult result;
  const StepPolicy policy{spec.delta, 0};
  if (auto algo = parse_batch_algo(spec.algo)) {
    QueryGraph qg = build_query_graph(pairs, graph.num_vertices());
    BatchOptions options;
    options.policy = policy;
    options.threads = spec.threads;
    BatchAnswer answer = run_batch(graph, qg, *algo, options);
    result.distances = std::move(answer.distances);
    result.counters = answer.counters;
    result.searches = answer.sssp_runs;
    return result;
  }
  if (spec.algo == "sssp") {
    SsspOptions options{policy, spec.threads, nullptr};
    for (auto [s, t] : pairs) {
      if (t >= graph.num_vertices()) {
        throw Error(Errc::kOutOfRange,
                    "target " + std::to_string(t) + " out of range");
      }
      SsspResult r = sssp(graph, s, options);
      result.distances.push_back(r.dist.get(t));
      result.counters += r.counters;
      ++result.searches;
    }
    return result;
  }
  auto strategy = parse_strategy(spec.algo);
  if (!strategy) {
    throw Error(Errc::kInvalidArgument, "unknown algorithm '" + spec.algo + "'");
  }
  PpspOptions options;
  options.strategy = *strategy;
  options.policy = policy;
  options.threads = spec.threads;
  options.memoize = spec.memoize;
  options.sphere_radius = spec.sphere_radius;
  for (auto [s, t] : pairs) {
    PpspAnswer a = ppsp(graph, s, t, options);
    result.distances.push_back(a.distance);
    result.counters += a.counters;
    ++result.searches;
  }
  return result;
}

AutoDeltaResult auto_delta(Weight max_weight,
                           const std::function<double(Weight)>& cost) {
  const Weight top = std::max<Weight>(max_weight, 1);
  Weight delta = std::max<Weight>(1, max_weight / 1024);
  AutoDeltaResult out{delta, {}};
  double best = cost(delta);
  out.trials.push_back({delta, best});
  int misses = 0;
  while (misses < 2 && delta * 2 <= 4 * top) {
    delta *= 2;
    const double c = cost(delta);
    out.trials.push_back({delta, c});
    if (c < best) {
      best = c;
      out.delta = delta;
      misses = 0;
    } else {
      ++misses;
    }
  }
  return out;
}

double work_cost(const Counters& c) {
  return static_cast<double>(c.arcs_scanned + c.settled_copies +
                             c.pruned_copies + 256 * c.steps);
}

AutoDeltaResult auto_delta_for(const CsrGraph& graph,
                               const std::vector<QueryPair>& pairs,
                               const RunSpec& spec, DeltaCost cost) {
  if (pairs.empty()) {
    throw Error(Errc::kInvalidArgument, "auto delta needs a nonempty sample");
  }
  std::vector<QueryPair> sample = pairs;
  if (!is_batch_algo(spec.algo) && sample.size() > kAutoDeltaSample) {
    sample.resize(kAutoDeltaSample);
  }
  return auto_delta(graph.max_weight(), [&](Weight delta) {
    RunSpec trial = spec;
    trial.delta = delta;
    const auto start = std::chrono::steady_clock::now();
    WorkloadResult r = run_workload(graph, sample, trial);
    const double elapsed = seconds_since(start);
    return cost == DeltaCost::kWork ? work_cost(r.counters) : elapsed;
  });
}

void validate(const BenchConfig& config) {
  if (!is_known_algo(config.algo)) {
    throw Error(Errc::kInvalidArgument,
                "unknown algorithm '" + config.algo + "'");
  }
  if (config.rounds < 1) {
    throw Error(Errc::kInvalidArgument, "rounds must be >= 1");
  }
  if (config.warmup < 0) {
    throw Error(Errc::kInvalidArgument, "warmup must be >= 0");
  }
  if (config.delta && !(*config.delta > 0)) {
    throw Error(Errc::kInvalidArgument, "delta must be > 0");
  }
}

std::vector<QueryPair> resolve_queries(const CsrGraph& graph,
                                       const BenchConfig& config) {
  if (!config.pairs.empty()) return config.pairs;
  if (!config.queries_path.empty()) return load_query_pairs(config.queries_path);
  if (config.pattern) {
    return generate_batch(graph, *config.pattern, config.size, config.seed);
  }
  if (config.percentile > 0) {
    return generate_percentile_queries(graph, config.percentile, config.count,
                                       config.seed);
  }
  throw Error(Errc::kInvalidArgument,
              "no queries: give pairs, a query file, a pattern or a "
              "percentile");
}

BenchReport run_bench(const CsrGraph& graph, const BenchConfig& config) {
  validate(config);
  BenchReport report;
  report.config = config;
  report.query_source = !config.pairs.empty()          ? "explicit"
                        : !config.queries_path.empty() ? "file"
                        : config.pattern               ? "pattern"
                                                       : "percentile";
  report.pairs = resolve_queries(graph, config);
  report.threads = resolve_threads(config.threads);
  RunSpec spec{config.algo, 1, report.threads, config.sphere_radius,
               config.memoize};
  if (config.delta) {
    spec.delta = *config.delta;
  } else {
    AutoDeltaResult a =
        auto_delta_for(graph, report.pairs, spec, config.delta_cost);
    spec.delta = a.delta;
    report.delta_trials = std::move(a.trials);
  }
  report.delta = spec.delta;

  auto round = [&](std::vector<double>& times) {
    const auto start = std::chrono::steady_clock::now();
    WorkloadResult r = run_workload(graph, report.pairs, spec);
    times.push_back(seconds_since(start));
    if (report.warmup_seconds.size() + report.round_seconds.size() == 1) {
      report.distances = r.distances;
    } else if (r.distances.size() != report.distances.size() ||
               std::memcmp(r.distances.data(), report.distances.data(),
                           r.distances.size() * sizeof(Weight)) != 0) {
      throw Error(Errc::kInternal, "distances differ between rounds");
    }
    report.counters = r.counters;
    report.searches = r.searches;
  };
  for (int i = 0; i < config.warmup; ++i) round(report.warmup_seconds);
  for (int i = 0; i < config.rounds; ++i) round(report.round_seconds);
  report.mean_seconds =
      std::accumulate(report.round_seconds.begin(), report.round_seconds.end(),
                      0.0) /
      static_cast<double>(report.round_seconds.size());
  return report;
}

std::string format_weight(Weight w) {
  if (std::isinf(w)) return w > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

std::string format_report(const BenchReport& r) {
  const BenchConfig& c = r.config;
  std::ostringstream out;
  out << "record=config graph=" << quote(c.graph_path)
      << " coords=" << quote(c.coords_path) << " algo=" << c.algo
      << " delta=" << (c.delta ? format_weight(*c.delta) : "auto")
      << " delta_cost=" << (c.delta_cost == DeltaCost::kWork ? "work" : "time")
      << " warmup=" << c.warmup << " rounds=" << c.rounds
      << " threads=" << c.threads << " seed=" << c.seed
      << " rng=" << kRandomAlgorithm << " queries=" << r.query_source
      << " queries_path=" << quote(c.queries_path)
      << " pattern=" << (c.pattern ? to_string(*c.pattern) : "none")
      << " size=" << c.size << " percentile=" << format_double(c.percentile)
      << " count=" << c.count << " radius=" << format_weight(c.sphere_radius)
      << " memo=" << (c.memoize ? 1 : 0) << '\n';
  for (const DeltaTrial& t : r.delta_trials) {
    out << "record=delta_trial delta=" << format_weight(t.delta)
        << " cost=" << format_double(t.cost) << '\n';
  }
  for (std::size_t i = 0; i < r.warmup_seconds.size(); ++i) {
    out << "record=round kind=warmup index=" << i
        << " seconds=" << format_double(r.warmup_seconds[i]) << '\n';
  }
  for (std::size_t i = 0; i < r.round_seconds.size(); ++i) {
    out << "record=round kind=timed index=" << i
        << " seconds=" << format_double(r.round_seconds[i]) << '\n';
  }
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    out << "record=result index=" << i << " s=" << r.pairs[i].first
        << " t=" << r.pairs[i].second
        << " distance=" << format_weight(r.distances[i]) << '\n';
  }
  const Counters& k = r.counters;
  out << "record=summary algo=" << c.algo << " delta=" << format_weight(r.delta)
      << " threads=" << r.threads << " seed=" << c.seed
      << " warmup_rounds=" << r.warmup_seconds.size()
      << " timed_rounds=" << r.round_seconds.size()
      << " mean_seconds=" << format_double(r.mean_seconds)
      << " queries=" << r.pairs.size() << " searches=" << r.searches
      << " relaxations=" << k.relaxations
      << " settled_copies=" << k.settled_copies
      << " pruned_copies=" << k.pruned_copies
      << " arcs_scanned=" << k.arcs_scanned << " steps=" << k.steps
      << " heuristic_evals=" << k.heuristic_evals << '\n';
  return out.str();
}

std::string format_csv(const BenchReport& r) {
  std::ostringstream out;
  out << "algo,delta,threads,seed,warmup_rounds,timed_rounds,mean_seconds,"
         "index,s,t,distance\n";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    out << r.config.algo << ',' << format_weight(r.delta) << ',' << r.threads
        << ',' << r.config.seed << ',' << r.warmup_seconds.size() << ','
        << r.round_seconds.size() << ',' << format_double(r.mean_seconds)
        << ',' << i << ',' << r.pairs[i].first << ',' << r.pairs[i].second
        << ',' << format_weight(r.distances[i]) << '\n';
  }
  return out.str();
}

}  // namespace ppsp
