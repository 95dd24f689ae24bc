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

#include "ppsp/ppsp.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/batch.hpp"
#include "core/bench.hpp"
#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/oracle.hpp"
#include "core/ppsp.hpp"
#include "core/random.hpp"
#include "core/stepping.hpp"
#include "core/workload.hpp"

struct ppsp_graph {
  ppsp::CsrGraph graph;
};

struct ppsp_bench_report {
  ppsp::BenchReport report;
};

static_assert(static_cast<int>(ppsp::Errc::kInternal) == PPSP_ERR_INTERNAL);
static_assert(static_cast<int>(ppsp::Errc::kBatchTooLarge) ==
              PPSP_ERR_BATCH_TOO_LARGE);
static_assert(static_cast<int>(ppsp::CoordKind::kSpherical) ==
              PPSP_COORDS_SPHERICAL);

namespace {

thread_local std::string last_error;

ppsp_status fail(ppsp_status status, const char* what) {
  last_error = what;
  return status;
}

template <typename F>
ppsp_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return PPSP_OK;
  } catch (const ppsp::Error& e) {
    return fail(static_cast<ppsp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PPSP_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(PPSP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PPSP_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw ppsp::Error(ppsp::Errc::kInvalidArgument, what);
}

ppsp_counters to_c(const ppsp::Counters& c) {
  return {c.relaxations, c.settled_copies, c.pruned_copies,
          c.arcs_scanned, c.steps,          c.heuristic_evals};
}

std::vector<ppsp::QueryPair> to_pairs(const std::uint32_t* pairs,
                                      std::uint64_t k) {
  require(pairs != nullptr || k == 0, "pairs is null");
  std::vector<ppsp::QueryPair> out(k);
  for (std::uint64_t i = 0; i < k; ++i) out[i] = {pairs[2 * i], pairs[2 * i + 1]};
  return out;
}

void from_pairs(const std::vector<ppsp::QueryPair>& pairs, std::uint32_t* out) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[2 * i] = pairs[i].first;
    out[2 * i + 1] = pairs[i].second;
  }
}

ppsp::RunSpec to_spec(const ppsp_run_options* o) {
  ppsp_run_options defaults;
  ppsp_run_options_init(&defaults);
  if (o == nullptr) o = &defaults;
  require(o->algo != nullptr, "options.algo is null");
  return ppsp::RunSpec{o->algo, o->delta, o->threads, o->sphere_radius,
                       o->memoize != 0};
}

}  // namespace

extern "C" {

const char* ppsp_version(void) { return "1.0.0"; }

const char* ppsp_random_algorithm(void) { return ppsp::kRandomAlgorithm; }

const char* ppsp_status_string(ppsp_status status) {
  switch (status) {
    case PPSP_OK:
      return "ok";
    case PPSP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PPSP_ERR_OUT_OF_RANGE:
      return "vertex out of range";
    case PPSP_ERR_INVALID_WEIGHT:
      return "invalid weight";
    case PPSP_ERR_IO:
      return "i/o error";
    case PPSP_ERR_FORMAT:
      return "malformed input";
    case PPSP_ERR_MISSING_COORDINATES:
      return "missing coordinates";
    case PPSP_ERR_BATCH_TOO_LARGE:
      return "batch too large";
    case PPSP_ERR_COVER_TOO_LARGE:
      return "query graph too large for exact cover";
    case PPSP_ERR_ISOLATED_SOURCE:
      return "isolated source";
    case PPSP_ERR_INTERNAL:
      return "internal error";
    case PPSP_ERR_NO_MEMORY:
      return "out of memory";
    case PPSP_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
  }
  return "unknown status";
}

const char* ppsp_last_error(void) { return last_error.c_str(); }

ppsp_status ppsp_graph_create(uint64_t n, const ppsp_edge* edges,
                              uint64_t num_edges, int symmetrize,
                              ppsp_graph** out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    require(edges != nullptr || num_edges == 0, "edges is null");
    std::vector<ppsp::Edge> list(num_edges);
    for (uint64_t i = 0; i < num_edges; ++i) {
      list[i] = {edges[i].u, edges[i].v, edges[i].w};
    }
    *out = new ppsp_graph{ppsp::build_csr(n, list, symmetrize != 0)};
  });
}

ppsp_status ppsp_graph_load(const char* path, ppsp_graph** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new ppsp_graph{ppsp::load_graph(path)};
  });
}

ppsp_status ppsp_graph_save_text(const ppsp_graph* graph, const char* path) {
  return guard([&] {
    require(graph != nullptr && path != nullptr, "null argument");
    ppsp::save_text_graph(graph->graph, path);
  });
}

ppsp_status ppsp_graph_save_binary(const ppsp_graph* graph, const char* path) {
  return guard([&] {
    require(graph != nullptr && path != nullptr, "null argument");
    ppsp::save_binary_graph(graph->graph, path);
  });
}

void ppsp_graph_free(ppsp_graph* graph) { delete graph; }

uint64_t ppsp_graph_num_vertices(const ppsp_graph* graph) {
  return graph ? graph->graph.num_vertices() : 0;
}

uint64_t ppsp_graph_num_arcs(const ppsp_graph* graph) {
  return graph ? graph->graph.num_arcs() : 0;
}

int ppsp_graph_is_symmetric(const ppsp_graph* graph) {
  return graph && graph->graph.symmetric() ? 1 : 0;
}

double ppsp_graph_max_weight(const ppsp_graph* graph) {
  return graph ? graph->graph.max_weight() : 0;
}

ppsp_coord_kind ppsp_graph_coord_kind(const ppsp_graph* graph) {
  if (graph == nullptr) return PPSP_COORDS_NONE;
  return static_cast<ppsp_coord_kind>(graph->graph.coord_kind());
}

ppsp_status ppsp_graph_set_coords(ppsp_graph* graph, ppsp_coord_kind kind,
                                  const double* xy, uint64_t n) {
  return guard([&] {
    require(graph != nullptr && xy != nullptr, "null argument");
    require(kind == PPSP_COORDS_EUCLIDEAN || kind == PPSP_COORDS_SPHERICAL,
            "coordinate kind must be euclidean or spherical");
    std::vector<ppsp::Point> pts(n);
    for (uint64_t i = 0; i < n; ++i) pts[i] = {xy[2 * i], xy[2 * i + 1]};
    graph->graph.set_coords(static_cast<ppsp::CoordKind>(kind), std::move(pts));
  });
}

ppsp_status ppsp_graph_load_coords(ppsp_graph* graph, const char* path) {
  return guard([&] {
    require(graph != nullptr && path != nullptr, "null argument");
    ppsp::attach_coordinates(graph->graph, path);
  });
}

ppsp_status ppsp_graph_uniform_weights(const ppsp_graph* graph, uint64_t seed,
                                       double lo, double hi, int real,
                                       ppsp_graph** out) {
  return guard([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = new ppsp_graph{ppsp::generate_uniform_weights(
        graph->graph, seed, lo, hi,
        real ? ppsp::WeightDistribution::kReal
             : ppsp::WeightDistribution::kInteger)};
  });
}

ppsp_status ppsp_graph_components(const ppsp_graph* graph, uint32_t* labels,
                                  uint32_t* num_components, uint32_t* largest,
                                  uint64_t* largest_size) {
  return guard([&] {
    require(graph != nullptr, "graph is null");
    ppsp::ComponentInfo info = ppsp::largest_component(graph->graph);
    if (labels) std::copy(info.label.begin(), info.label.end(), labels);
    if (num_components) *num_components = info.num_components;
    if (largest) *largest = info.largest;
    if (largest_size) *largest_size = info.largest_size;
  });
}

void ppsp_run_options_init(ppsp_run_options* options) {
  if (options == nullptr) return;
  options->algo = "bids";
  options->delta = 1;
  options->threads = 0;
  options->sphere_radius = ppsp::kEarthRadiusKm;
  options->memoize = 1;
}

ppsp_status ppsp_sssp(const ppsp_graph* graph, uint32_t source, double delta,
                      int threads, double* dist, ppsp_counters* counters) {
  return guard([&] {
    require(graph != nullptr && dist != nullptr, "null argument");
    ppsp::SsspResult r =
        ppsp::sssp(graph->graph, source, {{delta, 0}, threads, nullptr});
    std::copy(r.dist.cells().begin(), r.dist.cells().end(), dist);
    if (counters) *counters = to_c(r.counters);
  });
}

ppsp_status ppsp_dijkstra(const ppsp_graph* graph, uint32_t source,
                          double* dist) {
  return guard([&] {
    require(graph != nullptr && dist != nullptr, "null argument");
    auto d = ppsp::dijkstra(graph->graph, source);
    std::copy(d.begin(), d.end(), dist);
  });
}

ppsp_status ppsp_query(const ppsp_graph* graph, uint32_t s, uint32_t t,
                       const ppsp_run_options* options, double* distance,
                       ppsp_counters* counters) {
  return guard([&] {
    require(graph != nullptr && distance != nullptr, "null argument");
    ppsp::RunSpec spec = to_spec(options);
    require(!ppsp::is_batch_algo(spec.algo),
            "ppsp_query takes a single-pair strategy");
    auto r = ppsp::run_workload(graph->graph, {{s, t}}, spec);
    *distance = r.distances[0];
    if (counters) *counters = to_c(r.counters);
  });
}

ppsp_status ppsp_run_pairs(const ppsp_graph* graph, const uint32_t* pairs,
                           uint64_t k, const ppsp_run_options* options,
                           double* distances, ppsp_counters* counters,
                           uint64_t* searches) {
  return guard([&] {
    require(graph != nullptr && (distances != nullptr || k == 0),
            "null argument");
    auto r = ppsp::run_workload(graph->graph, to_pairs(pairs, k),
                                to_spec(options));
    std::copy(r.distances.begin(), r.distances.end(), distances);
    if (counters) *counters = to_c(r.counters);
    if (searches) *searches = r.searches;
  });
}

ppsp_status ppsp_auto_delta(const ppsp_graph* graph, const uint32_t* pairs,
                            uint64_t k, const ppsp_run_options* options,
                            int work_cost, double* delta) {
  return guard([&] {
    require(graph != nullptr && delta != nullptr, "null argument");
    *delta = ppsp::auto_delta_for(graph->graph, to_pairs(pairs, k),
                                  to_spec(options),
                                  work_cost ? ppsp::DeltaCost::kWork
                                            : ppsp::DeltaCost::kWallTime)
                 .delta;
  });
}

ppsp_status ppsp_percentile_target(const ppsp_graph* graph, uint32_t source,
                                   double percentile, uint32_t* target) {
  return guard([&] {
    require(graph != nullptr && target != nullptr, "null argument");
    *target = ppsp::percentile_target(graph->graph, source, percentile);
  });
}

ppsp_status ppsp_generate_queries(const ppsp_graph* graph, double percentile,
                                  uint32_t count, uint64_t seed,
                                  uint32_t* pairs) {
  return guard([&] {
    require(graph != nullptr && (pairs != nullptr || count == 0),
            "null argument");
    from_pairs(ppsp::generate_percentile_queries(graph->graph, percentile,
                                                 count, seed),
               pairs);
  });
}

ppsp_status ppsp_pattern_num_pairs(const char* pattern, uint32_t size,
                                   uint64_t* count) {
  return guard([&] {
    require(pattern != nullptr && count != nullptr, "null argument");
    auto p = ppsp::parse_pattern(pattern);
    require(p.has_value(), "unknown pattern");
    *count = ppsp::pattern_edges(*p, size, 0).size();
  });
}

ppsp_status ppsp_generate_batch(const ppsp_graph* graph, const char* pattern,
                                uint32_t size, uint64_t seed, uint32_t* pairs,
                                uint64_t capacity, uint64_t* count) {
  std::vector<ppsp::QueryPair> out;
  ppsp_status st = guard([&] {
    require(graph != nullptr && pattern != nullptr && count != nullptr,
            "null argument");
    auto p = ppsp::parse_pattern(pattern);
    require(p.has_value(), "unknown pattern");
    out = ppsp::generate_batch(graph->graph, *p, size, seed);
    *count = out.size();
  });
  if (st != PPSP_OK) return st;
  if (out.size() > capacity || (pairs == nullptr && !out.empty())) {
    return fail(PPSP_ERR_BUFFER_TOO_SMALL, "pair buffer too small");
  }
  from_pairs(out, pairs);
  return PPSP_OK;
}

void ppsp_bench_config_init(ppsp_bench_config* config) {
  if (config == nullptr) return;
  std::memset(config, 0, sizeof *config);
  config->algo = "bids";
  config->warmup = 1;
  config->rounds = 5;
  config->seed = 1;
  config->sphere_radius = ppsp::kEarthRadiusKm;
  config->memoize = 1;
  config->size = 6;
  config->count = 1;
}

ppsp_status ppsp_bench_run(const ppsp_graph* graph,
                           const ppsp_bench_config* config,
                           ppsp_bench_report** out) {
  return guard([&] {
    require(graph != nullptr && config != nullptr && out != nullptr,
            "null argument");
    require(config->algo != nullptr, "config.algo is null");
    ppsp::BenchConfig c;
    if (config->graph_path) c.graph_path = config->graph_path;
    if (config->coords_path) c.coords_path = config->coords_path;
    c.algo = config->algo;
    if (config->delta > 0) c.delta = config->delta;
    c.delta_cost = config->delta_cost_work ? ppsp::DeltaCost::kWork
                                           : ppsp::DeltaCost::kWallTime;
    c.warmup = config->warmup;
    c.rounds = config->rounds;
    c.threads = config->threads;
    c.seed = config->seed;
    c.sphere_radius = config->sphere_radius;
    c.memoize = config->memoize != 0;
    c.pairs = to_pairs(config->pairs, config->num_pairs);
    if (config->queries_path) c.queries_path = config->queries_path;
    if (config->pattern && *config->pattern) {
      c.pattern = ppsp::parse_pattern(config->pattern);
      require(c.pattern.has_value(), "unknown pattern");
    }
    c.size = config->size;
    c.percentile = config->percentile;
    c.count = config->count;
    *out = new ppsp_bench_report{ppsp::run_bench(graph->graph, c)};
  });
}

void ppsp_bench_free(ppsp_bench_report* report) { delete report; }

uint64_t ppsp_bench_num_results(const ppsp_bench_report* report) {
  return report ? report->report.pairs.size() : 0;
}

ppsp_status ppsp_bench_result(const ppsp_bench_report* report, uint64_t i,
                              uint32_t* s, uint32_t* t, double* distance) {
  if (report == nullptr || i >= report->report.pairs.size()) {
    return fail(PPSP_ERR_OUT_OF_RANGE, "result index out of range");
  }
  if (s) *s = report->report.pairs[i].first;
  if (t) *t = report->report.pairs[i].second;
  if (distance) *distance = report->report.distances[i];
  return PPSP_OK;
}

uint32_t ppsp_bench_warmup_rounds(const ppsp_bench_report* report) {
  return report ? static_cast<uint32_t>(report->report.warmup_seconds.size())
                : 0;
}

uint32_t ppsp_bench_timed_rounds(const ppsp_bench_report* report) {
  return report ? static_cast<uint32_t>(report->report.round_seconds.size())
                : 0;
}

double ppsp_bench_round_seconds(const ppsp_bench_report* report, uint32_t i) {
  if (report == nullptr || i >= report->report.round_seconds.size()) return -1;
  return report->report.round_seconds[i];
}

double ppsp_bench_mean_seconds(const ppsp_bench_report* report) {
  return report ? report->report.mean_seconds : 0;
}

double ppsp_bench_delta(const ppsp_bench_report* report) {
  return report ? report->report.delta : 0;
}

ppsp_counters ppsp_bench_counters(const ppsp_bench_report* report) {
  return report ? to_c(report->report.counters) : ppsp_counters{};
}

size_t ppsp_bench_format(const ppsp_bench_report* report, int csv, char* buf,
                         size_t capacity) {
  if (report == nullptr) return 0;
  const std::string text = csv ? ppsp::format_csv(report->report)
                               : ppsp::format_report(report->report);
  if (buf != nullptr && capacity > 0) {
    const std::size_t n = std::min(text.size(), capacity - 1);
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return text.size();
}

}  // extern "C"
