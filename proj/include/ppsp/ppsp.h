/*
 * Copyright 2026 The ppsp Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the ppsp shortest-path library.
 *
 * Every fallible call returns a ppsp_status; on failure a message for the
 * calling thread is available from ppsp_last_error(). Objects are opaque
 * handles released with their *_free function. Output arrays are supplied by
 * the caller and sized as documented per call.
 *
 * Distances are doubles; unreachable pairs report +infinity.
 */

#ifndef PPSP_PPSP_H_
#define PPSP_PPSP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PPSP_API __declspec(dllexport)
#else
#define PPSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppsp_status {
  PPSP_OK = 0,
  PPSP_ERR_INVALID_ARGUMENT = 1,
  PPSP_ERR_OUT_OF_RANGE = 2,
  PPSP_ERR_INVALID_WEIGHT = 3,
  PPSP_ERR_IO = 4,
  PPSP_ERR_FORMAT = 5,
  PPSP_ERR_MISSING_COORDINATES = 6,
  PPSP_ERR_BATCH_TOO_LARGE = 7,  /* split the batch and retry */
  PPSP_ERR_COVER_TOO_LARGE = 8,
  PPSP_ERR_ISOLATED_SOURCE = 9,
  PPSP_ERR_INTERNAL = 10,
  PPSP_ERR_NO_MEMORY = 11,
  PPSP_ERR_BUFFER_TOO_SMALL = 12
} ppsp_status;

typedef enum ppsp_coord_kind {
  PPSP_COORDS_NONE = 0,
  PPSP_COORDS_EUCLIDEAN = 1,
  PPSP_COORDS_SPHERICAL = 2 /* latitude, longitude in degrees */
} ppsp_coord_kind;

typedef struct ppsp_graph ppsp_graph;
typedef struct ppsp_bench_report ppsp_bench_report;

typedef struct ppsp_edge {
  uint32_t u;
  uint32_t v;
  double w;
} ppsp_edge;

typedef struct ppsp_counters {
  uint64_t relaxations;
  uint64_t settled_copies;
  uint64_t pruned_copies;
  uint64_t arcs_scanned;
  uint64_t steps;
  uint64_t heuristic_evals;
} ppsp_counters;

PPSP_API const char* ppsp_version(void);
PPSP_API const char* ppsp_status_string(ppsp_status status);
/* Message of the last failure on this thread ("" if none). */
PPSP_API const char* ppsp_last_error(void);
/* Name of the seeded random stream algorithm ("splitmix64-v1"). */
PPSP_API const char* ppsp_random_algorithm(void);

/* ---- graphs ---- */

PPSP_API ppsp_status ppsp_graph_create(uint64_t n, const ppsp_edge* edges,
                                       uint64_t num_edges, int symmetrize,
                                       ppsp_graph** out);
/* Text edge list or binary CSR, chosen by the file's magic bytes. */
PPSP_API ppsp_status ppsp_graph_load(const char* path, ppsp_graph** out);
PPSP_API ppsp_status ppsp_graph_save_text(const ppsp_graph* graph,
                                          const char* path);
PPSP_API ppsp_status ppsp_graph_save_binary(const ppsp_graph* graph,
                                            const char* path);
PPSP_API void ppsp_graph_free(ppsp_graph* graph);

PPSP_API uint64_t ppsp_graph_num_vertices(const ppsp_graph* graph);
PPSP_API uint64_t ppsp_graph_num_arcs(const ppsp_graph* graph);
PPSP_API int ppsp_graph_is_symmetric(const ppsp_graph* graph);
PPSP_API double ppsp_graph_max_weight(const ppsp_graph* graph);
PPSP_API ppsp_coord_kind ppsp_graph_coord_kind(const ppsp_graph* graph);

/* xy holds 2*n doubles (x, y) or (lat, lon). */
PPSP_API ppsp_status ppsp_graph_set_coords(ppsp_graph* graph,
                                           ppsp_coord_kind kind,
                                           const double* xy, uint64_t n);
PPSP_API ppsp_status ppsp_graph_load_coords(ppsp_graph* graph,
                                            const char* path);

/* New graph with one uniform weight per undirected edge in [lo, hi]:
 * integers unless `real` is nonzero. */
PPSP_API ppsp_status ppsp_graph_uniform_weights(const ppsp_graph* graph,
                                                uint64_t seed, double lo,
                                                double hi, int real,
                                                ppsp_graph** out);

/* labels (nullable) receives n component ids. */
PPSP_API ppsp_status ppsp_graph_components(const ppsp_graph* graph,
                                           uint32_t* labels,
                                           uint32_t* num_components,
                                           uint32_t* largest,
                                           uint64_t* largest_size);

/* ---- searches ---- */

typedef struct ppsp_run_options {
  /* sssp, et, astar, bids, bidastar, or (ppsp_run_pairs only) multi, vc,
   * plain-bids, plain-bids-concurrent, plain-sssp. */
  const char* algo;
  double delta;          /* > 0; INFINITY allowed */
  int threads;           /* 0: PPSP_NUM_THREADS or the OpenMP default */
  double sphere_radius;  /* spherical heuristics, edge-weight units */
  int memoize;           /* heuristic memoization */
} ppsp_run_options;

PPSP_API void ppsp_run_options_init(ppsp_run_options* options);

/* dist receives n doubles. counters is nullable. */
PPSP_API ppsp_status ppsp_sssp(const ppsp_graph* graph, uint32_t source,
                               double delta, int threads, double* dist,
                               ppsp_counters* counters);
PPSP_API ppsp_status ppsp_dijkstra(const ppsp_graph* graph, uint32_t source,
                                   double* dist);

PPSP_API ppsp_status ppsp_query(const ppsp_graph* graph, uint32_t s,
                                uint32_t t, const ppsp_run_options* options,
                                double* distance, ppsp_counters* counters);

/* pairs holds 2*k vertex ids (s0, t0, s1, t1, ...); distances receives k
 * doubles. Batch algorithms answer the pairs as one batch. counters and
 * searches are nullable. */
PPSP_API ppsp_status ppsp_run_pairs(const ppsp_graph* graph,
                                    const uint32_t* pairs, uint64_t k,
                                    const ppsp_run_options* options,
                                    double* distances,
                                    ppsp_counters* counters,
                                    uint64_t* searches);

/* Doubling search for delta over the pairs; work_cost selects the
 * deterministic work proxy instead of wall time. */
PPSP_API ppsp_status ppsp_auto_delta(const ppsp_graph* graph,
                                     const uint32_t* pairs, uint64_t k,
                                     const ppsp_run_options* options,
                                     int work_cost, double* delta);

/* ---- workloads ---- */

PPSP_API ppsp_status ppsp_percentile_target(const ppsp_graph* graph,
                                            uint32_t source,
                                            double percentile,
                                            uint32_t* target);
/* pairs receives 2*count ids. */
PPSP_API ppsp_status ppsp_generate_queries(const ppsp_graph* graph,
                                           double percentile, uint32_t count,
                                           uint64_t seed, uint32_t* pairs);
/* Number of pairs a pattern (star, chain, clique, bipartite, fork, random,
 * separate) yields over `size` vertices. */
PPSP_API ppsp_status ppsp_pattern_num_pairs(const char* pattern,
                                            uint32_t size, uint64_t* count);
/* pairs receives 2*capacity ids; *count is set to the pattern's pair count
 * (PPSP_ERR_BUFFER_TOO_SMALL when it exceeds capacity). */
PPSP_API ppsp_status ppsp_generate_batch(const ppsp_graph* graph,
                                         const char* pattern, uint32_t size,
                                         uint64_t seed, uint32_t* pairs,
                                         uint64_t capacity, uint64_t* count);

/* ---- benchmark harness ---- */

typedef struct ppsp_bench_config {
  const char* graph_path;   /* echoed in the report */
  const char* coords_path;  /* echoed in the report */
  const char* algo;
  double delta;             /* <= 0: auto */
  int delta_cost_work;      /* auto delta uses the work proxy */
  int warmup;               /* default 1 */
  int rounds;               /* default 5 */
  int threads;
  uint64_t seed;
  double sphere_radius;
  int memoize;
  /* Query source, first match wins. */
  const uint32_t* pairs;
  uint64_t num_pairs;
  const char* queries_path;
  const char* pattern;
  uint32_t size;
  double percentile;
  uint32_t count;
} ppsp_bench_config;

PPSP_API void ppsp_bench_config_init(ppsp_bench_config* config);
PPSP_API ppsp_status ppsp_bench_run(const ppsp_graph* graph,
                                    const ppsp_bench_config* config,
                                    ppsp_bench_report** out);
PPSP_API void ppsp_bench_free(ppsp_bench_report* report);

PPSP_API uint64_t ppsp_bench_num_results(const ppsp_bench_report* report);
PPSP_API ppsp_status ppsp_bench_result(const ppsp_bench_report* report,
                                       uint64_t i, uint32_t* s, uint32_t* t,
                                       double* distance);
PPSP_API uint32_t ppsp_bench_warmup_rounds(const ppsp_bench_report* report);
PPSP_API uint32_t ppsp_bench_timed_rounds(const ppsp_bench_report* report);
PPSP_API double ppsp_bench_round_seconds(const ppsp_bench_report* report,
                                         uint32_t i);
PPSP_API double ppsp_bench_mean_seconds(const ppsp_bench_report* report);
PPSP_API double ppsp_bench_delta(const ppsp_bench_report* report);
PPSP_API ppsp_counters ppsp_bench_counters(const ppsp_bench_report* report);

/* Writes the key=value report (csv = 0) or CSV rows into buf, snprintf
 * style: returns the full length excluding the terminator. */
PPSP_API size_t ppsp_bench_format(const ppsp_bench_report* report, int csv,
                                  char* buf, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* PPSP_PPSP_H_ */
