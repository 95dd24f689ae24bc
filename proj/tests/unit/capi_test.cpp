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

// The extern-C surface: status codes, last_error, ownership, buffers.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "ppsp/ppsp.h"

namespace {

// Path 0-1-2-3 with weights 1, and a chord 0-3 of weight 5.
ppsp_graph* small_graph() {
  const ppsp_edge edges[] = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 5}};
  ppsp_graph* g = nullptr;
  REQUIRE(ppsp_graph_create(4, edges, 4, 1, &g) == PPSP_OK);
  return g;
}

std::string temp_path(const char* name) {
  return std::string("/tmp/ppsp_capi_") + name;
}

}  // namespace

TEST_CASE("graph handles report shape") {
  ppsp_graph* g = small_graph();
  CHECK(ppsp_graph_num_vertices(g) == 4);
  CHECK(ppsp_graph_num_arcs(g) == 8);
  CHECK(ppsp_graph_is_symmetric(g) == 1);
  CHECK(ppsp_graph_max_weight(g) == 5);
  CHECK(ppsp_graph_coord_kind(g) == PPSP_COORDS_NONE);
  ppsp_graph_free(g);
  ppsp_graph_free(nullptr);
}

TEST_CASE("errors set status and message") {
  const ppsp_edge bad[] = {{0, 9, 1}};
  ppsp_graph* g = nullptr;
  CHECK(ppsp_graph_create(2, bad, 1, 1, &g) == PPSP_ERR_OUT_OF_RANGE);
  CHECK(g == nullptr);
  CHECK(std::strlen(ppsp_last_error()) > 0);

  const ppsp_edge negative[] = {{0, 1, -1}};
  CHECK(ppsp_graph_create(2, negative, 1, 1, &g) == PPSP_ERR_INVALID_WEIGHT);

  CHECK(ppsp_graph_load("/nonexistent/graph", &g) == PPSP_ERR_IO);
  CHECK(std::string(ppsp_status_string(PPSP_OK)) == "ok");
  CHECK(std::string(ppsp_status_string(static_cast<ppsp_status>(999))) ==
        "unknown status");

  g = small_graph();
  ppsp_run_options o;
  ppsp_run_options_init(&o);
  double d = 0;
  CHECK(ppsp_query(g, 0, 7, &o, &d, nullptr) == PPSP_ERR_OUT_OF_RANGE);
  o.algo = "astar";
  CHECK(ppsp_query(g, 0, 3, &o, &d, nullptr) == PPSP_ERR_MISSING_COORDINATES);
  o.algo = "nope";
  CHECK(ppsp_query(g, 0, 3, &o, &d, nullptr) == PPSP_ERR_INVALID_ARGUMENT);
  o.algo = "bids";
  o.delta = 0;
  CHECK(ppsp_query(g, 0, 3, &o, &d, nullptr) == PPSP_ERR_INVALID_ARGUMENT);
  CHECK(ppsp_query(nullptr, 0, 3, &o, &d, nullptr) ==
        PPSP_ERR_INVALID_ARGUMENT);
  ppsp_graph_free(g);
}

TEST_CASE("queries agree with dijkstra for every algorithm") {
  ppsp_graph* g = small_graph();
  const double xy[] = {0, 0, 1, 0, 2, 0, 3, 0};
  REQUIRE(ppsp_graph_set_coords(g, PPSP_COORDS_EUCLIDEAN, xy, 4) == PPSP_OK);
  std::vector<double> ref(4);
  REQUIRE(ppsp_dijkstra(g, 0, ref.data()) == PPSP_OK);
  CHECK((ref == std::vector<double>{0, 1, 2, 3}));

  std::vector<double> sssp(4);
  ppsp_counters c{};
  REQUIRE(ppsp_sssp(g, 0, 1, 2, sssp.data(), &c) == PPSP_OK);
  CHECK(sssp == ref);
  CHECK(c.steps > 0);

  for (const char* algo : {"sssp", "et", "astar", "bids", "bidastar"}) {
    ppsp_run_options o;
    ppsp_run_options_init(&o);
    o.algo = algo;
    o.delta = 1;
    double d = -1;
    REQUIRE(ppsp_query(g, 0, 3, &o, &d, nullptr) == PPSP_OK);
    CHECK_MESSAGE(d == 3, algo);
  }

  const uint32_t pairs[] = {0, 3, 1, 3, 0, 2};
  for (const char* algo : {"bids", "multi", "vc", "plain-bids",
                           "plain-bids-concurrent", "plain-sssp"}) {
    ppsp_run_options o;
    ppsp_run_options_init(&o);
    o.algo = algo;
    std::vector<double> d(3, -1);
    uint64_t searches = 0;
    REQUIRE(ppsp_run_pairs(g, pairs, 3, &o, d.data(), nullptr, &searches) ==
            PPSP_OK);
    CHECK_MESSAGE((d == std::vector<double>{3, 2, 2}), algo);
    CHECK(searches > 0);
  }
  ppsp_graph_free(g);
}

TEST_CASE("save and load round trip") {
  ppsp_graph* g = small_graph();
  const std::string text = temp_path("g.txt");
  const std::string bin = temp_path("g.bin");
  REQUIRE(ppsp_graph_save_text(g, text.c_str()) == PPSP_OK);
  REQUIRE(ppsp_graph_save_binary(g, bin.c_str()) == PPSP_OK);
  for (const std::string& path : {text, bin}) {
    ppsp_graph* h = nullptr;
    REQUIRE(ppsp_graph_load(path.c_str(), &h) == PPSP_OK);
    CHECK(ppsp_graph_num_arcs(h) == 8);
    std::vector<double> d(4);
    REQUIRE(ppsp_dijkstra(h, 3, d.data()) == PPSP_OK);
    CHECK((d == std::vector<double>{3, 2, 1, 0}));
    ppsp_graph_free(h);
  }
  std::remove(text.c_str());
  std::remove(bin.c_str());
  ppsp_graph_free(g);
}

TEST_CASE("weights and components") {
  const ppsp_edge edges[] = {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}};
  ppsp_graph* g = nullptr;
  REQUIRE(ppsp_graph_create(6, edges, 3, 1, &g) == PPSP_OK);
  uint32_t labels[6];
  uint32_t num = 0;
  uint32_t largest = 0;
  uint64_t size = 0;
  REQUIRE(ppsp_graph_components(g, labels, &num, &largest, &size) == PPSP_OK);
  CHECK(num == 3);
  CHECK(size == 3);
  CHECK(labels[0] == labels[2]);
  CHECK(labels[0] != labels[3]);
  CHECK(labels[5] != labels[3]);

  ppsp_graph* w1 = nullptr;
  ppsp_graph* w2 = nullptr;
  REQUIRE(ppsp_graph_uniform_weights(g, 7, 1, 100, 0, &w1) == PPSP_OK);
  REQUIRE(ppsp_graph_uniform_weights(g, 7, 1, 100, 0, &w2) == PPSP_OK);
  std::vector<double> a(6);
  std::vector<double> b(6);
  REQUIRE(ppsp_dijkstra(w1, 0, a.data()) == PPSP_OK);
  REQUIRE(ppsp_dijkstra(w2, 0, b.data()) == PPSP_OK);
  CHECK(a == b);
  CHECK(a[2] == std::floor(a[2]));
  CHECK(std::isinf(a[5]));
  CHECK(std::string(ppsp_random_algorithm()) == "splitmix64-v1");
  ppsp_graph_free(w1);
  ppsp_graph_free(w2);
  ppsp_graph_free(g);
}

TEST_CASE("workload generators") {
  ppsp_graph* g = small_graph();
  uint32_t t = 99;
  REQUIRE(ppsp_percentile_target(g, 0, 100, &t) == PPSP_OK);
  CHECK(t == 3);
  CHECK(ppsp_percentile_target(g, 0, 0, &t) == PPSP_ERR_INVALID_ARGUMENT);

  uint32_t pairs[8];
  REQUIRE(ppsp_generate_queries(g, 100, 4, 3, pairs) == PPSP_OK);
  for (int i = 0; i < 4; ++i) CHECK(pairs[2 * i] != pairs[2 * i + 1]);

  uint64_t k = 0;
  REQUIRE(ppsp_pattern_num_pairs("clique", 4, &k) == PPSP_OK);
  CHECK(k == 6);
  CHECK(ppsp_pattern_num_pairs("bogus", 4, &k) == PPSP_ERR_INVALID_ARGUMENT);
  std::vector<uint32_t> buf(2 * 6);
  CHECK(ppsp_generate_batch(g, "clique", 4, 1, buf.data(), 2, &k) ==
        PPSP_ERR_BUFFER_TOO_SMALL);
  CHECK(k == 6);
  REQUIRE(ppsp_generate_batch(g, "clique", 4, 1, buf.data(), 6, &k) ==
          PPSP_OK);
  ppsp_graph_free(g);
}

TEST_CASE("bench report") {
  ppsp_graph* g = small_graph();
  ppsp_bench_config cfg;
  ppsp_bench_config_init(&cfg);
  CHECK(cfg.warmup == 1);
  CHECK(cfg.rounds == 5);
  const uint32_t pairs[] = {0, 3, 1, 2};
  cfg.pairs = pairs;
  cfg.num_pairs = 2;
  cfg.delta = 1;
  ppsp_bench_report* r = nullptr;
  REQUIRE(ppsp_bench_run(g, &cfg, &r) == PPSP_OK);
  CHECK(ppsp_bench_warmup_rounds(r) == 1);
  CHECK(ppsp_bench_timed_rounds(r) == 5);
  CHECK(ppsp_bench_num_results(r) == 2);
  CHECK(ppsp_bench_delta(r) == 1);
  double mean = 0;
  for (uint32_t i = 0; i < 5; ++i) mean += ppsp_bench_round_seconds(r, i);
  CHECK(ppsp_bench_mean_seconds(r) == doctest::Approx(mean / 5));
  uint32_t s = 0;
  uint32_t t = 0;
  double d = 0;
  REQUIRE(ppsp_bench_result(r, 1, &s, &t, &d) == PPSP_OK);
  CHECK(s == 1);
  CHECK(t == 2);
  CHECK(d == 1);
  CHECK(ppsp_bench_result(r, 2, &s, &t, &d) == PPSP_ERR_OUT_OF_RANGE);

  const size_t len = ppsp_bench_format(r, 0, nullptr, 0);
  std::string text(len, '\0');
  CHECK(ppsp_bench_format(r, 0, text.data(), len + 1) == len);
  CHECK(text.find("record=summary") != std::string::npos);
  char tiny[8];
  ppsp_bench_format(r, 1, tiny, sizeof tiny);
  CHECK(std::strlen(tiny) == 7);
  ppsp_bench_free(r);

  cfg.rounds = 0;
  CHECK(ppsp_bench_run(g, &cfg, &r) == PPSP_ERR_INVALID_ARGUMENT);
  ppsp_graph_free(g);
}
