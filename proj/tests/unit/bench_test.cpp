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

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "core/bench.hpp"
#include "core/oracle.hpp"
#include "doctest.h"
#include "support/test_graphs.hpp"

namespace ppsp {
namespace {

std::vector<std::map<std::string, std::string>> records(const std::string& text,
                                                        const std::string& kind) {
  std::vector<std::map<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::map<std::string, std::string> rec;
    std::string word;
    while (words >> word) {
      auto eq = word.find('=');
      rec[word.substr(0, eq)] = word.substr(eq + 1);
    }
    if (rec["record"] == kind) out.push_back(rec);
  }
  return out;
}

TEST_CASE("auto_delta doubling search") {
  // Cost minimal at 8: 1, 2, 4, 8, 16, 32 then two misses.
  std::vector<Weight> tried;
  auto r = auto_delta(1 << 20, [&](Weight d) {
    tried.push_back(d);
    return std::abs(std::log2(d / 1024) - 3);
  });
  CHECK(r.delta == 8 * 1024);
  CHECK(tried == std::vector<Weight>{1024, 2048, 4096, 8192, 16384, 32768});

  // Uniform weights of 5: bounded by 4 * max weight.
  std::size_t calls = 0;
  r = auto_delta(5, [&](Weight d) {
    ++calls;
    return 1.0 / d;
  });
  CHECK(calls <= 13);
  CHECK(r.delta == 16);
  CHECK(r.trials.back().delta <= 20);

  auto a = auto_delta_for(testing::random_graph(300, 3, 1),
                          {{0, 5}, {3, 9}, {7, 1}},
                          RunSpec{"bids", 1, 1}, DeltaCost::kWork);
  auto b = auto_delta_for(testing::random_graph(300, 3, 1),
                          {{0, 5}, {3, 9}, {7, 1}},
                          RunSpec{"bids", 1, 1}, DeltaCost::kWork);
  CHECK(a.delta == b.delta);
  CHECK(a.trials.size() == b.trials.size());
  CHECK(a.trials.size() <= 13);
}

TEST_CASE("run_workload for every algorithm") {
  CsrGraph g = testing::g1();
  g.set_coords(CoordKind::kEuclidean, {{0, 0}, {1, 0}, {3, 0}, {4, 0}});
  for (const char* algo : {"sssp", "et", "astar", "bids", "bidastar", "multi",
                           "vc", "plain-bids", "plain-bids-concurrent",
                           "plain-sssp"}) {
    CAPTURE(algo);
    CHECK(is_known_algo(algo));
    auto r = run_workload(g, {{0, 3}, {1, 2}, {2, 2}}, RunSpec{algo, 1, 1});
    CHECK(r.distances == std::vector<Weight>{4, 2, 0});
  }
  CHECK_FALSE(is_known_algo("dijkstra"));
  CHECK_THROWS_AS(run_workload(g, {{0, 3}}, RunSpec{"nope", 1, 1}), Error);
}

TEST_CASE("bench defaults: one warmup, five timed rounds") {
  CsrGraph g = testing::g1();
  BenchConfig c;
  c.algo = "et";
  c.pairs = {{0, 3}};
  c.delta = 1;
  BenchReport r = run_bench(g, c);
  CHECK(r.warmup_seconds.size() == 1);
  CHECK(r.round_seconds.size() == 5);
  CHECK(r.distances == std::vector<Weight>{4});
  CHECK(r.mean_seconds ==
        doctest::Approx(std::accumulate(r.round_seconds.begin(),
                                        r.round_seconds.end(), 0.0) /
                        5));
  const std::string text = format_report(r);
  auto summary = records(text, "summary");
  REQUIRE(summary.size() == 1);
  CHECK(summary[0]["warmup_rounds"] == "1");
  CHECK(summary[0]["timed_rounds"] == "5");
  CHECK(records(text, "round").size() == 6);
  auto result = records(text, "result");
  REQUIRE(result.size() == 1);
  CHECK(result[0]["distance"] == "4");
  auto config = records(text, "config");
  REQUIRE(config.size() == 1);
  for (const char* key : {"graph", "algo", "delta", "warmup", "rounds",
                          "threads", "seed", "queries", "pattern", "size",
                          "percentile", "count", "radius", "memo", "rng"}) {
    CHECK(config[0].count(key) == 1);
  }
  const std::string csv = format_csv(r);
  CHECK(csv.find("et,1,") != std::string::npos);
}

TEST_CASE("bench single round without warmup") {
  BenchConfig c;
  c.algo = "bids";
  c.pairs = {{0, 3}};
  c.delta = 1;
  c.warmup = 0;
  c.rounds = 1;
  BenchReport r = run_bench(testing::g1(), c);
  CHECK(r.warmup_seconds.empty());
  REQUIRE(r.round_seconds.size() == 1);
  CHECK(r.mean_seconds == r.round_seconds[0]);
}

TEST_CASE("bench on a star batch") {
  CsrGraph g = testing::random_graph(3000, 3, 2);
  BenchConfig c;
  c.algo = "multi";
  c.pattern = Pattern::kStar;
  c.size = 6;
  c.seed = 5;
  c.rounds = 2;
  c.delta_cost = DeltaCost::kWork;
  BenchReport r = run_bench(g, c);
  REQUIRE(r.pairs.size() == 5);
  CHECK_FALSE(r.delta_trials.empty());
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    CHECK(r.distances[i] == dijkstra(g, r.pairs[i].first)[r.pairs[i].second]);
  }
  CHECK(records(format_report(r), "delta_trial").size() == r.delta_trials.size());
}

TEST_CASE("bench config validation") {
  BenchConfig c;
  c.pairs = {{0, 1}};
  c.algo = "warp";
  CHECK_THROWS_AS(run_bench(testing::g1(), c), Error);
  c.algo = "bids";
  c.rounds = 0;
  CHECK_THROWS_AS(run_bench(testing::g1(), c), Error);
  c.rounds = 1;
  c.pairs.clear();
  CHECK_THROWS_AS(run_bench(testing::g1(), c), Error);
}

TEST_CASE("weights print exactly") {
  CHECK(format_weight(kInf) == "inf");
  CHECK(format_weight(4) == "4");
  CHECK(std::stod(format_weight(0.1 + 0.2)) == 0.1 + 0.2);
}

}  // namespace
}  // namespace ppsp
