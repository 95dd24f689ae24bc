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

// Acceptance checks. Prints one "criterion N: PASS|FAIL ..." line each and
// exits nonzero if any fails.
//
// usage: acceptance <ppsp cli> <g1 text graph> [criterion...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/batch.hpp"
#include "core/oracle.hpp"
#include "core/ppsp.hpp"
#include "core/workload.hpp"
#include "support/test_graphs.hpp"

namespace {

using namespace ppsp;
using testing::close_rel;

struct Outcome {
  bool pass = true;
  std::string detail;
  // Records the first failure only.
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Weight query(const CsrGraph& g, VertexId s, VertexId t, Strategy st,
             Weight delta, int threads, Counters* counters = nullptr) {
  PpspOptions o;
  o.strategy = st;
  o.policy.delta = delta;
  o.threads = threads;
  PpspAnswer a = ppsp::ppsp(g, s, t, o);
  if (counters) *counters = a.counters;
  return a.distance;
}

std::uint64_t median(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

// Heap Dijkstra, cross-checked against Bellman-Ford on small graphs.
std::vector<Weight> oracle_dijkstra_checked(const CsrGraph& g, VertexId s) {
  std::vector<Weight> d = dijkstra(g, s);
  if (g.num_vertices() <= 200 && d != testing::bellman_ford(g, s)) {
    std::fprintf(stderr, "oracle disagrees with Bellman-Ford from %u\n", s);
    std::abort();
  }
  return d;
}

struct RandomWorkload {
  CsrGraph graph;
  std::vector<std::pair<VertexId, VertexId>> pairs;
};

// 50 graphs, n in [2, 200], edge factor in [1, 8], weights in [1, 2^18].
std::vector<RandomWorkload> random_workloads() {
  std::vector<RandomWorkload> out;
  SplitMix64 rng(2026, 0xacc1);
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto n = static_cast<std::uint32_t>(2 + rng.next_below(199));
    const double ef = 1 + 7 * rng.next_unit();
    CsrGraph g = testing::random_graph(n, ef, 100 + i);
    auto pairs = testing::same_component_pairs(g, 20, 200 + i);
    out.push_back({std::move(g), std::move(pairs)});
  }
  return out;
}

struct GeometricWorkload {
  CsrGraph graph;
  std::vector<std::pair<VertexId, VertexId>> pairs;
};

const GeometricWorkload& geometric_workload() {
  static const GeometricWorkload w = [] {
    CsrGraph g = testing::geometric_knn(10000, 5, 7);
    auto pairs = testing::same_component_pairs(g, 100, 8);
    return GeometricWorkload{std::move(g), std::move(pairs)};
  }();
  return w;
}

Outcome criterion1() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::size_t graphs = 0;
  const Weight deltas[] = {1, 1 << 9, 1 << 18};
  for (const RandomWorkload& w : random_workloads()) {
    if (w.pairs.size() < 20) {
      out.fail("graph " + std::to_string(graphs) + " has fewer than 20 pairs");
    }
    const Weight delta = deltas[graphs % 3];
    std::map<VertexId, std::vector<Weight>> ref;
    for (auto [s, t] : w.pairs) {
      auto it = ref.find(s);
      if (it == ref.end()) {
        it = ref.emplace(s, oracle_dijkstra_checked(w.graph, s)).first;
      }
      const Weight expect = it->second[t];
      for (Strategy st : {Strategy::kEarlyTermination, Strategy::kBidirectional}) {
        const Weight got = query(w.graph, s, t, st, delta, 1);
        ++checked;
        if (got != expect) {
          out.fail(std::string(to_string(st)) + " (" + std::to_string(s) + "," +
                   std::to_string(t) + ") got " + str(got) + " expected " +
                   str(expect));
        }
      }
    }
    ++graphs;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (secs >= 60) out.fail("took " + str(secs) + " s");
  if (out.pass) {
    out.detail = std::to_string(checked) + " queries on " +
                 std::to_string(graphs) + " graphs exact in " + str(secs) + " s";
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  const GeometricWorkload& w = geometric_workload();
  const CsrGraph& g = w.graph;
  if (w.pairs.size() < 100) out.fail("fewer than 100 pairs");
  Weight worst_reduced = kInf;
  Weight worst_rel = 0;
  for (auto [s, t] : w.pairs) {
    const Weight expect = dijkstra(g, s)[t];
    for (Strategy st : {Strategy::kAStar, Strategy::kBidirectionalAStar}) {
      const Weight got = query(g, s, t, st, 1, 0);
      if (!close_rel(got, expect)) {
        out.fail(std::string(to_string(st)) + " (" + std::to_string(s) + "," +
                 std::to_string(t) + ") got " + str(got) + " expected " +
                 str(expect));
      }
      worst_rel = std::max(worst_rel, std::abs(got - expect) / expect);
    }
    AveragedHeuristics avg = make_bidirectional_heuristics(
        Heuristic::euclidean(g, s), Heuristic::euclidean(g, t));
    const Heuristic to_t = Heuristic::euclidean(g, t);
    worst_reduced = std::min(
        {worst_reduced, min_reduced_weight(g, to_t),
         min_reduced_weight(g, [&](VertexId v) { return avg.forward(v); }),
         min_reduced_weight(g, [&](VertexId v) { return avg.backward(v); })});
  }
  if (worst_reduced < -1e-9) {
    out.fail("inconsistent heuristic: reduced weight " + str(worst_reduced));
  }
  if (out.pass) {
    out.detail = std::to_string(w.pairs.size()) +
                 " pairs x {astar, bidastar}; max rel error " +
                 str(worst_rel) + "; min reduced weight " + str(worst_reduced);
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  Weight worst = 0;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CsrGraph g = testing::geometric_knn(500, 5, 300 + seed);
    for (auto [s, t] : testing::same_component_pairs(g, 10, 400 + seed)) {
      AveragedHeuristics avg = make_bidirectional_heuristics(
          Heuristic::euclidean(g, s), Heuristic::euclidean(g, t));
      std::vector<Weight> w(g.num_arcs());
      for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (auto a = g.arc_begin(u); a < g.arc_end(u); ++a) {
          const Weight reduced =
              g.arc_weight(a) - avg.forward(u) + avg.forward(g.arc_target(a));
          if (reduced < -1e-9) out.fail("negative induced weight");
          w[a] = std::max(0.0, reduced);
        }
      }
      CsrGraph induced(
          std::vector<std::uint64_t>(g.offsets().begin(), g.offsets().end()),
          std::vector<VertexId>(g.targets().begin(), g.targets().end()),
          std::move(w));
      const Weight on_g = query(g, s, t, Strategy::kBidirectionalAStar, 1, 0);
      const Weight on_induced =
          query(induced, s, t, Strategy::kBidirectional, 1, 0);
      const Weight shifted = on_g - avg.forward(s) + avg.forward(t);
      ++checked;
      if (!close_rel(shifted, on_induced)) {
        out.fail("(" + std::to_string(s) + "," + std::to_string(t) + ") " +
                 str(shifted) + " vs " + str(on_induced));
      }
      worst = std::max(worst, std::abs(shifted - on_induced) /
                                  std::max(std::abs(on_induced), 1e-300));
    }
  }
  if (out.pass) {
    out.detail = std::to_string(checked) + " pairs on 10 graphs; max rel gap " +
                 str(worst);
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  const BatchAlgo algos[] = {BatchAlgo::kMultiBids, BatchAlgo::kVertexCover,
                             BatchAlgo::kPlainBids,
                             BatchAlgo::kPlainBidsConcurrent,
                             BatchAlgo::kPlainSssp};
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CsrGraph g = testing::random_graph(10000, 2 + seed, 500 + seed);
    for (Pattern p : kAllPatterns) {
      std::vector<QueryPair> pairs = generate_batch(g, p, 6, 600 + seed);
      std::map<VertexId, std::vector<Weight>> ref;
      for (auto [s, t] : pairs) {
        if (!ref.count(s)) ref.emplace(s, dijkstra(g, s));
      }
      QueryGraph qg = build_query_graph(pairs, g.num_vertices());
      for (BatchAlgo a : algos) {
        BatchOptions o;
        o.policy.delta = 1 << 14;
        BatchAnswer ans = run_batch(g, qg, a, o);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          const Weight expect = ref[pairs[i].first][pairs[i].second];
          ++checked;
          if (ans.distances[i] != expect) {
            out.fail(std::string(to_string(a)) + " " +
                     std::string(to_string(p)) + " pair " + std::to_string(i) +
                     " got " + str(ans.distances[i]) + " expected " +
                     str(expect));
          }
        }
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(checked) +
                 " answered pairs (7 patterns x 5 graphs x 5 algorithms) exact";
  }
  return out;
}

// Brute force: smallest subset (bitmask) touching every edge.
std::uint32_t brute_force_cover_size(std::uint32_t v,
                                     const std::vector<std::pair<int, int>>& e) {
  std::uint32_t best = v;
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    bool ok = true;
    for (auto [a, b] : e) ok &= ((mask >> a) & 1u) || ((mask >> b) & 1u);
    if (ok) best = std::min<std::uint32_t>(best, std::popcount(mask));
  }
  return best;
}

Outcome criterion5() {
  Outcome out;
  SplitMix64 rng(55, 0xc5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = static_cast<std::uint32_t>(2 + rng.next_below(11));
    std::vector<QueryPair> pairs;
    const double density = rng.next_unit();
    for (std::uint32_t i = 0; i < v; ++i) {
      for (std::uint32_t j = i + 1; j < v; ++j) {
        if (rng.next_unit() < density) pairs.emplace_back(i, j);
      }
    }
    // Keep every vertex present so |Vq| = v.
    for (std::uint32_t i = 0; i < v; ++i) pairs.emplace_back(i, i);
    QueryGraph qg = build_query_graph(pairs, v);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : qg.eq) edges.emplace_back(a, b);
    const std::uint32_t best = brute_force_cover_size(qg.num_vertices(), edges);
    const auto exact = exact_vertex_cover(qg);
    const auto greedy = greedy_vertex_cover(qg);
    std::set<std::uint32_t> gs(greedy.begin(), greedy.end());
    std::set<std::uint32_t> es(exact.begin(), exact.end());
    for (auto [a, b] : edges) {
      if (!gs.count(a) && !gs.count(b)) out.fail("greedy misses an edge");
      if (!es.count(a) && !es.count(b)) out.fail("exact misses an edge");
    }
    if (exact.size() != best) {
      out.fail("trial " + std::to_string(trial) + ": exact " +
               std::to_string(exact.size()) + " vs brute force " +
               std::to_string(best));
    }
  }
  if (out.pass) out.detail = "100 query graphs, |Vq| in [2, 12]";
  return out;
}

Outcome criterion6() {
  Outcome out;
  CsrGraph g = testing::grid_graph(512, 512, 1);
  SplitMix64 rng(66, 0x6);
  std::vector<std::uint64_t> et;
  std::vector<std::uint64_t> bids;
  std::vector<std::uint64_t> full;
  for (int i = 0; i < 20; ++i) {
    const auto s = static_cast<VertexId>(rng.next_below(g.num_vertices()));
    const std::vector<Weight> d = dijkstra(g, s);
    const VertexId t = percentile_target(d, s, 1);
    Counters c;
    const Weight a = query(g, s, t, Strategy::kEarlyTermination, 1, 0, &c);
    et.push_back(c.settled_copies);
    const Weight b = query(g, s, t, Strategy::kBidirectional, 1, 0, &c);
    bids.push_back(c.settled_copies);
    if (a != d[t] || b != d[t]) out.fail("wrong distance");
    SsspOptions o;
    o.policy.delta = 1;
    full.push_back(sssp(g, s, o).counters.settled_copies);
  }
  const std::uint64_t m_et = median(et);
  const std::uint64_t m_bids = median(bids);
  const std::uint64_t m_full = median(full);
  if (!(m_bids <= 0.75 * m_et)) out.fail("bids median above 0.75 x et");
  if (!(m_et <= m_full)) out.fail("et median above sssp");
  const std::string detail = "median settled copies bids=" +
                             std::to_string(m_bids) + " et=" +
                             std::to_string(m_et) + " sssp=" +
                             std::to_string(m_full);
  out.detail = out.pass ? detail : out.detail + "; " + detail;
  return out;
}

Outcome criterion7() {
  Outcome out;
  const GeometricWorkload& w = geometric_workload();
  const CsrGraph& g = w.graph;
  std::uint64_t total_memo = 0;
  std::uint64_t total_plain = 0;
  for (auto [s, t] : w.pairs) {
    PpspOptions o;
    o.strategy = Strategy::kAStar;
    o.threads = 1;
    o.policy.delta = 1;
    std::uint64_t touched = 0;
    o.on_step_end = [&](const PpspState& state) {
      touched = 0;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        touched += state.dist.get(v, 0) < kInf;
      }
    };
    const PpspAnswer memo = ppsp::ppsp(g, s, t, o);
    o.memoize = false;
    o.on_step_end = nullptr;
    const PpspAnswer plain = ppsp::ppsp(g, s, t, o);
    if (memo.counters.heuristic_evals > touched) {
      out.fail("(" + std::to_string(s) + "," + std::to_string(t) + ") " +
               std::to_string(memo.counters.heuristic_evals) +
               " computations for " + std::to_string(touched) +
               " touched vertices");
    }
    if (memo.counters.heuristic_evals > plain.counters.heuristic_evals) {
      out.fail("memoized run computed more than the plain run");
    }
    if (memo.distance != plain.distance) out.fail("memo changed the distance");
    total_memo += memo.counters.heuristic_evals;
    total_plain += plain.counters.heuristic_evals;
  }
  if (out.pass) {
    out.detail = "heuristic computations memo=" + std::to_string(total_memo) +
                 " plain=" + std::to_string(total_plain);
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  const int threads[] = {1, 4, 8};
  const Weight deltas[] = {1, 1 << 10, 1 << 18};
  std::size_t checked = 0;
  auto sweep = [&](const CsrGraph& g, VertexId s, VertexId t, Strategy st) {
    const Weight first = query(g, s, t, st, deltas[0], threads[0]);
    for (int th : threads) {
      for (Weight delta : deltas) {
        const Weight got = query(g, s, t, st, delta, th);
        ++checked;
        if (std::memcmp(&got, &first, sizeof got) != 0) {
          out.fail(std::string(to_string(st)) + " (" + std::to_string(s) +
                   "," + std::to_string(t) + ") threads=" +
                   std::to_string(th) + " delta=" + str(delta) + ": " +
                   str(got) + " vs " + str(first));
        }
      }
    }
  };
  for (const RandomWorkload& w : random_workloads()) {
    for (auto [s, t] : w.pairs) {
      sweep(w.graph, s, t, Strategy::kEarlyTermination);
      sweep(w.graph, s, t, Strategy::kBidirectional);
    }
  }
  const GeometricWorkload& geo = geometric_workload();
  for (auto [s, t] : geo.pairs) {
    sweep(geo.graph, s, t, Strategy::kAStar);
    sweep(geo.graph, s, t, Strategy::kBidirectionalAStar);
  }
  if (out.pass) {
    out.detail = std::to_string(checked) +
                 " runs bit-identical across threads {1,4,8} x deltas "
                 "{1,2^10,2^18}";
  }
  return out;
}

Outcome criterion9() {
  Outcome out;
  CsrGraph g = testing::two_components(100, 10000, 9);
  const VertexId targets[] = {100, 5000, 10099};
  for (VertexId s : {VertexId{0}, VertexId{50}, VertexId{99}}) {
    SsspOptions so;
    so.policy.delta = 1;
    const std::uint64_t exhaust = sssp(g, s, so).counters.steps;
    for (VertexId t : targets) {
      PpspOptions o;
      o.strategy = Strategy::kBidirectional;
      o.policy.delta = 1;
      const PpspAnswer a = ppsp::ppsp(g, s, t, o);
      if (a.distance != kInf) out.fail("finite distance " + str(a.distance));
      if (!a.early_out) out.fail("early-out did not fire");
      if (a.counters.steps > exhaust + 1) {
        out.fail("s=" + std::to_string(s) + " t=" + std::to_string(t) + ": " +
                 std::to_string(a.counters.steps) + " steps, small side takes " +
                 std::to_string(exhaust));
      }
      if (out.pass) {
        out.detail = "last: " + std::to_string(a.counters.steps) +
                     " steps vs exhaust " + std::to_string(exhaust) + " + 1";
      }
    }
  }
  return out;
}

// Runs `bench` through the CLI with default rounds.
Outcome criterion10(const std::string& cli, const std::string& g1) {
  Outcome out;
  const std::string cmd = "'" + cli + "' bench '" + g1 +
                          "' --algo et --source 0 --target 3 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    out.fail("cannot run " + cli);
    return out;
  }
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  if (status != 0) {
    out.fail("bench exited with " + std::to_string(status) + ": " + text);
    return out;
  }
  auto field = [](const std::string& line, const std::string& key) {
    const std::string tag = " " + key + "=";
    const auto pos = line.find(tag);
    if (pos == std::string::npos) return std::string();
    const auto begin = pos + tag.size();
    return line.substr(begin, line.find(' ', begin) - begin);
  };
  int warmup_records = 0;
  std::vector<double> timed;
  std::string summary;
  std::string result;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("record=round", 0) == 0) {
      const std::string kind = field(line, "kind");
      if (kind == "warmup") ++warmup_records;
      if (kind == "timed") timed.push_back(std::stod(field(line, "seconds")));
    } else if (line.rfind("record=summary", 0) == 0) {
      summary = line;
    } else if (line.rfind("record=result", 0) == 0) {
      result = line;
    }
  }
  if (summary.empty()) {
    out.fail("no summary record");
    return out;
  }
  if (field(summary, "warmup_rounds") != "1" || warmup_records != 1) {
    out.fail("warmup rounds != 1");
  }
  if (field(summary, "timed_rounds") != "5" || timed.size() != 5) {
    out.fail("timed rounds != 5");
  }
  const double mean = std::stod(field(summary, "mean_seconds"));
  const double expect =
      std::accumulate(timed.begin(), timed.end(), 0.0) / timed.size();
  // Values are printed with 9 significant digits.
  if (std::abs(mean - expect) > 1e-8 * std::max(mean, expect) + 1e-15) {
    out.fail("mean " + str(mean) + " is not the mean of the rounds " +
             str(expect));
  }
  if (field(result, "distance") != "4") out.fail("G1 distance is not 4");
  if (out.pass) {
    out.detail = "1 warmup + 5 timed rounds, mean_seconds=" + str(mean);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <ppsp cli> <g1 graph> [criterion...]\n",
                 argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::string g1 = argv[2];
  std::set<int> only;
  for (int i = 3; i < argc; ++i) only.insert(std::atoi(argv[i]));

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
      {9, criterion9},
      {10, [&] { return criterion10(cli, g1); }},
  };
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    failures += !o.pass;
    std::printf("criterion %d: %s (%.2f s) %s\n", id, o.pass ? "PASS" : "FAIL",
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
