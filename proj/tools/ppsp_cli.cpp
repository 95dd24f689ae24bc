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

// ppsp: command-line front end over the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppsp/ppsp.h"

namespace {

struct Failure {
  ppsp_status status;
};

void check(ppsp_status st) {
  if (st != PPSP_OK) {
    std::cerr << "error: " << ppsp_status_string(st) << ": "
              << ppsp_last_error() << '\n';
    throw Failure{st};
  }
}

void usage_error(const std::string& what) {
  std::cerr << "error: " << what << '\n';
  throw Failure{PPSP_ERR_INVALID_ARGUMENT};
}

using GraphPtr = std::unique_ptr<ppsp_graph, decltype(&ppsp_graph_free)>;

GraphPtr load(const std::string& path, const std::string& coords = "") {
  ppsp_graph* g = nullptr;
  check(ppsp_graph_load(path.c_str(), &g));
  GraphPtr out(g, &ppsp_graph_free);
  if (!coords.empty()) check(ppsp_graph_load_coords(g, coords.c_str()));
  return out;
}

std::string fmt(double w) {
  if (std::isinf(w)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

std::string counters_kv(const ppsp_counters& c) {
  std::ostringstream out;
  out << "relaxations=" << c.relaxations
      << " settled_copies=" << c.settled_copies
      << " pruned_copies=" << c.pruned_copies
      << " arcs_scanned=" << c.arcs_scanned << " steps=" << c.steps
      << " heuristic_evals=" << c.heuristic_evals;
  return out.str();
}

// Writes pairs as "s t" lines to `path`, or stdout when empty.
void write_pairs(const std::vector<uint32_t>& flat, const std::string& path) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) usage_error("cannot write '" + path + "'");
  }
  std::ostream& out = path.empty() ? std::cout : file;
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) {
    out << flat[i] << ' ' << flat[i + 1] << '\n';
  }
}

std::vector<uint32_t> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage_error("cannot read '" + path + "'");
  std::vector<uint32_t> flat;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    long long s = 0;
    long long t = 0;
    if (!(words >> s)) continue;
    if (!(words >> t) || s < 0 || t < 0) usage_error("bad pair line: " + line);
    flat.push_back(static_cast<uint32_t>(s));
    flat.push_back(static_cast<uint32_t>(t));
  }
  return flat;
}

// "auto" or a positive number; NaN marks auto.
double parse_delta(const std::string& text) {
  if (text == "auto") return std::nan("");
  if (text == "inf") return INFINITY;
  try {
    std::size_t used = 0;
    const double d = std::stod(text, &used);
    if (used == text.size() && d > 0) return d;
  } catch (const std::exception&) {
  }
  usage_error("--delta must be 'auto', 'inf' or a positive number");
  return 0;
}

bool verify_close(double a, double b) {
  if (a == b) return true;
  return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

// Oracle distances for each pair; sources are deduplicated.
std::vector<double> oracle(const ppsp_graph* g,
                           const std::vector<uint32_t>& flat) {
  const uint64_t n = ppsp_graph_num_vertices(g);
  std::vector<double> out;
  std::vector<double> dist(n);
  int64_t last = -1;
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) {
    if (last != flat[i]) {
      check(ppsp_dijkstra(g, flat[i], dist.data()));
      last = flat[i];
    }
    if (flat[i + 1] >= n) check(PPSP_ERR_OUT_OF_RANGE);
    out.push_back(dist[flat[i + 1]]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel point-to-point and batch shortest paths"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", std::string(ppsp_version()));

  // convert
  std::string in_path;
  std::string out_path;
  std::string format = "binary";
  auto* convert = app.add_subcommand("convert", "Convert between text and binary CSR");
  convert->add_option("input", in_path, "Graph file (text or binary)")->required();
  convert->add_option("output", out_path, "Output path")->required();
  convert->add_option("--to", format, "Output format")
      ->check(CLI::IsMember({"text", "binary"}));

  // gen-weights
  uint64_t seed = 1;
  double lo = 1;
  double hi = 1 << 18;
  bool real = false;
  auto* gen_weights = app.add_subcommand(
      "gen-weights", "Assign seeded uniform weights to every undirected edge");
  gen_weights->add_option("input", in_path)->required();
  gen_weights->add_option("output", out_path)->required();
  gen_weights->add_option("--seed", seed);
  gen_weights->add_option("--lo", lo);
  gen_weights->add_option("--hi", hi);
  gen_weights->add_flag("--real", real, "Real-valued instead of integer weights");
  gen_weights->add_option("--to", format)->check(CLI::IsMember({"text", "binary"}));

  // components
  std::string labels_path;
  auto* components = app.add_subcommand("components", "Connected components");
  components->add_option("input", in_path)->required();
  components->add_option("--labels", labels_path, "Write one label per vertex");

  // gen-queries
  double percentile = 50;
  uint32_t count = 1;
  auto* gen_queries = app.add_subcommand(
      "gen-queries", "Pairs (s, t) with t at a distance percentile from s");
  gen_queries->add_option("input", in_path)->required();
  gen_queries->add_option("--percentile", percentile)->required();
  gen_queries->add_option("--count", count);
  gen_queries->add_option("--seed", seed);
  gen_queries->add_option("-o,--output", out_path);

  // gen-batch
  std::string pattern;
  uint32_t size = 6;
  auto* gen_batch = app.add_subcommand("gen-batch", "Batch query patterns");
  gen_batch->add_option("input", in_path)->required();
  gen_batch->add_option("--pattern", pattern)
      ->required()
      ->check(CLI::IsMember(
          {"star", "chain", "clique", "bipartite", "fork", "random", "separate"}));
  gen_batch->add_option("--size", size);
  gen_batch->add_option("--seed", seed);
  gen_batch->add_option("-o,--output", out_path);

  // query
  std::string strategy = "bids";
  uint32_t source = 0;
  uint32_t target = 0;
  std::string delta_text = "auto";
  std::string coords_path;
  int threads = 0;
  double radius = 6371.0088;
  bool no_memo = false;
  bool verify = false;
  std::string delta_cost = "time";
  auto* query = app.add_subcommand("query", "One point-to-point query");
  query->add_option("input", in_path)->required();
  query->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"sssp", "et", "bids", "astar", "bidastar"}));
  query->add_option("--source", source)->required();
  query->add_option("--target", target)->required();
  query->add_option("--delta", delta_text, "auto, inf or a positive value");
  query->add_option("--delta-cost", delta_cost)->check(CLI::IsMember({"time", "work"}));
  query->add_option("--coords", coords_path);
  query->add_option("--threads", threads);
  query->add_option("--radius", radius, "Sphere radius in edge-weight units");
  query->add_flag("--no-memo", no_memo);
  query->add_flag("--verify", verify, "Compare with sequential Dijkstra");

  // batch
  std::string algo = "multi";
  std::string queries_path;
  auto* batch = app.add_subcommand("batch", "Answer a set of pairs as one batch");
  batch->add_option("input", in_path)->required();
  batch->add_option("--algo", algo)
      ->check(CLI::IsMember({"multi", "vc", "plain-bids",
                             "plain-bids-concurrent", "plain-sssp"}));
  batch->add_option("--queries", queries_path, "File of 's t' lines");
  batch->add_option("--pattern", pattern)
      ->check(CLI::IsMember(
          {"star", "chain", "clique", "bipartite", "fork", "random", "separate"}));
  batch->add_option("--size", size);
  batch->add_option("--seed", seed);
  batch->add_option("--delta", delta_text);
  batch->add_option("--delta-cost", delta_cost)->check(CLI::IsMember({"time", "work"}));
  batch->add_option("--threads", threads);
  batch->add_flag("--verify", verify);

  // bench
  int warmup = 1;
  int rounds = 5;
  std::string csv_path;
  bool have_pair = false;
  double bench_percentile = 0;
  std::string bench_algo = "bids";
  auto* bench = app.add_subcommand("bench", "Warmup plus timed rounds");
  bench->add_option("input", in_path)->required();
  bench->add_option("--algo,--strategy", bench_algo,
                    "sssp, et, bids, astar, bidastar, multi, vc, plain-bids, "
                    "plain-bids-concurrent or plain-sssp");
  bench->add_option("--coords", coords_path);
  bench->add_option("--delta", delta_text);
  bench->add_option("--delta-cost", delta_cost)->check(CLI::IsMember({"time", "work"}));
  bench->add_option("--warmup", warmup)->check(CLI::NonNegativeNumber);
  bench->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
  bench->add_option("--threads", threads);
  bench->add_option("--seed", seed);
  bench->add_option("--radius", radius);
  bench->add_flag("--no-memo", no_memo);
  auto* src_opt = bench->add_option("--source", source);
  auto* dst_opt = bench->add_option("--target", target);
  bench->add_option("--queries", queries_path);
  bench->add_option("--pattern", pattern)
      ->check(CLI::IsMember(
          {"star", "chain", "clique", "bipartite", "fork", "random", "separate"}));
  bench->add_option("--size", size);
  bench->add_option("--percentile", bench_percentile);
  bench->add_option("--count", count);
  bench->add_option("--csv", csv_path, "Also write CSV rows here");
  src_opt->needs(dst_opt);
  dst_opt->needs(src_opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*convert || *gen_weights) {
      GraphPtr g = load(in_path);
      GraphPtr out(nullptr, &ppsp_graph_free);
      const ppsp_graph* target_graph = g.get();
      if (*gen_weights) {
        ppsp_graph* w = nullptr;
        check(ppsp_graph_uniform_weights(g.get(), seed, lo, hi, real ? 1 : 0, &w));
        out.reset(w);
        target_graph = w;
      }
      check(format == "text" ? ppsp_graph_save_text(target_graph, out_path.c_str())
                             : ppsp_graph_save_binary(target_graph, out_path.c_str()));
      std::cout << "record=graph path=" << out_path << " format=" << format
                << " n=" << ppsp_graph_num_vertices(target_graph)
                << " m=" << ppsp_graph_num_arcs(target_graph);
      if (*gen_weights) {
        std::cout << " seed=" << seed << " lo=" << fmt(lo) << " hi=" << fmt(hi)
                  << " real=" << (real ? 1 : 0)
                  << " rng=" << ppsp_random_algorithm();
      }
      std::cout << '\n';
    } else if (*components) {
      GraphPtr g = load(in_path);
      const uint64_t n = ppsp_graph_num_vertices(g.get());
      std::vector<uint32_t> labels(n);
      uint32_t num = 0;
      uint32_t largest = 0;
      uint64_t largest_size = 0;
      check(ppsp_graph_components(g.get(), labels.data(), &num, &largest,
                                  &largest_size));
      std::cout << "record=components n=" << n << " components=" << num
                << " largest=" << largest << " largest_size=" << largest_size
                << '\n';
      if (!labels_path.empty()) {
        std::ofstream out(labels_path);
        for (uint32_t l : labels) out << l << '\n';
      }
    } else if (*gen_queries) {
      GraphPtr g = load(in_path);
      std::vector<uint32_t> flat(2 * std::size_t{count});
      check(ppsp_generate_queries(g.get(), percentile, count, seed, flat.data()));
      write_pairs(flat, out_path);
    } else if (*gen_batch) {
      GraphPtr g = load(in_path);
      uint64_t k = 0;
      check(ppsp_pattern_num_pairs(pattern.c_str(), size, &k));
      std::vector<uint32_t> flat(2 * k);
      check(ppsp_generate_batch(g.get(), pattern.c_str(), size, seed,
                                flat.data(), k, &k));
      write_pairs(flat, out_path);
    } else if (*query) {
      GraphPtr g = load(in_path, coords_path);
      ppsp_run_options o;
      ppsp_run_options_init(&o);
      o.algo = strategy.c_str();
      o.threads = threads;
      o.sphere_radius = radius;
      o.memoize = no_memo ? 0 : 1;
      o.delta = parse_delta(delta_text);
      const bool auto_delta = std::isnan(o.delta);
      if (auto_delta) {
        const uint32_t pair[2] = {source, target};
        o.delta = 1;
        check(ppsp_auto_delta(g.get(), pair, 1, &o, delta_cost == "work", &o.delta));
      }
      double d = 0;
      ppsp_counters c{};
      check(ppsp_query(g.get(), source, target, &o, &d, &c));
      std::cout << "record=query strategy=" << strategy << " s=" << source
                << " t=" << target << " delta=" << fmt(o.delta)
                << " delta_mode=" << (auto_delta ? "auto" : "fixed")
                << " distance=" << fmt(d) << ' ' << counters_kv(c) << '\n';
      if (verify) {
        const double expect = oracle(g.get(), {source, target})[0];
        const bool ok = verify_close(d, expect);
        std::cout << "record=verify s=" << source << " t=" << target
                  << " oracle=" << fmt(expect) << " ok=" << (ok ? 1 : 0) << '\n';
        if (!ok) return PPSP_ERR_INTERNAL;
      }
    } else if (*batch) {
      GraphPtr g = load(in_path);
      std::vector<uint32_t> flat;
      if (!queries_path.empty()) {
        flat = read_pairs(queries_path);
      } else if (!pattern.empty()) {
        uint64_t k = 0;
        check(ppsp_pattern_num_pairs(pattern.c_str(), size, &k));
        flat.resize(2 * k);
        check(ppsp_generate_batch(g.get(), pattern.c_str(), size, seed,
                                  flat.data(), k, &k));
      } else {
        usage_error("batch needs --queries or --pattern");
      }
      const uint64_t k = flat.size() / 2;
      ppsp_run_options o;
      ppsp_run_options_init(&o);
      o.algo = algo.c_str();
      o.threads = threads;
      o.delta = parse_delta(delta_text);
      const bool auto_delta = std::isnan(o.delta);
      if (auto_delta) {
        o.delta = 1;
        check(ppsp_auto_delta(g.get(), flat.data(), k, &o,
                              delta_cost == "work", &o.delta));
      }
      std::vector<double> d(k);
      ppsp_counters c{};
      uint64_t searches = 0;
      check(ppsp_run_pairs(g.get(), flat.data(), k, &o, d.data(), &c, &searches));
      std::vector<double> expect;
      if (verify) expect = oracle(g.get(), flat);
      bool all_ok = true;
      for (uint64_t i = 0; i < k; ++i) {
        std::cout << "record=result index=" << i << " s=" << flat[2 * i]
                  << " t=" << flat[2 * i + 1] << " distance=" << fmt(d[i]);
        if (verify) {
          const bool ok = verify_close(d[i], expect[i]);
          all_ok &= ok;
          std::cout << " oracle=" << fmt(expect[i]) << " ok=" << (ok ? 1 : 0);
        }
        std::cout << '\n';
      }
      std::cout << "record=batch algo=" << algo << " pairs=" << k
                << " delta=" << fmt(o.delta)
                << " delta_mode=" << (auto_delta ? "auto" : "fixed")
                << " searches=" << searches << ' ' << counters_kv(c) << '\n';
      if (!all_ok) return PPSP_ERR_INTERNAL;
    } else if (*bench) {
      GraphPtr g = load(in_path, coords_path);
      ppsp_bench_config cfg;
      ppsp_bench_config_init(&cfg);
      cfg.graph_path = in_path.c_str();
      cfg.coords_path = coords_path.c_str();
      cfg.algo = bench_algo.c_str();
      const double delta = parse_delta(delta_text);
      cfg.delta = std::isnan(delta) ? 0 : delta;
      cfg.delta_cost_work = delta_cost == "work";
      cfg.warmup = warmup;
      cfg.rounds = rounds;
      cfg.threads = threads;
      cfg.seed = seed;
      cfg.sphere_radius = radius;
      cfg.memoize = no_memo ? 0 : 1;
      have_pair = src_opt->count() > 0;
      const uint32_t pair[2] = {source, target};
      if (have_pair) {
        cfg.pairs = pair;
        cfg.num_pairs = 1;
      }
      cfg.queries_path = queries_path.c_str();
      cfg.pattern = pattern.c_str();
      cfg.size = size;
      cfg.percentile = bench_percentile;
      cfg.count = count;
      ppsp_bench_report* raw = nullptr;
      check(ppsp_bench_run(g.get(), &cfg, &raw));
      std::unique_ptr<ppsp_bench_report, decltype(&ppsp_bench_free)> report(
          raw, &ppsp_bench_free);
      auto text = [&](int csv) {
        std::string s(ppsp_bench_format(report.get(), csv, nullptr, 0), '\0');
        ppsp_bench_format(report.get(), csv, s.data(), s.size() + 1);
        return s;
      };
      std::cout << text(0);
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) usage_error("cannot write '" + csv_path + "'");
        out << text(1);
      }
    }
  } catch (const Failure& f) {
    return static_cast<int>(f.status);
  }
  return 0;
}
