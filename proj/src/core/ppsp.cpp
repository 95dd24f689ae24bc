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

#include "core/ppsp.hpp"

#include <algorithm>
#include <string>

namespace ppsp {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kEarlyTermination:
      return "et";
    case Strategy::kAStar:
      return "astar";
    case Strategy::kBidirectional:
      return "bids";
    case Strategy::kBidirectionalAStar:
      return "bidastar";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kEarlyTermination, Strategy::kAStar,
                     Strategy::kBidirectional, Strategy::kBidirectionalAStar}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool strategy_prune(Strategy s, const PpspState& state, SearchCopy copy,
                    Weight heuristic) {
  return prune_predicate(s, state.dist.get(state.dist.cell(copy)), heuristic,
                         atomic_load(state.mu));
}

Weight strategy_update(Strategy s, PpspState& state, SearchCopy copy) {
  if (is_bidirectional(s)) {
    const Weight sum = state.dist.get(copy.vertex, kForward) +
                       state.dist.get(copy.vertex, kBackward);
    write_min(state.mu, sum);
  } else if (copy.vertex == state.target) {
    write_min(state.mu, state.dist.get(state.dist.cell(copy)));
  }
  return atomic_load(state.mu);
}

namespace {

// Heuristic values for one query, optionally memoized. For BiD-A* the cached
// function is hF; hB is its negation.
class HeuristicCache {
 public:
  using Fn = std::function<Weight(VertexId)>;

  HeuristicCache(std::uint64_t n, Fn fn, bool memoize)
      : fn_(std::move(fn)), memo_(memoize ? n : 0), memoize_(memoize) {}

  Weight operator()(VertexId v) {
    if (memoize_) return memo_.get(v, fn_);
    evaluations_.fetch_add(1, std::memory_order_relaxed);
    return fn_(v);
  }

  std::uint64_t evaluations() const {
    return memoize_ ? memo_.computations()
                    : evaluations_.load(std::memory_order_relaxed);
  }

 private:
  Fn fn_;
  MemoTable memo_;
  bool memoize_;
  std::atomic<std::uint64_t> evaluations_{0};
};

template <Strategy S>
struct PpspHooks {
  PpspState& state;
  HeuristicCache* heuristic;  // null unless uses_heuristic(S)
  bool prune_enabled;
  bool early_out_enabled;
  const std::function<void(const PpspState&)>& observer;
  bool early_out_fired = false;

  static constexpr std::uint32_t kCopies = is_bidirectional(S) ? 2 : 1;

  Weight h(CellId c) const {
    if constexpr (S == Strategy::kAStar) {
      return (*heuristic)(static_cast<VertexId>(c));
    } else if constexpr (S == Strategy::kBidirectionalAStar) {
      const Weight forward = (*heuristic)(static_cast<VertexId>(c / 2));
      return (c % 2 == kForward) ? forward : -forward;
    } else {
      return 0;
    }
  }

  Weight key(CellId c) const {
    if constexpr (uses_heuristic(S)) {
      return state.dist.get(c) + h(c);
    } else {
      return state.dist.get(c);
    }
  }

  bool prune(CellId c) const {
    if (!prune_enabled) return false;
    const Weight mu = atomic_load(state.mu);
    if (mu == kInf) return false;
    return prune_predicate(S, state.dist.get(c), uses_heuristic(S) ? h(c) : 0,
                           mu);
  }

  void on_relaxed(CellId c) const {
    if constexpr (is_bidirectional(S)) {
      const CellId base = c - c % 2;
      write_min(state.mu, state.dist.get(base) + state.dist.get(base + 1));
    } else {
      if (c == state.target) write_min(state.mu, state.dist.get(c));
    }
  }

  bool stop(const Frontier& frontier) {
    if constexpr (!is_bidirectional(S)) {
      return false;
    } else {
      if (!early_out_enabled || atomic_load(state.mu) != kInf) return false;
      bool seen[2] = {false, false};
      frontier.for_each([&](CellId c) {
        seen[c % 2] = true;
        return !(seen[0] && seen[1]);
      });
      early_out_fired = seen[0] != seen[1];
      return early_out_fired;
    }
  }

  void on_step_end() const {
    if (observer) observer(state);
  }
};

// Re-derives a bidirectional answer in s-to-t order: d+ at the best meeting
// vertex, then the backward tree's arc weights added one at a time. mu itself
// depends on which meeting vertex won the race, which moves the last bits on
// real weights. Falls back to mu when the backward chain does not check out.
Weight path_order_distance(const CsrGraph& graph, const PpspState& state,
                           Weight mu) {
  const DistanceState& d = state.dist;
  const auto n = static_cast<VertexId>(graph.num_vertices());
  VertexId best = n;
  Weight best_sum = kInf;
  for (VertexId v = 0; v < n; ++v) {
    const Weight sum = d.get(v, kForward) + d.get(v, kBackward);
    if (sum < best_sum) {
      best_sum = sum;
      best = v;
    }
  }
  if (best == n) return mu;
  Weight acc = d.get(best, kForward);
  VertexId v = best;
  for (VertexId hops = 0; v != state.target; ++hops) {
    if (hops == n) return mu;
    const Weight dv = d.get(v, kBackward);
    VertexId next = n;
    Weight next_dist = kInf;
    Weight next_w = 0;
    for (auto a = graph.arc_begin(v); a < graph.arc_end(v); ++a) {
      const VertexId x = graph.arc_target(a);
      const Weight dx = d.get(x, kBackward);
      if (dx + graph.arc_weight(a) == dv &&
          (dx < next_dist || (dx == next_dist && x < next))) {
        next = x;
        next_dist = dx;
        next_w = graph.arc_weight(a);
      }
    }
    if (next == n) return mu;
    acc += next_w;
    v = next;
  }
  return acc;
}

template <Strategy S>
PpspAnswer run(const CsrGraph& graph, VertexId s, VertexId t,
               const PpspOptions& options) {
  const int threads = resolve_threads(options.threads);
  PpspState state(graph.num_vertices(), s, t, S);
  std::optional<HeuristicCache> cache;
  StepPolicy policy = options.policy;

  if constexpr (S == Strategy::kAStar) {
    Heuristic to_target =
        Heuristic::for_graph(graph, t, options.sphere_radius);
    cache.emplace(graph.num_vertices(), to_target, options.memoize);
  } else if constexpr (S == Strategy::kBidirectionalAStar) {
    AveragedHeuristics avg = make_bidirectional_heuristics(
        Heuristic::for_graph(graph, s, options.sphere_radius),
        Heuristic::for_graph(graph, t, options.sphere_radius));
    cache.emplace(graph.num_vertices(),
                  [avg](VertexId v) { return avg.forward(v); },
                  options.memoize);
  }

  PpspHooks<S> hooks{state, cache ? &*cache : nullptr, options.prune,
                     options.early_out, options.on_step_end};
  Frontier frontier(state.dist.num_cells(), threads);
  if constexpr (is_bidirectional(S)) {
    const CellId src = state.dist.cell(s, kForward);
    const CellId dst = state.dist.cell(t, kBackward);
    state.dist.set(src, 0);
    state.dist.set(dst, 0);
    frontier.add(src);
    frontier.add(dst);
    hooks.on_relaxed(src);
    hooks.on_relaxed(dst);
    if constexpr (S == Strategy::kBidirectionalAStar) {
      policy.key_offset = std::min(hooks.key(src), hooks.key(dst));
    }
  } else {
    state.dist.set(s, 0);
    frontier.add(s);
    hooks.on_relaxed(s);
    if constexpr (S == Strategy::kAStar) policy.key_offset = hooks.key(s);
  }

  const CsrGraph* reverse = nullptr;
  std::optional<CsrGraph> transposed;
  if (is_bidirectional(S) && !graph.symmetric()) {
    reverse = options.reverse;
    if (reverse == nullptr) reverse = &transposed.emplace(transpose(graph));
  }

  PpspAnswer answer;
  answer.counters = run_stepping(graph, state.dist, frontier, policy, threads,
                                 hooks, reverse);
  answer.distance = atomic_load(state.mu);
  if (is_bidirectional(S) && answer.distance < kInf) {
    answer.distance = path_order_distance(graph, state, answer.distance);
  }
  answer.early_out = hooks.early_out_fired;
  if (cache) answer.counters.heuristic_evals = cache->evaluations();
  return answer;
}

}  // namespace

PpspAnswer ppsp(const CsrGraph& graph, VertexId s, VertexId t,
                const PpspOptions& options) {
  const std::uint64_t n = graph.num_vertices();
  if (s >= n || t >= n) {
    throw Error(Errc::kOutOfRange, "query vertex out of range: (" +
                                       std::to_string(s) + "," +
                                       std::to_string(t) + ") with n=" +
                                       std::to_string(n));
  }
  validate(options.policy);
  if (options.reverse != nullptr &&
      (options.reverse->num_vertices() != n ||
       options.reverse->num_arcs() != graph.num_arcs())) {
    throw Error(Errc::kInvalidArgument, "reverse graph does not match");
  }
  if (uses_heuristic(options.strategy) && !graph.has_coords()) {
    throw Error(Errc::kMissingCoordinates,
                std::string(to_string(options.strategy)) +
                    " needs vertex coordinates");
  }
  if (s == t) return PpspAnswer{0, {}, false};
  switch (options.strategy) {
    case Strategy::kEarlyTermination:
      return run<Strategy::kEarlyTermination>(graph, s, t, options);
    case Strategy::kAStar:
      return run<Strategy::kAStar>(graph, s, t, options);
    case Strategy::kBidirectional:
      return run<Strategy::kBidirectional>(graph, s, t, options);
    case Strategy::kBidirectionalAStar:
      return run<Strategy::kBidirectionalAStar>(graph, s, t, options);
  }
  throw Error(Errc::kInvalidArgument, "unknown strategy");
}

}  // namespace ppsp
