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

#ifndef PPSP_CORE_FRONTIER_HPP_
#define PPSP_CORE_FRONTIER_HPP_

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

#include "core/common.hpp"

namespace ppsp {

enum class FrontierMode { kSparse, kDense };

/**
 * Set of pending search copies (cell ids) with threshold extraction.
 *
 * Membership is one byte per cell, claimed by compare-and-swap, so a copy is
 * pending at most once between extractions. In sparse mode the members are
 * also kept in an explicit list (per-thread append buffers merged at step
 * boundaries); in dense mode the byte array alone is scanned.
 *
 * Mode changes happen only in finish_step(): sparse -> dense once the pending
 * count reaches num_cells * dense_fraction, dense -> sparse once it drops
 * below num_cells * sparse_fraction.
 *
 * add() may be called concurrently from inside an OpenMP team of at most
 * `threads` threads. Everything else is single-caller.
 */
class Frontier {
 public:
  static constexpr double kDenseFraction = 1.0 / 20;
  static constexpr double kSparseFraction = 1.0 / 40;

  Frontier(std::uint64_t num_cells, int threads,
           double dense_fraction = kDenseFraction,
           double sparse_fraction = kSparseFraction);

  // Returns true iff c was not already pending.
  bool add(CellId c) {
    std::atomic_ref<std::uint8_t> flag(member_[c]);
    std::uint8_t expected = 0;
    if (flag.load(std::memory_order_relaxed) != 0 ||
        !flag.compare_exchange_strong(expected, 1,
                                      std::memory_order_relaxed)) {
      return false;
    }
    size_.fetch_add(1, std::memory_order_relaxed);
    if (mode_ == FrontierMode::kSparse) {
      int tid = omp_in_parallel() ? omp_get_thread_num() : 0;
      buffers_[static_cast<std::size_t>(tid) % buffers_.size()].push_back(c);
    }
    return true;
  }

  bool contains(CellId c) const {
    return std::atomic_ref<std::uint8_t>(const_cast<std::uint8_t&>(member_[c]))
               .load(std::memory_order_relaxed) != 0;
  }

  // Removes and returns every pending copy with key(c) <= theta. The smallest
  // key among copies left behind is stored in *min_remaining (+inf if none).
  template <typename KeyFn>
  std::vector<CellId> extract(Weight theta, KeyFn&& key,
                              Weight* min_remaining = nullptr);

  // Merges append buffers and applies the sparse/dense switch.
  void finish_step();

  std::uint64_t size() const { return size_.load(std::memory_order_relaxed); }
  bool empty() const { return size() == 0; }
  FrontierMode mode() const { return mode_; }
  std::uint64_t num_cells() const { return member_.size(); }

  // Visits pending copies until f returns false. Call between steps only.
  template <typename F>
  void for_each(F&& f) const;

 private:
  std::vector<std::uint8_t> member_;
  std::vector<CellId> pending_;  // sparse mode only
  std::vector<std::vector<CellId>> buffers_;
  std::atomic<std::uint64_t> size_{0};
  FrontierMode mode_ = FrontierMode::kSparse;
  int threads_;
  std::uint64_t dense_at_;
  std::uint64_t sparse_below_;
};

template <typename KeyFn>
std::vector<CellId> Frontier::extract(Weight theta, KeyFn&& key,
                                      Weight* min_remaining) {
  std::vector<CellId> out;
  Weight rest = kInf;
  if (mode_ == FrontierMode::kSparse) {
    std::size_t kept = 0;
    for (CellId c : pending_) {
      Weight k = key(c);
      if (k <= theta) {
        member_[c] = 0;
        out.push_back(c);
      } else {
        rest = std::min(rest, k);
        pending_[kept++] = c;
      }
    }
    pending_.resize(kept);
  } else {
    const std::int64_t cells = static_cast<std::int64_t>(member_.size());
    std::vector<std::vector<CellId>> local(static_cast<std::size_t>(threads_));
    std::vector<Weight> local_rest(static_cast<std::size_t>(threads_), kInf);
#pragma omp parallel num_threads(threads_) if (cells > 4096)
    {
      const auto tid = static_cast<std::size_t>(omp_get_thread_num());
      auto& mine = local[tid];
      Weight my_rest = kInf;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < cells; ++i) {
        if (member_[static_cast<std::size_t>(i)] == 0) continue;
        auto c = static_cast<CellId>(i);
        Weight k = key(c);
        if (k <= theta) {
          member_[c] = 0;
          mine.push_back(c);
        } else {
          my_rest = std::min(my_rest, k);
        }
      }
      local_rest[tid] = my_rest;
    }
    for (std::size_t t = 0; t < local.size(); ++t) {
      out.insert(out.end(), local[t].begin(), local[t].end());
      rest = std::min(rest, local_rest[t]);
    }
  }
  size_.fetch_sub(out.size(), std::memory_order_relaxed);
  if (min_remaining != nullptr) *min_remaining = rest;
  return out;
}

template <typename F>
void Frontier::for_each(F&& f) const {
  if (mode_ == FrontierMode::kSparse) {
    for (CellId c : pending_) {
      if (!f(c)) return;
    }
    return;
  }
  for (CellId c = 0; c < member_.size(); ++c) {
    if (member_[c] != 0 && !f(c)) return;
  }
}

}  // namespace ppsp

#endif  // PPSP_CORE_FRONTIER_HPP_
