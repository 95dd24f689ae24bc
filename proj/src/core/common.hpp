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

#ifndef PPSP_CORE_COMMON_HPP_
#define PPSP_CORE_COMMON_HPP_

#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ppsp {

using VertexId = std::uint32_t;
using Weight = double;
// Index of one tentative-distance cell: vertex * copies + source_index.
using CellId = std::uint64_t;

inline constexpr Weight kInf = std::numeric_limits<Weight>::infinity();

enum class Errc {
  kInvalidArgument = 1,
  kOutOfRange,
  kInvalidWeight,
  kIo,
  kFormat,
  kMissingCoordinates,
  kBatchTooLarge,
  kCoverTooLarge,
  kIsolatedSource,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Atomically lowers `cell` to `value` if `value` is strictly smaller.
// Returns true iff this call performed the decrease.
inline bool write_min(Weight& cell, Weight value) noexcept {
  std::atomic_ref<Weight> ref(cell);
  Weight current = ref.load(std::memory_order_relaxed);
  while (value < current) {
    if (ref.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
      return true;
    }
  }
  return false;
}

inline Weight atomic_load(const Weight& cell) noexcept {
  return std::atomic_ref<Weight>(const_cast<Weight&>(cell))
      .load(std::memory_order_relaxed);
}

// Counters collected by every search. Values are informational except where
// a test pins them (settled copies, steps, heuristic evaluations).
struct Counters {
  std::uint64_t relaxations = 0;     // successful write_min on a distance cell
  std::uint64_t settled_copies = 0;  // extracted copies whose arcs were scanned
  std::uint64_t pruned_copies = 0;   // extracted copies skipped by Prune
  std::uint64_t arcs_scanned = 0;
  std::uint64_t steps = 0;           // non-empty extraction rounds
  std::uint64_t heuristic_evals = 0;

  Counters& operator+=(const Counters& o) {
    relaxations += o.relaxations;
    settled_copies += o.settled_copies;
    pruned_copies += o.pruned_copies;
    arcs_scanned += o.arcs_scanned;
    steps += o.steps;
    heuristic_evals += o.heuristic_evals;
    return *this;
  }
};

}  // namespace ppsp

#endif  // PPSP_CORE_COMMON_HPP_
