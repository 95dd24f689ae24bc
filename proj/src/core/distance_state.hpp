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

#ifndef PPSP_CORE_DISTANCE_STATE_HPP_
#define PPSP_CORE_DISTANCE_STATE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "core/common.hpp"

namespace ppsp {

// One (vertex, search) pair. source_index is 0 for single-source searches,
// 0/1 for forward/backward, and 0..|Vq|-1 for batch searches.
struct SearchCopy {
  VertexId vertex;
  std::uint32_t source_index;

  friend bool operator==(const SearchCopy&, const SearchCopy&) = default;
};

// Tentative distances for `copies` simultaneous searches. The copies of one
// vertex are adjacent: cell(v, i) = v * copies + i. Cells start at +inf and
// only ever decrease through write_min.
class DistanceState {
 public:
  DistanceState() = default;
  DistanceState(std::uint64_t num_vertices, std::uint32_t copies)
      : copies_(copies), cells_(num_vertices * copies, kInf) {}

  std::uint32_t copies() const { return copies_; }
  std::uint64_t num_cells() const { return cells_.size(); }
  std::uint64_t num_vertices() const {
    return copies_ == 0 ? 0 : cells_.size() / copies_;
  }

  CellId cell(VertexId v, std::uint32_t i) const {
    return static_cast<CellId>(v) * copies_ + i;
  }
  CellId cell(SearchCopy c) const { return cell(c.vertex, c.source_index); }
  SearchCopy copy_of(CellId c) const {
    if (copies_ == 1) return {static_cast<VertexId>(c), 0};
    return {static_cast<VertexId>(c / copies_),
            static_cast<std::uint32_t>(c % copies_)};
  }

  Weight get(CellId c) const { return atomic_load(cells_[c]); }
  Weight get(VertexId v, std::uint32_t i) const { return get(cell(v, i)); }
  bool relax(CellId c, Weight value) { return write_min(cells_[c], value); }
  // Initialization only; not synchronized.
  void set(CellId c, Weight value) { cells_[c] = value; }

  std::span<const Weight> cells() const { return cells_; }
  std::vector<Weight> distances_of(std::uint32_t source_index) const {
    std::vector<Weight> out(num_vertices());
    for (std::uint64_t v = 0; v < out.size(); ++v) {
      out[v] = cells_[v * copies_ + source_index];
    }
    return out;
  }

 private:
  std::uint32_t copies_ = 0;
  std::vector<Weight> cells_;
};

}  // namespace ppsp

#endif  // PPSP_CORE_DISTANCE_STATE_HPP_
