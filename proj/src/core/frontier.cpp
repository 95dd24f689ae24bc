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

#include "core/frontier.hpp"

#include <cmath>

namespace ppsp {

Frontier::Frontier(std::uint64_t num_cells, int threads,
                   double dense_fraction, double sparse_fraction)
    : member_(num_cells, 0),
      buffers_(static_cast<std::size_t>(std::max(threads, 1))),
      threads_(std::max(threads, 1)),
      dense_at_(std::max<std::uint64_t>(
          1, static_cast<std::uint64_t>(
                 std::ceil(static_cast<double>(num_cells) * dense_fraction)))),
      sparse_below_(static_cast<std::uint64_t>(
          std::ceil(static_cast<double>(num_cells) * sparse_fraction))) {}

void Frontier::finish_step() {
  if (mode_ == FrontierMode::kSparse) {
    for (auto& b : buffers_) {
      pending_.insert(pending_.end(), b.begin(), b.end());
      b.clear();
    }
    if (size() >= dense_at_) {
      mode_ = FrontierMode::kDense;
      pending_.clear();
      pending_.shrink_to_fit();
    }
    return;
  }
  if (size() < sparse_below_) {
    mode_ = FrontierMode::kSparse;
    pending_.clear();
    for (CellId c = 0; c < member_.size(); ++c) {
      if (member_[c] != 0) pending_.push_back(c);
    }
  }
}

}  // namespace ppsp
