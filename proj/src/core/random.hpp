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

// Random streams used by every seeded generator in the library.
//
// Algorithm id "splitmix64-v1": the SplitMix64 finalizer applied to a
// 64-bit counter. A stream is identified by (seed, stream key); the k-th value
// of a stream is mix(mix(seed ^ key * kGolden) + (k + 1) * kGolden). Streams
// with different keys are independent, so generators split work by key
// (e.g. one key per undirected edge) and stay reproducible in any order.

#ifndef PPSP_CORE_RANDOM_HPP_
#define PPSP_CORE_RANDOM_HPP_

#include <cstdint>

namespace ppsp {

inline constexpr const char* kRandomAlgorithm = "splitmix64-v1";

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed, std::uint64_t key = 0)
      : base_(splitmix64_mix(seed ^ (key * kGolden))) {}

  constexpr std::uint64_t next() {
    ++counter_;
    return splitmix64_mix(base_ + counter_ * kGolden);
  }

  // Uniform in [0, 1) with 53 random bits.
  constexpr double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by 128-bit multiply-shift; bound > 0.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace ppsp

#endif  // PPSP_CORE_RANDOM_HPP_
