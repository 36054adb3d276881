// Copyright 2026 The tumornet Authors
//
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace tumornet {

// Well-known substream labels. Each subsystem draws only from its own label
// so that changing the number of draws in one never shifts another.
namespace streams {
inline constexpr std::string_view kGraph = "graph";
inline constexpr std::string_view kGraphSkip = "graph.skip";
inline constexpr std::string_view kSchedule = "schedule";
inline constexpr std::string_view kTransitions = "transitions";
inline constexpr std::string_view kGrowth = "growth";
}  // namespace streams

/// Mixes (seed, label, counter) into the 64-bit seed of an independent
/// substream. Pure function; stable across platforms.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view label,
                                 std::uint64_t counter = 0);

/// A labelled pseudo-random stream backed by std::mt19937_64.
///
/// Only the raw 64-bit engine output is used; all derived draws (uniform
/// reals, bounded integers, shuffles) are computed here so that results do
/// not depend on the standard library's distribution implementations.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label,
            std::uint64_t counter = 0)
      : engine_(derive_stream_seed(seed, label, counter)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Always consumes exactly one draw. p <= 0 never succeeds, p >= 1 always.
  bool bernoulli(double p) { return uniform() < p; }

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tumornet
