// Copyright 2026 The lexeff Authors
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

#include <cstdint>
#include <limits>
#include <string_view>

namespace lexeff {

/// 64-bit FNV-1a.
std::uint64_t stable_hash(std::string_view text) noexcept;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Counter-based generator keyed by (seed, stream, substream).
///
/// The n-th output is mix64(key + n * golden_gamma), i.e. SplitMix64 started
/// from a key derived from all three coordinates. Any draw is a pure function
/// of the key and the counter, so results do not depend on thread scheduling
/// or on the order in which streams are visited. Satisfies
/// UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Unbiased draw from [0, n) by Lemire's multiply-and-reject. n must be > 0.
std::uint64_t uniform_index(CounterRng& rng, std::uint64_t n) noexcept;

}  // namespace lexeff
