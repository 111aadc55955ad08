// Copyright 2026 The unarycc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace unary::harness {

/// 64-bit linear congruential generator used for every seeded grid, so the
/// random training sets can be reproduced in any language:
///
///   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///
/// The seed is the initial state. `next()` advances and returns the new
/// state; `bit()` is its top bit; `below(m)` is (next() >> 32) % m.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit constexpr Lcg64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }
  constexpr bool bit() { return (next() >> 63) != 0; }
  constexpr std::uint64_t below(std::uint64_t bound) { return (next() >> 32) % bound; }

  /// `width` independent bits packed low-order, first draw in the top position.
  constexpr std::uint64_t bits(unsigned width) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (bit() ? 1U : 0U);
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace unary::harness
