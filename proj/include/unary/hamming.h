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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "unary/bit_word.h"

namespace unary {

/// Number of differing (distance) or set (weight) positions.
struct HammingCount {
  std::size_t value = 0;

  friend constexpr auto operator<=>(const HammingCount&, const HammingCount&) = default;
};

std::ostream& operator<<(std::ostream& os, HammingCount c);

/// Throws LengthMismatch when the lengths differ; nothing is padded.
HammingCount hamming_distance(const BitWord& a, const BitWord& b);

HammingCount hamming_weight(const BitWord& a);

// Reference encoders. Both require value < 2^width and zero-pad on the left.
BitWord binary_encode(std::uint64_t value, std::size_t width);
BitWord gray_encode(std::uint64_t value, std::size_t width);

std::uint64_t binary_decode(const BitWord& w);

/// Inverse of the binary-reflected Gray code.
std::uint64_t gray_decode(const BitWord& w);

/// Drops leading zeros, keeping at least one bit. Used for the variable-width
/// layout of printed tables.
BitWord strip_leading_zeros(const BitWord& w);

}  // namespace unary
