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

#include <cstddef>
#include <cstdint>

#include "unary/bit_word.h"

namespace unary {

// Basic unary: n ones followed by a terminating 0 (length n + 1).
BitWord encode_basic(std::uint64_t n);

/// Count of leading ones. Rejects a word with a 1 after the first 0, or with
/// no 0 at all. Trailing zero padding after the terminator is accepted.
std::uint64_t decode_basic(const BitWord& w);

// Fixed-length (thermometer) unary: L - n zeros then n ones, so the weight is n.
BitWord encode_fixed(std::uint64_t n, std::size_t length);

/// Weight of a word in which every 0 precedes every 1.
std::uint64_t decode_fixed(const BitWord& w);

// One-hot: values 1..L, the leftmost position stands for 1.
BitWord encode_one_hot(std::uint64_t value, std::size_t length);
std::uint64_t decode_one_hot(const BitWord& w);

/// Sets every position at or left of the single 1. Throws unless the word has
/// exactly one 1.
BitWord one_hot_to_thermometer(const BitWord& w);

/// k-repetition unary: k*n ones then zeros, padded to the fixed length
/// k*max_value + 1 so the longest codeword keeps its terminating 0.
BitWord encode_generalized(std::uint64_t n, std::uint64_t k, std::uint64_t max_value);

/// Inverse of encode_generalized for any padded length. The run of leading
/// ones must be a multiple of k and followed only by zeros.
std::uint64_t decode_generalized(const BitWord& w, std::uint64_t k);

}  // namespace unary
