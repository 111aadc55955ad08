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

#include "unary/unary_codes.h"

#include <string>
#include <vector>

#include "unary/errors.h"
#include "unary/hamming.h"

namespace unary {
namespace {

// Length of the leading run of ones.
std::size_t leading_ones(const BitWord& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i]) ++i;
  return i;
}

// Index of the first 1 at or after `from`, or w.size().
std::size_t next_one(const BitWord& w, std::size_t from) {
  while (from < w.size() && !w[from]) ++from;
  return from;
}

}  // namespace

BitWord encode_basic(std::uint64_t n) {
  std::vector<std::uint8_t> bits(n, 1);
  bits.push_back(0);
  return BitWord(std::move(bits));
}

std::uint64_t decode_basic(const BitWord& w) {
  std::size_t ones = leading_ones(w);
  if (ones == w.size()) throw DecodeError("basic unary word has no terminating 0", w.size());
  std::size_t stray = next_one(w, ones);
  if (stray != w.size()) throw DecodeError("basic unary word has a 1 after the terminator", stray);
  return ones;
}

BitWord encode_fixed(std::uint64_t n, std::size_t length) {
  if (length == 0) throw RangeError("fixed-length unary length must be positive");
  if (n > length) {
    throw RangeError("value " + std::to_string(n) + " exceeds fixed length " +
                     std::to_string(length));
  }
  std::vector<std::uint8_t> bits(length, 0);
  for (std::size_t i = length - n; i < length; ++i) bits[i] = 1;
  return BitWord(std::move(bits));
}

std::uint64_t decode_fixed(const BitWord& w) {
  std::size_t first_one = next_one(w, 0);
  for (std::size_t i = first_one; i < w.size(); ++i) {
    if (!w[i]) throw DecodeError("thermometer word has a 0 after a 1", i);
  }
  return hamming_weight(w).value;
}

BitWord encode_one_hot(std::uint64_t value, std::size_t length) {
  if (value < 1 || value > length) {
    throw RangeError("one-hot value " + std::to_string(value) + " outside 1.." +
                     std::to_string(length));
  }
  std::vector<std::uint8_t> bits(length, 0);
  bits[value - 1] = 1;
  return BitWord(std::move(bits));
}

std::uint64_t decode_one_hot(const BitWord& w) {
  std::size_t first = next_one(w, 0);
  if (first == w.size()) throw DecodeError("one-hot word has no 1", w.size());
  std::size_t second = next_one(w, first + 1);
  if (second != w.size()) throw DecodeError("one-hot word has a second 1", second);
  return first + 1;
}

BitWord one_hot_to_thermometer(const BitWord& w) {
  std::size_t pos = decode_one_hot(w) - 1;
  std::vector<std::uint8_t> bits(w.size(), 0);
  for (std::size_t i = 0; i <= pos; ++i) bits[i] = 1;
  return BitWord(std::move(bits));
}

BitWord encode_generalized(std::uint64_t n, std::uint64_t k, std::uint64_t max_value) {
  if (k < 1) throw RangeError("repetition k must be at least 1");
  if (n > max_value) {
    throw RangeError("value " + std::to_string(n) + " exceeds maximum " +
                     std::to_string(max_value));
  }
  std::vector<std::uint8_t> bits(k * max_value + 1, 0);
  for (std::uint64_t i = 0; i < k * n; ++i) bits[i] = 1;
  return BitWord(std::move(bits));
}

std::uint64_t decode_generalized(const BitWord& w, std::uint64_t k) {
  if (k < 1) throw RangeError("repetition k must be at least 1");
  std::uint64_t ones = decode_basic(w);
  if (ones % k != 0) {
    throw DecodeError("run of " + std::to_string(ones) + " ones is not a multiple of k=" +
                          std::to_string(k),
                      ones);
  }
  return ones / k;
}

}  // namespace unary
