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

#include "unary/hamming.h"

#include <ostream>
#include <string>

#include "unary/errors.h"

namespace unary {
namespace {

void check_fits(std::uint64_t value, std::size_t width) {
  if (width == 0) throw RangeError("width must be positive");
  if (width < 64 && (value >> width) != 0) {
    throw RangeError(std::to_string(value) + " does not fit in " + std::to_string(width) +
                     " bits");
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, HammingCount c) { return os << c.value; }

HammingCount hamming_distance(const BitWord& a, const BitWord& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a.bits()[i] != b.bits()[i]);
  return {d};
}

HammingCount hamming_weight(const BitWord& a) {
  std::size_t w = 0;
  for (auto b : a.bits()) w += b;
  return {w};
}

BitWord binary_encode(std::uint64_t value, std::size_t width) {
  check_fits(value, width);
  return from_uint(value, width);
}

BitWord gray_encode(std::uint64_t value, std::size_t width) {
  check_fits(value, width);
  return from_uint(value ^ (value >> 1), width);
}

std::uint64_t binary_decode(const BitWord& w) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (value >> 63) throw RangeError("word " + w.to_string() + " exceeds 64 bits");
    value = (value << 1) | w.bits()[i];
  }
  return value;
}

std::uint64_t gray_decode(const BitWord& w) {
  // Each binary bit is the running XOR of the Gray bits to its left.
  std::uint64_t value = 0;
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc ^= w.bits()[i];
    if (value >> 63) throw RangeError("word " + w.to_string() + " exceeds 64 bits");
    value = (value << 1) | acc;
  }
  return value;
}

BitWord strip_leading_zeros(const BitWord& w) {
  std::size_t first = 0;
  while (first + 1 < w.size() && w.bits()[first] == 0) ++first;
  return BitWord(std::vector<std::uint8_t>(w.bits().begin() + static_cast<std::ptrdiff_t>(first),
                                           w.bits().end()));
}

}  // namespace unary
