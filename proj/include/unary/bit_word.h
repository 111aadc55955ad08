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
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unary {

/// A fixed-length sequence of bits, most-significant-first: index 0 is the
/// leftmost character of the textual form. Immutable after construction.
class BitWord {
 public:
  /// Every element must be 0 or 1 and there must be at least one bit.
  explicit BitWord(std::vector<std::uint8_t> bits);
  BitWord(std::initializer_list<int> bits);

  static BitWord zeros(std::size_t length);
  static BitWord ones(std::size_t length);

  /// Parses the textual format: a non-empty string of ASCII '0'/'1'.
  static BitWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  bool at(std::size_t i) const;
  std::span<const std::uint8_t> bits() const { return bits_; }

  /// Copy with bit `i` inverted.
  BitWord flipped(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend std::strong_ordering operator<=>(const BitWord&, const BitWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Position-reversed copy. Relates left-filled and right-filled thermometer words.
BitWord reverse(const BitWord& w);

/// `w` extended with trailing zeros to `length` bits.
BitWord pad_right(const BitWord& w, std::size_t length);

/// Words joined left to right. At least one word is required.
BitWord concat(std::span<const BitWord> words);

/// Word of `width` bits holding the low bits of `value`, most-significant-first.
BitWord from_uint(std::uint64_t value, std::size_t width);

std::ostream& operator<<(std::ostream& os, const BitWord& w);

}  // namespace unary
