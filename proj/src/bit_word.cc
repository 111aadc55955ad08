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

#include "unary/bit_word.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "unary/errors.h"

namespace unary {

BitWord::BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw std::invalid_argument("BitWord must have at least one bit");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw std::invalid_argument("BitWord element " + std::to_string(i) +
                                  " is not 0 or 1");
    }
  }
}

BitWord::BitWord(std::initializer_list<int> bits)
    : BitWord([&] {
        std::vector<std::uint8_t> v;
        v.reserve(bits.size());
        for (int b : bits) {
          if (b != 0 && b != 1) throw std::invalid_argument("BitWord element is not 0 or 1");
          v.push_back(static_cast<std::uint8_t>(b));
        }
        return v;
      }()) {}

BitWord BitWord::zeros(std::size_t length) {
  return BitWord(std::vector<std::uint8_t>(length, 0));
}

BitWord BitWord::ones(std::size_t length) {
  return BitWord(std::vector<std::uint8_t>(length, 1));
}

BitWord BitWord::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty bit string");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') {
      throw DecodeError("invalid character '" + std::string(1, c) + "' in bit string", i);
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitWord(std::move(bits));
}

bool BitWord::at(std::size_t i) const {
  if (i >= bits_.size()) {
    throw std::out_of_range("bit index " + std::to_string(i) + " out of range for length " +
                            std::to_string(bits_.size()));
  }
  return bits_[i] != 0;
}

BitWord BitWord::flipped(std::size_t i) const {
  auto copy = bits_;
  copy.at(i) ^= 1;
  return BitWord(std::move(copy));
}

std::string BitWord::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

BitWord reverse(const BitWord& w) {
  std::vector<std::uint8_t> bits(w.bits().rbegin(), w.bits().rend());
  return BitWord(std::move(bits));
}

BitWord pad_right(const BitWord& w, std::size_t length) {
  if (length < w.size()) {
    throw RangeError("cannot pad a word of length " + std::to_string(w.size()) +
                     " to shorter length " + std::to_string(length));
  }
  std::vector<std::uint8_t> bits(w.bits().begin(), w.bits().end());
  bits.resize(length, 0);
  return BitWord(std::move(bits));
}

BitWord concat(std::span<const BitWord> words) {
  std::vector<std::uint8_t> bits;
  for (const auto& w : words) bits.insert(bits.end(), w.bits().begin(), w.bits().end());
  return BitWord(std::move(bits));
}

BitWord from_uint(std::uint64_t value, std::size_t width) {
  std::vector<std::uint8_t> bits(width, 0);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    bits[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return BitWord(std::move(bits));
}

std::ostream& operator<<(std::ostream& os, const BitWord& w) { return os << w.to_string(); }

}  // namespace unary
