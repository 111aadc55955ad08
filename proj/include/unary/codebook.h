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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unary/bit_word.h"
#include "unary/hamming.h"

namespace unary {

enum class CodeFamily { kBasic, kFixed, kOneHot, kGeneralized };

std::string_view family_name(CodeFamily family);
/// Accepts "basic", "fixed", "one-hot"/"one_hot", "generalized".
CodeFamily parse_family(std::string_view name);

/// Parameters of a codebook.
///
/// - basic: values 0..max_value; `length`, when set, right-pads every word
///   with zeros and must be at least max_value + 1.
/// - fixed: values 0..max_value; `length` is required and >= max_value.
/// - one_hot: values 1..length; `length` is required and >= max_value.
/// - generalized: values 0..max_value, words of length k * max_value + 1.
struct CodeSpec {
  CodeFamily family = CodeFamily::kFixed;
  std::uint64_t max_value = 0;
  std::optional<std::size_t> length;
  std::uint64_t repetition = 1;

  /// Throws std::invalid_argument when the parameters are inconsistent.
  void validate() const;
};

/// Every codeword of a CodeSpec. words[i] encodes first_value + i.
class Codebook {
 public:
  explicit Codebook(const CodeSpec& spec);

  const CodeSpec& spec() const { return spec_; }
  std::uint64_t first_value() const { return first_value_; }
  const std::vector<BitWord>& words() const { return words_; }
  std::size_t word_length() const { return words_.front().size(); }

  const BitWord& word_for(std::uint64_t value) const;

  /// `<n><TAB><bitstring>` lines ordered by n.
  std::string dump() const;

 private:
  CodeSpec spec_;
  std::uint64_t first_value_ = 0;
  std::vector<BitWord> words_;
};

Codebook build_codebook(const CodeSpec& spec);

/// Exact minimum over all unordered pairs. Needs at least two words.
HammingCount min_pairwise_distance(const Codebook& book);

struct NearestCodeword {
  std::uint64_t value = 0;
  HammingCount distance;
  /// Other codewords at the same distance, which make the lookup ambiguous.
  std::size_t ties = 0;
};

/// Brute-force nearest-codeword lookup; the lowest value wins ties.
NearestCodeword nearest_codeword(const Codebook& book, const BitWord& received);

}  // namespace unary
