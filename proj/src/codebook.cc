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

#include "unary/codebook.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "unary/errors.h"
#include "unary/unary_codes.h"

namespace unary {

std::string_view family_name(CodeFamily family) {
  switch (family) {
    case CodeFamily::kBasic: return "basic";
    case CodeFamily::kFixed: return "fixed";
    case CodeFamily::kOneHot: return "one-hot";
    case CodeFamily::kGeneralized: return "generalized";
  }
  return "unknown";
}

CodeFamily parse_family(std::string_view name) {
  if (name == "basic") return CodeFamily::kBasic;
  if (name == "fixed") return CodeFamily::kFixed;
  if (name == "one-hot" || name == "one_hot") return CodeFamily::kOneHot;
  if (name == "generalized") return CodeFamily::kGeneralized;
  throw std::invalid_argument("unknown code family '" + std::string(name) + "'");
}

void CodeSpec::validate() const {
  auto fail = [this](const std::string& why) {
    throw std::invalid_argument(std::string(family_name(family)) + " code spec: " + why);
  };
  switch (family) {
    case CodeFamily::kBasic:
      if (length && *length < max_value + 1) fail("length must be at least max_value + 1");
      break;
    case CodeFamily::kFixed:
      if (!length || *length == 0) fail("length is required");
      if (*length < max_value) fail("length must be at least max_value");
      break;
    case CodeFamily::kOneHot:
      if (!length || *length == 0) fail("length is required");
      if (*length < max_value) fail("length must be at least max_value");
      break;
    case CodeFamily::kGeneralized:
      if (repetition < 1) fail("repetition k must be at least 1");
      if (length && *length != repetition * max_value + 1) {
        fail("length must equal k * max_value + 1");
      }
      break;
  }
}

Codebook::Codebook(const CodeSpec& spec) : spec_(spec) {
  spec_.validate();
  switch (spec_.family) {
    case CodeFamily::kBasic: {
      std::size_t len = spec_.length.value_or(spec_.max_value + 1);
      for (std::uint64_t n = 0; n <= spec_.max_value; ++n) {
        words_.push_back(pad_right(encode_basic(n), len));
      }
      break;
    }
    case CodeFamily::kFixed:
      for (std::uint64_t n = 0; n <= spec_.max_value; ++n) {
        words_.push_back(encode_fixed(n, *spec_.length));
      }
      break;
    case CodeFamily::kOneHot:
      first_value_ = 1;
      for (std::uint64_t v = 1; v <= *spec_.length; ++v) {
        words_.push_back(encode_one_hot(v, *spec_.length));
      }
      break;
    case CodeFamily::kGeneralized:
      for (std::uint64_t n = 0; n <= spec_.max_value; ++n) {
        words_.push_back(encode_generalized(n, spec_.repetition, spec_.max_value));
      }
      break;
  }
}

const BitWord& Codebook::word_for(std::uint64_t value) const {
  if (value < first_value_ || value - first_value_ >= words_.size()) {
    throw RangeError("value " + std::to_string(value) + " is not in the codebook");
  }
  return words_[value - first_value_];
}

std::string Codebook::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out << first_value_ + i << '\t' << words_[i] << '\n';
  }
  return out.str();
}

Codebook build_codebook(const CodeSpec& spec) { return Codebook(spec); }

HammingCount min_pairwise_distance(const Codebook& book) {
  const auto& words = book.words();
  if (words.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
  HammingCount best{words.front().size()};
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, hamming_distance(words[i], words[j]));
    }
  }
  return best;
}

NearestCodeword nearest_codeword(const Codebook& book, const BitWord& received) {
  const auto& words = book.words();
  NearestCodeword result{book.first_value(), hamming_distance(words.front(), received), 0};
  for (std::size_t i = 1; i < words.size(); ++i) {
    HammingCount d = hamming_distance(words[i], received);
    if (d < result.distance) {
      result = {book.first_value() + i, d, 0};
    } else if (d == result.distance) {
      ++result.ties;
    }
  }
  return result;
}

}  // namespace unary
