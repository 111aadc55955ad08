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

#include <cstdint>

#include "gtest/gtest.h"
#include "unary/bit_word.h"
#include "unary/errors.h"
#include "unary/hamming.h"
#include "unary/unary_codes.h"

namespace unary {
namespace {

BitWord W(const char* s) { return BitWord::parse(s); }

std::uint64_t diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

TEST(Basic, Encode) {
  EXPECT_EQ(encode_basic(3), W("1110"));
  EXPECT_EQ(encode_basic(0), W("0"));
  EXPECT_EQ(encode_basic(10), W("11111111110"));
}

TEST(Basic, Decode) {
  EXPECT_EQ(decode_basic(W("1110")), 3u);
  EXPECT_EQ(decode_basic(W("0")), 0u);
  EXPECT_EQ(decode_basic(W("110000")), 2u);  // zero padding after the terminator
}

TEST(Basic, DecodeRejectsMalformed) {
  try {
    decode_basic(W("1011"));
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    decode_basic(W("111"));
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Fixed, Encode) {
  EXPECT_EQ(encode_fixed(3, 10), W("0000000111"));
  EXPECT_EQ(encode_fixed(0, 10), W("0000000000"));
  EXPECT_EQ(encode_fixed(10, 10), W("1111111111"));
  EXPECT_THROW(encode_fixed(11, 10), RangeError);
  EXPECT_THROW(encode_fixed(0, 0), RangeError);
}

TEST(Fixed, Decode) {
  EXPECT_EQ(decode_fixed(W("0000011111")), 5u);
  EXPECT_EQ(decode_fixed(W("0000000000")), 0u);
  EXPECT_THROW(decode_fixed(W("0101010101")), DecodeError);
  EXPECT_THROW(decode_fixed(W("10")), DecodeError);
}

TEST(OneHot, Encode) {
  EXPECT_EQ(encode_one_hot(1, 4), W("1000"));
  EXPECT_EQ(encode_one_hot(2, 4), W("0100"));
  EXPECT_EQ(encode_one_hot(3, 4), W("0010"));
  EXPECT_EQ(encode_one_hot(4, 4), W("0001"));
  EXPECT_THROW(encode_one_hot(0, 4), RangeError);
  EXPECT_THROW(encode_one_hot(5, 4), RangeError);
}

TEST(OneHot, Decode) {
  for (std::uint64_t v = 1; v <= 6; ++v) EXPECT_EQ(decode_one_hot(encode_one_hot(v, 6)), v);
  EXPECT_THROW(decode_one_hot(W("0000")), DecodeError);
  EXPECT_THROW(decode_one_hot(W("0110")), DecodeError);
}

TEST(Thermometer, FillsLeftOfTheOne) {
  EXPECT_EQ(one_hot_to_thermometer(W("0010")), W("1110"));
  EXPECT_EQ(one_hot_to_thermometer(W("1000")), W("1000"));
  EXPECT_EQ(one_hot_to_thermometer(W("0100")), W("1100"));
  EXPECT_EQ(one_hot_to_thermometer(W("0001")), W("1111"));
  EXPECT_THROW(one_hot_to_thermometer(W("0000")), DecodeError);
  EXPECT_THROW(one_hot_to_thermometer(W("0101")), DecodeError);
}

TEST(Thermometer, IsReversedFixedLengthCode) {
  for (std::size_t len = 1; len <= 16; ++len) {
    for (std::uint64_t v = 1; v <= len; ++v) {
      ASSERT_EQ(one_hot_to_thermometer(encode_one_hot(v, len)), reverse(encode_fixed(v, len)));
    }
  }
}

TEST(Generalized, Encode) {
  EXPECT_EQ(encode_generalized(2, 3, 2), W("1111110"));
  EXPECT_EQ(encode_generalized(0, 3, 2), W("0000000"));
  EXPECT_EQ(encode_generalized(1, 1, 3), W("1000"));
  EXPECT_EQ(encode_generalized(0, 5, 0), W("0"));
  EXPECT_THROW(encode_generalized(3, 2, 2), RangeError);
  EXPECT_THROW(encode_generalized(1, 0, 2), RangeError);
}

TEST(Generalized, KEqualsOneIsPaddedBasic) {
  for (std::uint64_t max = 0; max <= 12; ++max) {
    for (std::uint64_t n = 0; n <= max; ++n) {
      ASSERT_EQ(encode_generalized(n, 1, max), pad_right(encode_basic(n), max + 1));
    }
  }
}

TEST(Generalized, Decode) {
  EXPECT_EQ(decode_generalized(W("1111110"), 3), 2u);
  EXPECT_EQ(decode_generalized(W("0000000"), 3), 0u);
  EXPECT_THROW(decode_generalized(W("1111100"), 3), DecodeError);
  EXPECT_THROW(decode_generalized(W("1111111"), 3), DecodeError);
  for (std::uint64_t k = 1; k <= 5; ++k) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      ASSERT_EQ(decode_generalized(encode_generalized(n, k, 8), k), n);
    }
  }
}

// Uniform-distance law and its weight corollary: distances between
// fixed-length codes equal the numeric difference.
TEST(Laws, UniformDistanceExhaustive) {
  for (std::size_t len = 1; len <= 64; ++len) {
    for (std::uint64_t x = 0; x <= len; ++x) {
      for (std::uint64_t y = 0; y <= len; ++y) {
        ASSERT_EQ(hamming_distance(encode_fixed(x, len), encode_fixed(y, len)).value, diff(x, y));
      }
    }
  }
}

TEST(Laws, DistanceOrderFollowsNumericOrder) {
  const std::size_t len = 20;
  for (std::uint64_t x = 0; x <= len; ++x) {
    for (std::uint64_t y1 = 0; y1 <= len; ++y1) {
      for (std::uint64_t y2 = 0; y2 <= len; ++y2) {
        if (diff(x, y1) > diff(x, y2)) {
          ASSERT_GT(hamming_distance(encode_fixed(x, len), encode_fixed(y1, len)),
                    hamming_distance(encode_fixed(x, len), encode_fixed(y2, len)));
        }
      }
    }
  }
}

TEST(Laws, WeightStrictlyIncreasing) {
  for (std::uint64_t y = 0; y < 64; ++y) {
    ASSERT_LT(hamming_weight(encode_fixed(y, 64)), hamming_weight(encode_fixed(y + 1, 64)));
    ASSERT_EQ(hamming_weight(encode_fixed(y, 64)).value, y);
  }
}

TEST(Laws, GeneralizedScaling) {
  for (std::uint64_t k = 1; k <= 5; ++k) {
    for (std::uint64_t max = 0; max <= 16; ++max) {
      for (std::uint64_t x = 0; x <= max; ++x) {
        for (std::uint64_t y = 0; y <= max; ++y) {
          ASSERT_EQ(hamming_distance(encode_generalized(x, k, max), encode_generalized(y, k, max)).value,
                    k * diff(x, y));
        }
      }
    }
  }
}

TEST(Laws, RoundTrips) {
  for (std::uint64_t n = 0; n <= 200; ++n) ASSERT_EQ(decode_basic(encode_basic(n)), n);
  for (std::size_t len = 1; len <= 64; ++len) {
    for (std::uint64_t n = 0; n <= len; ++n) ASSERT_EQ(decode_fixed(encode_fixed(n, len)), n);
  }
}

}  // namespace
}  // namespace unary
