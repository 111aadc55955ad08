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
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "unary/cc4.h"
#include "unary/errors.h"
#include "unary/hamming.h"

namespace unary::cc4 {
namespace {

BitWord W(const char* s) { return BitWord::parse(s); }

TEST(Train, HiddenRowFromWeightEquation) {
  std::vector<TrainingSample> samples{{W("1010"), W("1")}};
  Network net = train(samples, 1);
  // s = 2, bias = r - s + 1 = 0
  EXPECT_EQ(net.hidden_weights()[0], (std::vector<std::int64_t>{1, -1, 1, -1, 0}));
  EXPECT_EQ(net.input_width(), 5u);
  EXPECT_EQ(net.hidden_count(), 1u);
  EXPECT_EQ(net.radius(), 1);
}

TEST(Train, AllZeroInputBiasIsRPlusOne) {
  for (std::int64_t r = 0; r <= 6; ++r) {
    std::vector<TrainingSample> samples{{BitWord::zeros(7), W("1")}};
    EXPECT_EQ(train(samples, r).bias_weight(0), r + 1);
  }
}

TEST(Train, OutputWeightsFollowOutputBits) {
  std::vector<TrainingSample> samples{{W("0011"), W("10")}, {W("1100"), W("01")}};
  Network net = train(samples, 0);
  ASSERT_EQ(net.output_count(), 2u);
  // Column for sample 0 is [+1, -1].
  EXPECT_EQ(net.output_weights()[0][0], 1);
  EXPECT_EQ(net.output_weights()[1][0], -1);
  EXPECT_EQ(net.output_weights()[0][1], -1);
  EXPECT_EQ(net.output_weights()[1][1], 1);
}

TEST(Train, OneNeuronPerSampleIncludingDuplicates) {
  std::vector<TrainingSample> samples{{W("01"), W("1")}, {W("01"), W("1")}, {W("10"), W("0")}};
  EXPECT_EQ(train(samples, 0).hidden_count(), 3u);
}

TEST(Train, Errors) {
  std::vector<TrainingSample> none;
  EXPECT_THROW(train(none, 1), std::invalid_argument);
  std::vector<TrainingSample> ragged_in{{W("01"), W("1")}, {W("011"), W("1")}};
  EXPECT_THROW(train(ragged_in, 1), LengthMismatch);
  std::vector<TrainingSample> ragged_out{{W("01"), W("1")}, {W("01"), W("10")}};
  EXPECT_THROW(train(ragged_out, 1), LengthMismatch);
  std::vector<TrainingSample> ok{{W("01"), W("1")}};
  EXPECT_THROW(train(ok, -1), std::invalid_argument);
}

TEST(Network, ConstructorEnforcesInvariants) {
  // bias must be r - s + 1
  EXPECT_THROW(Network(3, 1, {{1, -1, 5}}, {{1}}), std::invalid_argument);
  EXPECT_NO_THROW(Network(3, 1, {{1, -1, 1}}, {{1}}));
  EXPECT_THROW(Network(3, 1, {{1, 0, 2}}, {{1}}), std::invalid_argument);
  EXPECT_THROW(Network(3, 1, {{1, -1, 1}}, {{2}}), std::invalid_argument);
  EXPECT_THROW(Network(3, 1, {{1, -1, 1}}, {{1, 1}}), LengthMismatch);
  EXPECT_THROW(Network(3, 1, {{1, 1}}, {{1}}), LengthMismatch);
  EXPECT_THROW(Network(3, 1, {}, {}), std::invalid_argument);
}

TEST(HiddenActivations, TrainingInputFiresWithSumRPlusOne) {
  std::vector<TrainingSample> samples{{W("10110"), W("1")}};
  for (std::int64_t r = 0; r <= 3; ++r) {
    Network net = train(samples, r);
    EXPECT_EQ(net.hidden_sums(W("10110"))[0], r + 1);
    EXPECT_EQ(hidden_activations(net, W("10110")), W("1"));
  }
}

TEST(HiddenActivations, EachFlipCostsOne) {
  std::vector<TrainingSample> samples{{W("10110"), W("1")}};
  Network net = train(samples, 2);
  BitWord x = W("10110");
  for (std::int64_t d = 0; d <= 5; ++d) {
    EXPECT_EQ(net.hidden_sums(x)[0], 3 - d);
    EXPECT_EQ(hidden_activations(net, x)[0], d <= 2);
    if (d < 5) x = x.flipped(static_cast<std::size_t>(d));
  }
}

TEST(HiddenActivations, FiringMapWidth8Radius2Has37Words) {
  const std::uint64_t center = 0b10011010;
  std::vector<TrainingSample> samples{{from_uint(center, 8), W("1")}};
  Network net = train(samples, 2);
  std::size_t fired = 0;
  for (std::uint64_t x = 0; x < 256; ++x) {
    bool on = hidden_activations(net, from_uint(x, 8))[0];
    ASSERT_EQ(on, testing::popcount_distance(x, center) <= 2);
    fired += on;
  }
  EXPECT_EQ(fired, testing::ball_size_by_enumeration(8, 2));
  EXPECT_EQ(fired, 37u);
}

TEST(HiddenActivations, LengthMismatch) {
  std::vector<TrainingSample> samples{{W("101"), W("1")}};
  Network net = train(samples, 1);
  EXPECT_THROW(hidden_activations(net, W("1010")), LengthMismatch);
  EXPECT_THROW(infer(net, W("10")), LengthMismatch);
}

// Radius law over random sets, checked against the popcount oracle.
TEST(HiddenActivations, RadiusLawRandomSets) {
  std::uint64_t state = 12345;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (std::size_t width : {3u, 6u, 9u}) {
    for (std::int64_t r = 0; r <= 3; ++r) {
      std::vector<std::uint64_t> inputs;
      std::vector<TrainingSample> samples;
      for (int i = 0; i < 6; ++i) {
        inputs.push_back(next() & ((1U << width) - 1));
        samples.push_back({from_uint(inputs.back(), width), from_uint(next() & 3, 2)});
      }
      Network net = train(samples, r);
      for (std::uint64_t x = 0; x < (1U << width); ++x) {
        BitWord h = hidden_activations(net, from_uint(x, width));
        for (std::size_t i = 0; i < inputs.size(); ++i) {
          ASSERT_EQ(h[i], testing::popcount_distance(x, inputs[i]) <= static_cast<std::size_t>(r));
        }
      }
    }
  }
}

TEST(Infer, SingleSampleWithinRadiusReproducesOutput) {
  const std::uint64_t center = 0b01101;
  std::vector<TrainingSample> samples{{from_uint(center, 5), W("1011")}};
  Network net = train(samples, 2);
  for (std::uint64_t x = 0; x < 32; ++x) {
    BitWord got = infer(net, from_uint(x, 5));
    if (testing::popcount_distance(x, center) <= 2) {
      ASSERT_EQ(got, W("1011"));
    } else {
      ASSERT_EQ(got, W("0000"));
    }
  }
}

TEST(Infer, OutsideEveryRegionIsAllZero) {
  std::vector<TrainingSample> samples{{W("000000"), W("11")}, {W("111111"), W("10")}};
  Network net = train(samples, 1);
  EXPECT_EQ(hidden_activations(net, W("000111")), W("00"));
  EXPECT_EQ(infer(net, W("000111")), W("00"));
}

TEST(Infer, EquidistantConflictTiesToZero) {
  // 0000 -> 1 and 0011 -> 0 with r = 1. Query 0001 is 1 from each.
  // Row 0: [-1 -1 -1 -1 | 2], sum on 0001 = 1. Row 1: [-1 -1 1 1 | 0], sum = 1.
  // Output sum = +1 - 1 = 0, which the step maps to 0.
  std::vector<TrainingSample> samples{{W("0000"), W("1")}, {W("0011"), W("0")}};
  Network net = train(samples, 1);
  EXPECT_EQ(net.hidden_sums(W("0001")), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(hidden_activations(net, W("0001")), W("11"));
  EXPECT_EQ(infer(net, W("0001")), W("0"));
  // Each training input is outside the other's radius and is reproduced.
  EXPECT_EQ(infer(net, W("0000")), W("1"));
  EXPECT_EQ(infer(net, W("0011")), W("0"));
}

TEST(Infer, ContradictoryDuplicateTiesToZero) {
  std::vector<TrainingSample> samples{{W("101"), W("1")}, {W("101"), W("0")}};
  EXPECT_EQ(infer(train(samples, 0), W("101")), W("0"));
}

TEST(Infer, RadiusZeroReproducesDistinctTrainingSet) {
  std::vector<TrainingSample> samples;
  for (std::uint64_t v = 0; v < 16; ++v) samples.push_back({from_uint(v, 4), from_uint(v * 7 % 16, 4)});
  Network net = train(samples, 0);
  for (const auto& s : samples) ASSERT_EQ(infer(net, s.input), s.output);
}

TEST(Region, RadiusZeroIsSingleton) {
  std::vector<TrainingSample> samples{{W("0110"), W("1")}};
  auto region = generalization_region(train(samples, 0), 0);
  ASSERT_EQ(region.size(), 1u);
  EXPECT_EQ(region[0], W("0110"));
}

TEST(Region, FullRadiusIsWholeCube) {
  std::vector<TrainingSample> samples{{W("01101"), W("1")}};
  EXPECT_EQ(generalization_region(train(samples, 5), 0).size(), 32u);
  EXPECT_EQ(generalization_region(train(samples, 9), 0).size(), 32u);
}

TEST(Region, Width4Radius1HasFiveWords) {
  std::vector<TrainingSample> samples{{W("1001"), W("1")}};
  auto region = generalization_region(train(samples, 1), 0);
  std::vector<BitWord> expected{W("0001"), W("1000"), W("1001"), W("1011"), W("1101")};
  EXPECT_EQ(region, expected);
  EXPECT_EQ(region.size(), testing::ball_size_by_enumeration(4, 1));
}

TEST(Region, MatchesFiringSetExhaustively) {
  std::vector<TrainingSample> samples{{W("1100101"), W("1")}, {W("0001110"), W("0")}};
  for (std::int64_t r = 0; r <= 4; ++r) {
    Network net = train(samples, r);
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<BitWord> fired;
      for (std::uint64_t x = 0; x < 128; ++x) {
        if (hidden_activations(net, from_uint(x, 7))[i]) fired.push_back(from_uint(x, 7));
      }
      ASSERT_EQ(generalization_region(net, i), fired);
    }
  }
}

TEST(Region, Errors) {
  std::vector<TrainingSample> samples{{W("10"), W("1")}};
  Network net = train(samples, 1);
  EXPECT_THROW(generalization_region(net, 1), std::out_of_range);
  std::vector<TrainingSample> wide{{BitWord::zeros(21), W("1")}};
  EXPECT_THROW(generalization_region(train(wide, 1), 0), RangeError);
}

TEST(Complement, NegatedColumnEqualsComplementedSample) {
  std::vector<TrainingSample> samples{{W("0101"), W("10")}, {W("1110"), W("11")}, {W("0000"), W("01")}};
  auto complemented = samples;
  complemented[1].output = W("00");
  EXPECT_EQ(complement_sample_output(train(samples, 1), 1), train(complemented, 1));
  EXPECT_THROW(complement_sample_output(train(samples, 1), 3), std::out_of_range);
}

TEST(Prototype, RecoveredFromHiddenRow) {
  std::vector<TrainingSample> samples{{W("100110"), W("1")}, {W("000001"), W("0")}};
  Network net = train(samples, 2);
  EXPECT_EQ(net.prototype(0), W("100110"));
  EXPECT_EQ(net.prototype(1), W("000001"));
}

}  // namespace
}  // namespace unary::cc4
