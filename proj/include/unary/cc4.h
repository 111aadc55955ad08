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
#include <span>
#include <vector>

#include "unary/bit_word.h"

namespace unary::cc4 {

/// One training example. `input` excludes the bias position.
struct TrainingSample {
  BitWord input;
  BitWord output;
};

/// Three-layer corner-classification network.
///
/// Hidden neuron i stores the pattern of sample i as +1/-1 weights and a bias
/// weight r - s_i + 1, where s_i is the number of ones in that pattern. With
/// the constant bias input of 1 its summation on x is r + 1 - d(x, x_i), so it
/// fires exactly on the Hamming ball of radius r around x_i. Output weights
/// are +1 where the sample's output bit is 1 and -1 where it is 0.
///
/// A summation of exactly 0 activates nothing, at both layers. Queries outside
/// every ball, or balanced between conflicting balls, therefore yield 0 bits.
class Network {
 public:
  /// Checks every weight invariant. hidden_weights is h rows of
  /// `input_width` entries (bias last); output_weights is m rows of h entries.
  Network(std::size_t input_width, std::int64_t radius,
          std::vector<std::vector<std::int64_t>> hidden_weights,
          std::vector<std::vector<std::int64_t>> output_weights);

  /// Pattern length plus one for the bias.
  std::size_t input_width() const { return input_width_; }
  std::size_t pattern_width() const { return input_width_ - 1; }
  std::size_t hidden_count() const { return hidden_.size(); }
  std::size_t output_count() const { return output_.size(); }
  std::int64_t radius() const { return radius_; }

  const std::vector<std::vector<std::int64_t>>& hidden_weights() const { return hidden_; }
  const std::vector<std::vector<std::int64_t>>& output_weights() const { return output_; }

  std::int64_t bias_weight(std::size_t hidden_index) const;

  /// Training input recovered from hidden row `hidden_index`.
  BitWord prototype(std::size_t hidden_index) const;

  /// Integer summations of the hidden layer, bias included.
  std::vector<std::int64_t> hidden_sums(const BitWord& x) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t input_width_;
  std::int64_t radius_;
  std::vector<std::vector<std::int64_t>> hidden_;
  std::vector<std::vector<std::int64_t>> output_;
};

/// One pass over the samples; no iteration. Throws on an empty set, ragged
/// widths, or a negative radius.
Network train(std::span<const TrainingSample> samples, std::int64_t radius);

/// Bit i is 1 iff hidden neuron i's summation is positive.
BitWord hidden_activations(const Network& net, const BitWord& x);

BitWord infer(const Network& net, const BitWord& x);

/// All words within Hamming distance r of hidden neuron i's prototype, in
/// ascending order. Refuses pattern widths above kMaxRegionWidth.
inline constexpr std::size_t kMaxRegionWidth = 20;
std::vector<BitWord> generalization_region(const Network& net, std::size_t hidden_index);

/// Copy of `net` with the output weights of hidden neuron i negated. Equal to
/// training with sample i's output bits complemented.
Network complement_sample_output(const Network& net, std::size_t hidden_index);

}  // namespace unary::cc4
