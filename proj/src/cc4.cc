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

#include "unary/cc4.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "unary/errors.h"
#include "unary/hamming.h"

namespace unary::cc4 {
namespace {

std::uint8_t step(std::int64_t sum) { return sum > 0 ? 1 : 0; }

void check_index(const Network& net, std::size_t i) {
  if (i >= net.hidden_count()) {
    throw std::out_of_range("hidden index " + std::to_string(i) + " out of range for " +
                            std::to_string(net.hidden_count()) + " neurons");
  }
}

// Visits every subset of {0..n-1} of size <= r in lexicographic order of
// index lists, calling fn with the selected positions.
template <typename Fn>
void for_each_flip_set(std::size_t n, std::size_t r, std::vector<std::size_t>& chosen,
                       std::size_t start, Fn& fn) {
  fn(chosen);
  if (chosen.size() == r) return;
  for (std::size_t i = start; i < n; ++i) {
    chosen.push_back(i);
    for_each_flip_set(n, r, chosen, i + 1, fn);
    chosen.pop_back();
  }
}

}  // namespace

Network::Network(std::size_t input_width, std::int64_t radius,
                 std::vector<std::vector<std::int64_t>> hidden_weights,
                 std::vector<std::vector<std::int64_t>> output_weights)
    : input_width_(input_width),
      radius_(radius),
      hidden_(std::move(hidden_weights)),
      output_(std::move(output_weights)) {
  if (input_width_ < 2) throw std::invalid_argument("input width must include a pattern bit and the bias");
  if (radius_ < 0) throw std::invalid_argument("radius must be nonnegative");
  if (hidden_.empty()) throw std::invalid_argument("network needs at least one hidden neuron");
  if (output_.empty()) throw std::invalid_argument("network needs at least one output neuron");
  for (std::size_t i = 0; i < hidden_.size(); ++i) {
    const auto& row = hidden_[i];
    if (row.size() != input_width_) throw LengthMismatch(row.size(), input_width_);
    std::int64_t ones = 0;
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
      if (row[j] != 1 && row[j] != -1) {
        throw std::invalid_argument("hidden weight [" + std::to_string(i) + "][" +
                                    std::to_string(j) + "] is not +1 or -1");
      }
      ones += row[j] == 1;
    }
    if (row.back() != radius_ - ones + 1) {
      throw std::invalid_argument("bias weight of hidden neuron " + std::to_string(i) +
                                  " is not r - s + 1");
    }
  }
  for (std::size_t o = 0; o < output_.size(); ++o) {
    if (output_[o].size() != hidden_.size()) throw LengthMismatch(output_[o].size(), hidden_.size());
    for (auto w : output_[o]) {
      if (w != 1 && w != -1) {
        throw std::invalid_argument("output weight in row " + std::to_string(o) +
                                    " is not +1 or -1");
      }
    }
  }
}

std::int64_t Network::bias_weight(std::size_t hidden_index) const {
  return hidden_.at(hidden_index).back();
}

BitWord Network::prototype(std::size_t hidden_index) const {
  const auto& row = hidden_.at(hidden_index);
  std::vector<std::uint8_t> bits(pattern_width());
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = row[j] == 1 ? 1 : 0;
  return BitWord(std::move(bits));
}

std::vector<std::int64_t> Network::hidden_sums(const BitWord& x) const {
  if (x.size() != pattern_width()) throw LengthMismatch(x.size(), pattern_width());
  std::vector<std::int64_t> sums;
  sums.reserve(hidden_.size());
  for (const auto& row : hidden_) {
    std::int64_t sum = row.back();  // bias input is the constant 1
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j]) sum += row[j];
    }
    sums.push_back(sum);
  }
  return sums;
}

Network train(std::span<const TrainingSample> samples, std::int64_t radius) {
  if (samples.empty()) throw std::invalid_argument("training set is empty");
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const std::size_t width = samples.front().input.size();
  const std::size_t outputs = samples.front().output.size();

  std::vector<std::vector<std::int64_t>> hidden;
  std::vector<std::vector<std::int64_t>> output(outputs,
                                                std::vector<std::int64_t>(samples.size()));
  hidden.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& sample = samples[i];
    if (sample.input.size() != width) throw LengthMismatch(sample.input.size(), width);
    if (sample.output.size() != outputs) throw LengthMismatch(sample.output.size(), outputs);

    std::vector<std::int64_t> row(width + 1);
    std::int64_t ones = 0;
    for (std::size_t j = 0; j < width; ++j) {
      row[j] = sample.input[j] ? 1 : -1;
      ones += sample.input[j];
    }
    row[width] = radius - ones + 1;
    hidden.push_back(std::move(row));

    for (std::size_t o = 0; o < outputs; ++o) output[o][i] = sample.output[o] ? 1 : -1;
  }
  return Network(width + 1, radius, std::move(hidden), std::move(output));
}

BitWord hidden_activations(const Network& net, const BitWord& x) {
  auto sums = net.hidden_sums(x);
  std::vector<std::uint8_t> bits(sums.size());
  std::transform(sums.begin(), sums.end(), bits.begin(), step);
  return BitWord(std::move(bits));
}

BitWord infer(const Network& net, const BitWord& x) {
  BitWord hidden = hidden_activations(net, x);
  std::vector<std::uint8_t> bits;
  bits.reserve(net.output_count());
  for (const auto& row : net.output_weights()) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (hidden[i]) sum += row[i];
    }
    bits.push_back(step(sum));
  }
  return BitWord(std::move(bits));
}

std::vector<BitWord> generalization_region(const Network& net, std::size_t hidden_index) {
  check_index(net, hidden_index);
  const std::size_t n = net.pattern_width();
  if (n > kMaxRegionWidth) {
    throw RangeError("pattern width " + std::to_string(n) + " exceeds enumeration limit " +
                     std::to_string(kMaxRegionWidth));
  }
  const BitWord center = net.prototype(hidden_index);
  const std::size_t r = std::min<std::size_t>(static_cast<std::size_t>(net.radius()), n);

  std::vector<BitWord> region;
  std::vector<std::size_t> chosen;
  auto emit = [&](const std::vector<std::size_t>& flips) {
    std::vector<std::uint8_t> bits(center.bits().begin(), center.bits().end());
    for (auto j : flips) bits[j] ^= 1;
    region.emplace_back(std::move(bits));
  };
  for_each_flip_set(n, r, chosen, 0, emit);
  std::sort(region.begin(), region.end());
  return region;
}

Network complement_sample_output(const Network& net, std::size_t hidden_index) {
  check_index(net, hidden_index);
  auto output = net.output_weights();
  for (auto& row : output) row[hidden_index] = -row[hidden_index];
  return Network(net.input_width(), net.radius(), net.hidden_weights(), std::move(output));
}

}  // namespace unary::cc4
