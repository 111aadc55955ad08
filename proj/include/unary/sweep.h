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
#include <span>
#include <string>
#include <vector>

#include "unary/cc4.h"
#include "unary/evaluate.h"

namespace unary::harness {

struct Split {
  std::vector<cc4::TrainingSample> train;
  std::vector<cc4::TrainingSample> holdout;
};

/// Sample i goes to the held-out side when i % every == every - 1.
/// `every` of 0 or 1 keeps everything for training.
Split split_holdout(std::span<const cc4::TrainingSample> samples, std::size_t every);

/// Number of words within Hamming distance r of a point in an n-bit space,
/// saturating at UINT64_MAX.
std::uint64_t hamming_ball_size(std::size_t n, std::int64_t r);

struct SweepRow {
  std::int64_t radius = 0;
  std::uint64_t region_size = 0;
  /// Pairs of training samples with different outputs whose regions overlap,
  /// i.e. whose inputs are within 2r of each other.
  std::size_t conflicting_pairs = 0;
  EvaluationReport train;
  std::optional<EvaluationReport> holdout;
};

/// Trains one network per radius in [r_min, r_max].
std::vector<SweepRow> sweep_radius(std::span<const cc4::TrainingSample> train,
                                   std::span<const cc4::TrainingSample> holdout,
                                   std::int64_t r_min, std::int64_t r_max);

/// Tab-separated table with a header line.
std::string format_sweep(std::span<const SweepRow> rows);

}  // namespace unary::harness
