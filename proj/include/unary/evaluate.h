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
#include <span>
#include <string>
#include <vector>

#include "unary/cc4.h"

namespace unary::harness {

struct ClassTally {
  BitWord expected;
  std::size_t total = 0;
  std::size_t correct = 0;
};

/// Exact-match evaluation. An all-zero output is a "no decision": the step
/// rule produced nothing, either because no region covered the query or
/// because conflicting regions cancelled.
struct EvaluationReport {
  std::size_t total = 0;
  std::size_t exact_matches = 0;
  std::size_t no_decision = 0;
  /// Keyed by expected output word, ordered descending (class 0 first for
  /// one-hot labels).
  std::vector<ClassTally> per_class;

  double accuracy() const;
  std::string to_text() const;
};

EvaluationReport evaluate(const cc4::Network& net, std::span<const cc4::TrainingSample> samples);

}  // namespace unary::harness
