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

namespace unary::harness {

/// Parameter grid for the exhaustive property run. Every field has an
/// enumeration guard enforced by validate().
struct CheckGrid {
  std::size_t metric_max_length = 8;     // metric axioms over all triples, <= 8
  std::size_t gray_max_width = 10;       // Gray adjacency, <= 16
  std::size_t uniform_length = 64;       // fixed-length unary L, <= 64
  std::uint64_t k_min = 2;               // generalized audit, 1 <= k_min <= k_max <= 5
  std::uint64_t k_max = 5;
  std::uint64_t audit_max_value = 8;     // N for the minimum-distance audit, <= 16
  std::uint64_t scaling_max_value = 16;  // N for the k*|x-y| law, <= 16
  std::vector<std::size_t> pattern_widths = {4, 8, 10};  // CC4 pattern widths, each <= 12
  std::int64_t r_min = 0;
  std::int64_t r_max = 3;
  std::size_t sets = 20;          // random training sets per (width, r) cell
  std::size_t max_samples = 10;   // samples per set are drawn from 1..max_samples
  std::size_t bias_vectors = 200;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Parses `key=value` entries separated by ';'. Ranges are `lo..hi`, lists
/// are comma separated. Keys: metric, gray, L, k, N, scaleN, widths, r, sets,
/// samples, bias, seed. Unlisted keys keep their defaults; an empty string
/// yields the default grid.
CheckGrid parse_grid(std::string_view text);

struct PropertyResult {
  std::string property;
  std::string params;
  bool passed = true;
  /// Measured quantities, e.g. "checked=4096 violations=0".
  std::string measured;
  /// First failing witness, always present when passed is false.
  std::optional<std::string> counterexample;
  std::string note;
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }

  /// `property<TAB>params<TAB>result` per line.
  std::string to_machine() const;
  std::string to_text() const;
};

/// Runs every invariant of the bit-vector, unary-code and CC4 layers over
/// the grid. Deterministic for a fixed grid, including the seed.
PropertyReport run_property_checks(const CheckGrid& grid);

}  // namespace unary::harness
