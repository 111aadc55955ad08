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
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace unary::harness {

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FeatureRange {
  std::int64_t min = 0;
  std::int64_t max = 0;

  friend bool operator==(const FeatureRange&, const FeatureRange&) = default;
};

struct DatasetRow {
  std::vector<std::int64_t> features;
  std::uint64_t label = 0;
};

/// Integer-feature classification data. Labels are dense in 0..class_count-1.
struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<DatasetRow> rows;
  std::vector<FeatureRange> feature_ranges;
  std::size_t class_count = 0;
};

enum class LabelCheck {
  kDense,       // labels must be exactly 0..C-1
  kSubsetOnly,  // evaluation files may hold any subset of the trained classes
};

// CSV contract: a header naming the feature columns followed by `label`,
// comma separated, no quoting, integer fields. Blank lines are skipped.
// Errors carry `<source>:<line>:` prefixes.
// With kSubsetOnly, class_count is the largest label plus one.
Dataset parse_dataset(std::istream& in, const std::string& source = "<input>",
                      LabelCheck labels = LabelCheck::kDense);
Dataset load_dataset(const std::filesystem::path& path, LabelCheck labels = LabelCheck::kDense);

}  // namespace unary::harness
