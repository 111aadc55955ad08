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
#include <span>
#include <vector>

#include "unary/bit_word.h"
#include "unary/cc4.h"
#include "unary/codebook.h"
#include "unary/dataset.h"

namespace unary::harness {

/// Per-feature binning and unary coding. Each feature becomes a segment of
/// `length` bits; the encoded sample is the concatenation of the segments.
struct QuantizationSpec {
  std::size_t bins = 1;
  std::size_t length = 1;
  CodeFamily family = CodeFamily::kFixed;  // kFixed or kOneHot
  bool clamp = false;

  void validate() const;
};

/// A QuantizationSpec bound to the feature ranges and class count it was
/// fitted on, so held-out data is binned the same way as training data.
class Quantizer {
 public:
  Quantizer(QuantizationSpec spec, std::vector<FeatureRange> ranges, std::size_t class_count);
  static Quantizer fit(const Dataset& ds, const QuantizationSpec& spec);

  const QuantizationSpec& spec() const { return spec_; }
  const std::vector<FeatureRange>& ranges() const { return ranges_; }
  std::size_t class_count() const { return class_count_; }
  std::size_t input_width() const { return ranges_.size() * spec_.length; }

  /// floor((v - min) * bins / (max - min + 1)). Out-of-range values throw
  /// unless clamping is enabled.
  std::size_t bin_index(std::size_t feature, std::int64_t value) const;

  BitWord encode_features(std::span<const std::int64_t> features) const;

  /// One-hot over class_count bits; label c sets position c.
  BitWord encode_label(std::uint64_t label) const;

  std::vector<cc4::TrainingSample> encode(const Dataset& ds) const;

  // Sidecar format:
  //   QUANT 1 <family> <bins> <length> <classes> <features>
  //   <min> <max>          (one line per feature)
  void save(std::ostream& out) const;
  static Quantizer load(std::istream& in);
  void save_file(const std::filesystem::path& path) const;
  static Quantizer load_file(const std::filesystem::path& path);

 private:
  QuantizationSpec spec_;
  std::vector<FeatureRange> ranges_;
  std::size_t class_count_;
};

/// Fits on `ds` and encodes it.
std::vector<cc4::TrainingSample> quantize_encode(const Dataset& ds, const QuantizationSpec& spec);

}  // namespace unary::harness
