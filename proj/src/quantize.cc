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

#include "unary/quantize.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "unary/errors.h"
#include "unary/unary_codes.h"

namespace unary::harness {

void QuantizationSpec::validate() const {
  if (bins == 0) throw std::invalid_argument("bins must be positive");
  if (length < bins) {
    throw std::invalid_argument("code length " + std::to_string(length) +
                                " is shorter than bin count " + std::to_string(bins));
  }
  if (family != CodeFamily::kFixed && family != CodeFamily::kOneHot) {
    throw std::invalid_argument("quantization family must be fixed or one-hot");
  }
}

Quantizer::Quantizer(QuantizationSpec spec, std::vector<FeatureRange> ranges,
                     std::size_t class_count)
    : spec_(spec), ranges_(std::move(ranges)), class_count_(class_count) {
  spec_.validate();
  if (ranges_.empty()) throw std::invalid_argument("quantizer needs at least one feature");
  if (class_count_ == 0) throw std::invalid_argument("quantizer needs at least one class");
  for (std::size_t f = 0; f < ranges_.size(); ++f) {
    const auto& r = ranges_[f];
    if (r.max < r.min) throw std::invalid_argument("feature " + std::to_string(f) + " has max < min");
    if (r.max == r.min && spec_.bins > 1) {
      throw std::invalid_argument("feature " + std::to_string(f) +
                                  " has a degenerate range; use a single bin");
    }
  }
}

Quantizer Quantizer::fit(const Dataset& ds, const QuantizationSpec& spec) {
  return Quantizer(spec, ds.feature_ranges, ds.class_count);
}

std::size_t Quantizer::bin_index(std::size_t feature, std::int64_t value) const {
  const FeatureRange& r = ranges_.at(feature);
  if (value < r.min || value > r.max) {
    if (!spec_.clamp) {
      throw RangeError("feature " + std::to_string(feature) + " value " + std::to_string(value) +
                       " outside [" + std::to_string(r.min) + ", " + std::to_string(r.max) + "]");
    }
    value = value < r.min ? r.min : r.max;
  }
  __extension__ typedef __int128 Wide;
  Wide offset = Wide(value) - Wide(r.min);
  Wide span = Wide(r.max) - Wide(r.min) + 1;
  return static_cast<std::size_t>(offset * Wide(spec_.bins) / span);
}

BitWord Quantizer::encode_features(std::span<const std::int64_t> features) const {
  if (features.size() != ranges_.size()) throw LengthMismatch(features.size(), ranges_.size());
  std::vector<BitWord> segments;
  segments.reserve(features.size());
  for (std::size_t f = 0; f < features.size(); ++f) {
    std::size_t bin = bin_index(f, features[f]);
    segments.push_back(spec_.family == CodeFamily::kFixed ? encode_fixed(bin, spec_.length)
                                                          : encode_one_hot(bin + 1, spec_.length));
  }
  return concat(segments);
}

BitWord Quantizer::encode_label(std::uint64_t label) const {
  if (label >= class_count_) {
    throw RangeError("label " + std::to_string(label) + " outside 0.." +
                     std::to_string(class_count_ - 1));
  }
  return encode_one_hot(label + 1, class_count_);
}

std::vector<cc4::TrainingSample> Quantizer::encode(const Dataset& ds) const {
  std::vector<cc4::TrainingSample> samples;
  samples.reserve(ds.rows.size());
  for (const auto& row : ds.rows) {
    samples.push_back({encode_features(row.features), encode_label(row.label)});
  }
  return samples;
}

void Quantizer::save(std::ostream& out) const {
  out << "QUANT 1 " << family_name(spec_.family) << ' ' << spec_.bins << ' ' << spec_.length
      << ' ' << class_count_ << ' ' << ranges_.size() << '\n';
  for (const auto& r : ranges_) out << r.min << ' ' << r.max << '\n';
}

Quantizer Quantizer::load(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("quantizer: empty file");
  std::istringstream fields(header);
  std::string magic, family;
  int version = 0;
  QuantizationSpec spec;
  std::size_t classes = 0, features = 0;
  if (!(fields >> magic >> version >> family >> spec.bins >> spec.length >> classes >> features) ||
      magic != "QUANT" || version != 1) {
    throw std::runtime_error(
        "quantizer line 1: expected 'QUANT 1 <family> <bins> <length> <classes> <features>'");
  }
  spec.family = parse_family(family);
  std::vector<FeatureRange> ranges(features);
  for (std::size_t f = 0; f < features; ++f) {
    std::string line;
    std::int64_t lo = 0, hi = 0;
    if (!std::getline(in, line) || !(std::istringstream(line) >> lo >> hi)) {
      throw std::runtime_error("quantizer line " + std::to_string(f + 2) + ": expected '<min> <max>'");
    }
    ranges[f] = {lo, hi};
  }
  return Quantizer(spec, std::move(ranges), classes);
}

void Quantizer::save_file(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  save(out);
}

Quantizer Quantizer::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open quantizer " + path.string());
  return load(in);
}

std::vector<cc4::TrainingSample> quantize_encode(const Dataset& ds, const QuantizationSpec& spec) {
  return Quantizer::fit(ds, spec).encode(ds);
}

}  // namespace unary::harness
