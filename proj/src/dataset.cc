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

#include "unary/dataset.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <string_view>

namespace unary::harness {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

Dataset parse_dataset(std::istream& in, const std::string& source, LabelCheck label_check) {
  auto fail = [&source](std::size_t line, const std::string& why) -> DatasetError {
    return DatasetError(source + ":" + std::to_string(line) + ": " + why);
  };

  Dataset ds;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::set<std::uint64_t> labels;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) continue;
    auto fields = split_fields(text);

    if (!have_header) {
      if (fields.size() < 2 || fields.back() != "label") {
        throw fail(line_no, "header must name at least one feature column followed by 'label'");
      }
      for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
        if (fields[i].empty()) throw fail(line_no, "empty column name");
        ds.feature_names.emplace_back(fields[i]);
      }
      have_header = true;
      continue;
    }

    if (fields.size() != ds.feature_names.size() + 1) {
      throw fail(line_no, "expected " + std::to_string(ds.feature_names.size() + 1) +
                              " fields (features then label), found " +
                              std::to_string(fields.size()));
    }
    DatasetRow row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      std::int64_t v = 0;
      auto f = fields[i];
      auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || end != f.data() + f.size()) {
        throw fail(line_no, "field " + std::to_string(i + 1) + " ('" + std::string(f) +
                                "') is not an integer");
      }
      if (i + 1 < fields.size()) {
        row.features.push_back(v);
      } else {
        if (v < 0) throw fail(line_no, "label must be nonnegative");
        row.label = static_cast<std::uint64_t>(v);
      }
    }
    labels.insert(row.label);
    ds.rows.push_back(std::move(row));
  }

  if (ds.rows.empty()) throw DatasetError(source + ": no rows");

  ds.class_count = *labels.rbegin() + 1;
  if (label_check == LabelCheck::kDense && ds.class_count != labels.size()) {
    throw DatasetError(source + ": labels must be dense in 0.." +
                       std::to_string(labels.size() - 1) + " but the largest is " +
                       std::to_string(*labels.rbegin()));
  }

  ds.feature_ranges.resize(ds.feature_names.size());
  for (std::size_t f = 0; f < ds.feature_names.size(); ++f) {
    auto [lo, hi] = std::minmax_element(ds.rows.begin(), ds.rows.end(),
                                        [f](const DatasetRow& a, const DatasetRow& b) {
                                          return a.features[f] < b.features[f];
                                        });
    ds.feature_ranges[f] = {lo->features[f], hi->features[f]};
  }
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path, LabelCheck labels) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset " + path.string());
  return parse_dataset(in, path.string(), labels);
}

}  // namespace unary::harness
