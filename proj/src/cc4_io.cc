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

#include "unary/cc4_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace unary::cc4 {
namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& why) {
  throw std::runtime_error("model line " + std::to_string(line) + ": " + why);
}

std::vector<std::int64_t> read_row(std::istream& in, std::size_t line_no, std::size_t expected) {
  std::string line;
  if (!std::getline(in, line)) parse_error(line_no, "unexpected end of file");
  std::istringstream fields(line);
  std::vector<std::int64_t> row;
  std::int64_t v = 0;
  while (fields >> v) row.push_back(v);
  if (!fields.eof()) parse_error(line_no, "non-integer field");
  if (row.size() != expected) {
    parse_error(line_no, "expected " + std::to_string(expected) + " values, found " +
                             std::to_string(row.size()));
  }
  return row;
}

void write_row(std::ostream& out, const std::vector<std::int64_t>& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out << ' ';
    out << row[j];
  }
  out << '\n';
}

}  // namespace

void save(const Network& net, std::ostream& out) {
  out << "CC4 1 " << net.input_width() << ' ' << net.hidden_count() << ' ' << net.output_count()
      << ' ' << net.radius() << '\n';
  for (const auto& row : net.hidden_weights()) write_row(out, row);
  for (const auto& row : net.output_weights()) write_row(out, row);
}

std::string to_text(const Network& net) {
  std::ostringstream out;
  save(net, out);
  return out.str();
}

void save_file(const Network& net, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  save(net, out);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Network load(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) parse_error(1, "empty model");
  std::istringstream fields(header);
  std::string magic;
  int version = 0;
  long long n = 0, h = 0, m = 0, r = 0;
  if (!(fields >> magic >> version >> n >> h >> m >> r) || magic != "CC4") {
    parse_error(1, "expected header 'CC4 1 <n> <h> <m> <r>'");
  }
  std::string extra;
  if (fields >> extra) parse_error(1, "trailing data in header");
  if (version != 1) parse_error(1, "unsupported model version " + std::to_string(version));
  if (n < 2 || h < 1 || m < 1 || r < 0) parse_error(1, "invalid dimensions");

  std::vector<std::vector<std::int64_t>> hidden;
  std::vector<std::vector<std::int64_t>> output;
  std::size_t line_no = 2;
  for (long long i = 0; i < h; ++i) hidden.push_back(read_row(in, line_no++, n));
  for (long long o = 0; o < m; ++o) output.push_back(read_row(in, line_no++, h));
  std::string rest;
  while (std::getline(in, rest)) {
    if (!rest.empty()) parse_error(line_no, "trailing data after output rows");
    ++line_no;
  }
  return Network(static_cast<std::size_t>(n), r, std::move(hidden), std::move(output));
}

Network from_text(const std::string& text) {
  std::istringstream in(text);
  return load(in);
}

Network load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model " + path.string());
  return load(in);
}

}  // namespace unary::cc4
