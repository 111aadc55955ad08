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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "unary/cc4.h"

namespace unary::cc4 {

// Plain-text model format:
//   CC4 1 <n> <h> <m> <r>
//   h lines of n integers (hidden rows, bias weight last)
//   m lines of h integers in {-1, 1} (output rows)
// Fields are separated by single spaces; every line ends with '\n'.

void save(const Network& net, std::ostream& out);
std::string to_text(const Network& net);
void save_file(const Network& net, const std::filesystem::path& path);

/// Throws std::runtime_error with a line number on malformed input, and the
/// Network constructor's errors when the weights break an invariant.
Network load(std::istream& in);
Network from_text(const std::string& text);
Network load_file(const std::filesystem::path& path);

}  // namespace unary::cc4
