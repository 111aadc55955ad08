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

#include <string>

namespace unary::harness {

enum class ReferenceTable {
  /// n = 1..7: basic unary (n ones), binary, Gray, leading zeros stripped.
  kDistanceComparison = 1,
  /// n = 0..10: terminated unary and fixed-length unary of length 10.
  kUnaryCodes = 2,
};

/// Tab-separated rows `<n>\t<code>...`, one per line.
std::string emit_table(ReferenceTable which);

}  // namespace unary::harness
