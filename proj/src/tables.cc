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

#include "unary/tables.h"

#include <sstream>

#include "unary/hamming.h"
#include "unary/unary_codes.h"

namespace unary::harness {

std::string emit_table(ReferenceTable which) {
  std::ostringstream out;
  switch (which) {
    case ReferenceTable::kDistanceComparison:
      // Three bits cover 1..7; the printed form drops the padding again.
      for (std::uint64_t n = 1; n <= 7; ++n) {
        out << n << '\t' << BitWord::ones(n) << '\t' << strip_leading_zeros(binary_encode(n, 3))
            << '\t' << strip_leading_zeros(gray_encode(n, 3)) << '\n';
      }
      break;
    case ReferenceTable::kUnaryCodes:
      for (std::uint64_t n = 0; n <= 10; ++n) {
        out << n << '\t' << encode_basic(n) << '\t' << encode_fixed(n, 10) << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace unary::harness
