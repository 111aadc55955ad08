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

#include "unary/errors.h"

namespace unary {

LengthMismatch::LengthMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("length mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)),
      lhs_(lhs),
      rhs_(rhs) {}

DecodeError::DecodeError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace unary
