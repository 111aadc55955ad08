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
#include <stdexcept>
#include <string>

namespace unary {

// Two words that must be compared position by position have different lengths.
class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs);

  std::size_t lhs() const { return lhs_; }
  std::size_t rhs() const { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

// A numeric argument falls outside the domain of an encoder.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A word does not have the shape its code family requires. `position` is the
// index of the first offending bit, or the word length when the problem is a
// missing bit (e.g. no terminating 0).
class DecodeError : public std::invalid_argument {
 public:
  DecodeError(const std::string& what, std::size_t position);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace unary
