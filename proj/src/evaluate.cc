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

#include "unary/evaluate.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "unary/errors.h"
#include "unary/hamming.h"

namespace unary::harness {
namespace {

std::string rate(std::size_t num, std::size_t den) {
  std::ostringstream out;
  out << num << '/' << den << " (" << std::fixed << std::setprecision(4)
      << (den ? static_cast<double>(num) / static_cast<double>(den) : 0.0) << ')';
  return out.str();
}

}  // namespace

double EvaluationReport::accuracy() const {
  return total ? static_cast<double>(exact_matches) / static_cast<double>(total) : 0.0;
}

std::string EvaluationReport::to_text() const {
  std::ostringstream out;
  out << "exact_match " << rate(exact_matches, total) << '\n';
  out << "no_decision " << no_decision << '\n';
  for (const auto& c : per_class) {
    out << "class " << c.expected << ' ' << rate(c.correct, c.total) << '\n';
  }
  return out.str();
}

EvaluationReport evaluate(const cc4::Network& net, std::span<const cc4::TrainingSample> samples) {
  if (samples.empty()) throw std::invalid_argument("evaluation set is empty");
  EvaluationReport report;
  std::map<BitWord, ClassTally, std::greater<>> classes;
  for (const auto& s : samples) {
    if (s.output.size() != net.output_count()) throw LengthMismatch(s.output.size(), net.output_count());
    BitWord got = cc4::infer(net, s.input);
    bool hit = got == s.output;
    ++report.total;
    report.exact_matches += hit;
    report.no_decision += hamming_weight(got).value == 0;
    auto [it, inserted] = classes.try_emplace(s.output, ClassTally{s.output});
    ++it->second.total;
    it->second.correct += hit;
  }
  for (auto& [word, tally] : classes) report.per_class.push_back(tally);
  return report;
}

}  // namespace unary::harness
