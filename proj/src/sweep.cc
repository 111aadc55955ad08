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

#include "unary/sweep.h"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "unary/hamming.h"

namespace unary::harness {

Split split_holdout(std::span<const cc4::TrainingSample> samples, std::size_t every) {
  Split split;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    bool held = every > 1 && i % every == every - 1;
    (held ? split.holdout : split.train).push_back(samples[i]);
  }
  return split;
}

std::uint64_t hamming_ball_size(std::size_t n, std::int64_t r) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (r < 0) return 0;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, d)
  bool binom_saturated = false;
  for (std::size_t d = 0; d <= n && d <= static_cast<std::size_t>(r); ++d) {
    if (d > 0) {
      // C(n, d) = C(n, d-1) * (n - d + 1) / d, exact in 128 bits for n < 64.
      __extension__ typedef unsigned __int128 Wide;
      Wide next = Wide(binom) * (n - d + 1) / d;
      if (binom_saturated || next > kMax) {
        binom_saturated = true;
        binom = kMax;
      } else {
        binom = static_cast<std::uint64_t>(next);
      }
    }
    total = (binom_saturated || total > kMax - binom) ? kMax : total + binom;
  }
  return total;
}

std::vector<SweepRow> sweep_radius(std::span<const cc4::TrainingSample> train,
                                   std::span<const cc4::TrainingSample> holdout,
                                   std::int64_t r_min, std::int64_t r_max) {
  if (r_min < 0 || r_max < r_min) throw std::invalid_argument("radius range is empty");
  if (train.empty()) throw std::invalid_argument("training set is empty");

  std::vector<std::size_t> pair_distance;
  std::vector<bool> pair_differs;
  for (std::size_t i = 0; i < train.size(); ++i) {
    for (std::size_t j = i + 1; j < train.size(); ++j) {
      pair_distance.push_back(hamming_distance(train[i].input, train[j].input).value);
      pair_differs.push_back(train[i].output != train[j].output);
    }
  }

  std::vector<SweepRow> rows;
  for (std::int64_t r = r_min; r <= r_max; ++r) {
    cc4::Network net = cc4::train(train, r);
    SweepRow row;
    row.radius = r;
    row.region_size = hamming_ball_size(net.pattern_width(), r);
    for (std::size_t p = 0; p < pair_distance.size(); ++p) {
      row.conflicting_pairs += pair_differs[p] && pair_distance[p] <= static_cast<std::size_t>(2 * r);
    }
    row.train = evaluate(net, train);
    if (!holdout.empty()) row.holdout = evaluate(net, holdout);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_sweep(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "r\tregion_size\tconflicting_pairs\ttrain_acc\ttrain_no_decision\tholdout_acc\t"
         "holdout_no_decision\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& row : rows) {
    out << row.radius << '\t' << row.region_size << '\t' << row.conflicting_pairs << '\t'
        << row.train.accuracy() << '\t' << row.train.no_decision << '\t';
    if (row.holdout) {
      out << row.holdout->accuracy() << '\t' << row.holdout->no_decision;
    } else {
      out << "-\t-";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace unary::harness
