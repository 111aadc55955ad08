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

#include <algorithm>
#include <sstream>

#include "gtest/gtest.h"
#include "unary/errors.h"
#include "unary/property_checks.h"

namespace unary::harness {
namespace {

const PropertyResult* find(const PropertyReport& report, const std::string& property,
                           const std::string& params) {
  for (const auto& r : report.results) {
    if (r.property == property && r.params == params) return &r;
  }
  return nullptr;
}

CheckGrid small_grid() {
  return parse_grid("metric=4;gray=6;L=16;k=2..3;N=8;scaleN=6;widths=4,8;r=0..2;sets=5;samples=5;bias=20;seed=9");
}

TEST(Grid, Defaults) {
  CheckGrid g = parse_grid("");
  EXPECT_EQ(g.uniform_length, 64u);
  EXPECT_EQ(g.pattern_widths, (std::vector<std::size_t>{4, 8, 10}));
  EXPECT_EQ(g.r_max, 3);
}

TEST(Grid, Parse) {
  CheckGrid g = small_grid();
  EXPECT_EQ(g.metric_max_length, 4u);
  EXPECT_EQ(g.k_min, 2u);
  EXPECT_EQ(g.k_max, 3u);
  EXPECT_EQ(g.pattern_widths, (std::vector<std::size_t>{4, 8}));
  EXPECT_EQ(g.r_min, 0);
  EXPECT_EQ(g.r_max, 2);
  EXPECT_EQ(g.seed, 9u);
  EXPECT_EQ(parse_grid("k=4").k_min, 4u);
}

TEST(Grid, Guards) {
  EXPECT_THROW(parse_grid("L=65"), RangeError);
  EXPECT_THROW(parse_grid("widths=13"), RangeError);
  EXPECT_THROW(parse_grid("k=1..6"), RangeError);
  EXPECT_THROW(parse_grid("r=3..1"), RangeError);
  EXPECT_THROW(parse_grid("metric=9"), RangeError);
  EXPECT_THROW(parse_grid("bogus=1"), std::invalid_argument);
  EXPECT_THROW(parse_grid("L"), std::invalid_argument);
  EXPECT_THROW(parse_grid("L=x"), std::invalid_argument);
}

TEST(Report, SmallGridPasses) {
  PropertyReport report = run_property_checks(small_grid());
  EXPECT_TRUE(report.all_passed()) << report.to_text();
  EXPECT_NE(find(report, "uniform_distance", "L=16"), nullptr);
  EXPECT_NE(find(report, "radius_law", "n=8 r=2 sets=5"), nullptr);
  EXPECT_NE(find(report, "bias_rule", "vectors=20 +zero"), nullptr);
}

TEST(Report, GeneralizedAuditReportsMeasuredAndClaim) {
  PropertyReport report = run_property_checks(small_grid());
  const PropertyResult* r = find(report, "generalized_min_distance", "k=3 N=8");
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->passed);
  EXPECT_NE(r->measured.find("min_distance=3"), std::string::npos) << r->measured;
  EXPECT_NE(r->measured.find("claimed=2"), std::string::npos);
  EXPECT_NE(r->note.find("differs"), std::string::npos);
}

TEST(Report, DeterministicForFixedSeed) {
  CheckGrid g = small_grid();
  EXPECT_EQ(run_property_checks(g).to_machine(), run_property_checks(g).to_machine());
  EXPECT_EQ(run_property_checks(g).to_text(), run_property_checks(g).to_text());
}

TEST(Report, SeedChangesRandomCells) {
  CheckGrid a = small_grid();
  CheckGrid b = a;
  b.seed = a.seed + 1;
  auto ra = run_property_checks(a), rb = run_property_checks(b);
  EXPECT_NE(find(ra, "radius_law", "n=8 r=1 sets=5")->measured,
            find(rb, "radius_law", "n=8 r=1 sets=5")->measured);
}

TEST(Report, MachineFormatHasThreeTabSeparatedFields) {
  PropertyReport report = run_property_checks(small_grid());
  std::istringstream in(report.to_machine());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 2) << line;
  }
  EXPECT_EQ(lines, report.results.size());
}

TEST(Report, FailuresCarryCounterexamples) {
  PropertyReport report;
  report.results.push_back({"demo", "x=1", false, "checked=1 violations=1", "0101", ""});
  report.results.push_back({"demo", "x=2", true, "checked=1 violations=0", std::nullopt, ""});
  EXPECT_EQ(report.failures(), 1u);
  EXPECT_FALSE(report.all_passed());
  EXPECT_NE(report.to_machine().find("demo\tx=1\tfail checked=1 violations=1 counterexample=0101"),
            std::string::npos);
  EXPECT_NE(report.to_text().find("1/2 checks passed"), std::string::npos);
}

}  // namespace
}  // namespace unary::harness
