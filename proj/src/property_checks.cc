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

#include "unary/property_checks.h"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "unary/cc4.h"
#include "unary/cc4_io.h"
#include "unary/codebook.h"
#include "unary/errors.h"
#include "unary/hamming.h"
#include "unary/lcg.h"
#include "unary/unary_codes.h"

namespace unary::harness {
namespace {

using cc4::TrainingSample;

// Integer-only distance oracle; deliberately independent of BitWord.
std::size_t popcount_distance(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::size_t>(std::popcount(a ^ b));
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

class Cell {
 public:
  Cell(std::string property, std::string params)
      : result_{std::move(property), std::move(params), true, {}, std::nullopt, {}} {}

  // Records the first failure only.
  void fail(std::string counterexample) {
    ++violations_;
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = std::move(counterexample);
    }
  }
  void checked(std::size_t n = 1) { checked_ += n; }
  void note(std::string text) { result_.note = std::move(text); }
  void measured(std::string text) { extra_ = std::move(text); }

  PropertyResult finish() {
    std::ostringstream m;
    m << "checked=" << checked_ << " violations=" << violations_;
    if (!extra_.empty()) m << ' ' << extra_;
    result_.measured = m.str();
    return std::move(result_);
  }

 private:
  PropertyResult result_;
  std::size_t checked_ = 0;
  std::size_t violations_ = 0;
  std::string extra_;
};

template <typename T>
std::string kv(std::string_view key, const T& value) {
  std::ostringstream out;
  out << key << '=' << value;
  return out.str();
}

// --- bit-vector layer ---------------------------------------------------------

PropertyResult check_metric(std::size_t length) {
  Cell cell("hamming_metric", kv("length", length));
  const std::size_t count = std::size_t{1} << length;
  std::vector<BitWord> words;
  for (std::size_t v = 0; v < count; ++v) words.push_back(from_uint(v, length));
  std::vector<std::size_t> d(count * count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      std::size_t dab = hamming_distance(words[a], words[b]).value;
      d[a * count + b] = dab;
      if (dab != popcount_distance(a, b) || (dab == 0) != (a == b)) {
        cell.fail(words[a].to_string() + "," + words[b].to_string());
      }
    }
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (d[a * count + b] != d[b * count + a]) {
        cell.fail("asymmetric " + words[a].to_string() + "," + words[b].to_string());
      }
      for (std::size_t c = 0; c < count; ++c) {
        cell.checked();
        if (d[a * count + c] > d[a * count + b] + d[b * count + c]) {
          cell.fail("triangle " + words[a].to_string() + "," + words[b].to_string() + "," +
                    words[c].to_string());
        }
      }
    }
  }
  return cell.finish();
}

PropertyResult check_gray_adjacency(std::size_t width) {
  Cell cell("gray_adjacency", kv("width", width));
  const std::uint64_t count = std::uint64_t{1} << width;
  for (std::uint64_t n = 0; n + 1 < count; ++n) {
    cell.checked();
    if (hamming_distance(gray_encode(n, width), gray_encode(n + 1, width)).value != 1) {
      cell.fail(kv("n", n));
    }
  }
  return cell.finish();
}

PropertyResult check_gray_roundtrip(std::size_t width) {
  Cell cell("gray_roundtrip", kv("width", width));
  for (std::uint64_t n = 0; n < (std::uint64_t{1} << width); ++n) {
    cell.checked();
    if (gray_decode(gray_encode(n, width)) != n) cell.fail(kv("n", n));
  }
  return cell.finish();
}

// Pairs quoted with the binary/Gray comparison: (near, far) with
// |near| < |far| but binary distance of near > far, and Gray distance 1 for both.
std::vector<PropertyResult> check_witnesses() {
  std::vector<PropertyResult> out;
  {
    Cell cell("binary_nonuniform_witness", "pairs=(3,4),(1,5) width=4");
    auto near = hamming_distance(binary_encode(3, 4), binary_encode(4, 4)).value;
    auto far = hamming_distance(binary_encode(1, 4), binary_encode(5, 4)).value;
    cell.checked(2);
    if (near != 3 || far != 1) cell.fail(kv("d34", near) + " " + kv("d15", far));
    cell.measured(kv("d(3,4)", near) + " " + kv("d(1,5)", far));
    out.push_back(cell.finish());
  }
  {
    Cell cell("gray_nonuniform_witness", "pairs=(3,4),(1,6) width=4");
    auto near = hamming_distance(gray_encode(3, 4), gray_encode(4, 4)).value;
    auto far = hamming_distance(gray_encode(1, 4), gray_encode(6, 4)).value;
    cell.checked(2);
    if (near != 1 || far != 1) cell.fail(kv("d34", near) + " " + kv("d16", far));
    cell.measured(kv("d(3,4)", near) + " " + kv("d(1,6)", far));
    out.push_back(cell.finish());
  }
  return out;
}

// --- unary codes ------------------------------------------------------------------

PropertyResult check_uniform_distance(std::size_t length) {
  Cell cell("uniform_distance", kv("L", length));
  for (std::uint64_t x = 0; x <= length; ++x) {
    BitWord wx = encode_fixed(x, length);
    for (std::uint64_t y = 0; y <= length; ++y) {
      cell.checked();
      if (hamming_distance(wx, encode_fixed(y, length)).value != abs_diff(x, y)) {
        cell.fail(kv("x", x) + " " + kv("y", y));
      }
    }
  }
  return cell.finish();
}

PropertyResult check_weight_monotone(std::size_t length) {
  Cell cell("weight_monotone", kv("L", length));
  for (std::uint64_t y = 0; y < length; ++y) {
    cell.checked();
    if (!(hamming_weight(encode_fixed(y + 1, length)) > hamming_weight(encode_fixed(y, length)))) {
      cell.fail(kv("y", y));
    }
  }
  return cell.finish();
}

PropertyResult check_unary_roundtrips(std::size_t length) {
  Cell cell("unary_roundtrip", kv("max", length));
  for (std::uint64_t n = 0; n <= length; ++n) {
    cell.checked(2);
    if (decode_basic(encode_basic(n)) != n) cell.fail("basic " + kv("n", n));
    if (decode_fixed(encode_fixed(n, length)) != n) cell.fail("fixed " + kv("n", n));
  }
  return cell.finish();
}

PropertyResult check_thermometer(std::size_t length) {
  Cell cell("thermometer_equivalence", kv("L", length));
  for (std::uint64_t v = 1; v <= length; ++v) {
    cell.checked();
    if (one_hot_to_thermometer(encode_one_hot(v, length)) != reverse(encode_fixed(v, length))) {
      cell.fail(kv("v", v));
    }
  }
  return cell.finish();
}

PropertyResult check_generalized_scaling(std::uint64_t k_max, std::uint64_t max_value) {
  Cell cell("generalized_scaling", kv("k", "1.." + std::to_string(k_max)) + " " +
                                       kv("N", "0.." + std::to_string(max_value)));
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    for (std::uint64_t n_max = 0; n_max <= max_value; ++n_max) {
      for (std::uint64_t x = 0; x <= n_max; ++x) {
        BitWord wx = encode_generalized(x, k, n_max);
        for (std::uint64_t y = 0; y <= n_max; ++y) {
          cell.checked();
          if (hamming_distance(wx, encode_generalized(y, k, n_max)).value != k * abs_diff(x, y)) {
            cell.fail(kv("k", k) + " " + kv("N", n_max) + " " + kv("x", x) + " " + kv("y", y));
          }
        }
      }
    }
  }
  return cell.finish();
}

// The claimed minimum distance of the k-repetition code is k-1. The audit
// reports what the padded codebook actually achieves; it fails only if the
// enumeration disagrees with the k*|x-y| law, not if the claim is off.
PropertyResult audit_generalized_min_distance(std::uint64_t k, std::uint64_t max_value) {
  Cell cell("generalized_min_distance", kv("k", k) + " " + kv("N", max_value));
  Codebook book = build_codebook({CodeFamily::kGeneralized, max_value, std::nullopt, k});
  std::size_t measured = min_pairwise_distance(book).value;
  std::size_t pairs = book.words().size() * (book.words().size() - 1) / 2;
  cell.checked(pairs);
  if (measured != k) cell.fail(kv("measured", measured) + " " + kv("expected", k));
  const std::uint64_t claimed = k - 1;
  cell.measured(kv("min_distance", measured) + " " + kv("claimed", claimed));
  cell.note(measured == claimed
                ? "measured value agrees with the claimed k-1"
                : "measured minimum distance " + std::to_string(measured) +
                      " differs from the claimed k-1 = " + std::to_string(claimed));
  return cell.finish();
}

std::vector<PropertyResult> check_codebook_distances() {
  std::vector<PropertyResult> out;
  {
    Cell cell("codebook_min_distance", "family=fixed N=10 L=10");
    auto d = min_pairwise_distance(build_codebook({CodeFamily::kFixed, 10, 10, 1})).value;
    cell.checked();
    if (d != 1) cell.fail(kv("measured", d));
    cell.measured(kv("min_distance", d));
    out.push_back(cell.finish());
  }
  {
    Cell cell("codebook_min_distance", "family=one-hot L=4");
    auto d = min_pairwise_distance(build_codebook({CodeFamily::kOneHot, 4, 4, 1})).value;
    cell.checked();
    if (d != 2) cell.fail(kv("measured", d));
    cell.measured(kv("min_distance", d));
    out.push_back(cell.finish());
  }
  return out;
}

// --- CC4 ------------------------------------------------------------------------

struct RandomSet {
  std::vector<std::uint64_t> inputs;
  std::vector<TrainingSample> samples;
};

constexpr unsigned kOutputBits = 3;

RandomSet random_set(Lcg64& rng, std::size_t width, std::size_t max_samples) {
  RandomSet set;
  std::size_t count = 1 + rng.below(max_samples);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t in = rng.bits(static_cast<unsigned>(width));
    std::uint64_t out = rng.bits(kOutputBits);
    set.inputs.push_back(in);
    set.samples.push_back({from_uint(in, width), from_uint(out, kOutputBits)});
  }
  return set;
}

std::string describe_set(const RandomSet& set) {
  std::string s;
  for (const auto& sample : set.samples) {
    if (!s.empty()) s += ',';
    s += sample.input.to_string() + "->" + sample.output.to_string();
  }
  return s;
}

// Hidden neuron i fires on x iff d(x, x_i) <= r, over the whole hypercube.
PropertyResult check_radius_law(std::size_t width, std::int64_t r, std::size_t sets,
                                std::size_t max_samples, std::uint64_t seed) {
  Cell cell("radius_law", kv("n", width) + " " + kv("r", r) + " " + kv("sets", sets));
  Lcg64 rng(seed);
  for (std::size_t s = 0; s < sets; ++s) {
    RandomSet set = random_set(rng, width, max_samples);
    cc4::Network net = cc4::train(set.samples, r);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << width); ++x) {
      BitWord fired = cc4::hidden_activations(net, from_uint(x, width));
      for (std::size_t i = 0; i < set.inputs.size(); ++i) {
        cell.checked();
        bool expected = popcount_distance(x, set.inputs[i]) <= static_cast<std::size_t>(r);
        if (fired[i] != expected) {
          cell.fail("set=" + describe_set(set) + " x=" + from_uint(x, width).to_string() +
                    " " + kv("neuron", i));
        }
      }
    }
  }
  return cell.finish();
}

// Serialized bias weight equals r - s + 1; r + 1 for the all-zero vector.
PropertyResult check_bias_rule(std::size_t vectors, std::uint64_t seed) {
  Cell cell("bias_rule", kv("vectors", vectors) + " +zero");
  Lcg64 rng(seed);
  auto check_one = [&cell](std::uint64_t in, std::size_t width, std::int64_t r) {
    std::vector<TrainingSample> one{{from_uint(in, width), BitWord{1}}};
    cc4::Network loaded = cc4::from_text(cc4::to_text(cc4::train(one, r)));
    std::int64_t expected = r - std::popcount(in) + 1;
    cell.checked();
    if (loaded.bias_weight(0) != expected) {
      cell.fail(from_uint(in, width).to_string() + " " + kv("r", r) + " " +
                kv("bias", loaded.bias_weight(0)));
    }
  };
  for (std::size_t v = 0; v < vectors; ++v) {
    std::size_t width = 1 + rng.below(16);
    std::int64_t r = static_cast<std::int64_t>(rng.below(6));
    check_one(rng.bits(static_cast<unsigned>(width)), width, r);
  }
  for (std::int64_t r = 0; r <= 5; ++r) check_one(0, 8, r);
  return cell.finish();
}

// On a training input, the output reproduces the sample's bits when every
// covering region agrees with it; otherwise it is the step of the summed
// +/-1 votes of the covering regions.
PropertyResult check_training_reproduction(std::size_t width, std::int64_t r, std::size_t sets,
                                           std::size_t max_samples, std::uint64_t seed) {
  Cell cell("training_reproduction", kv("n", width) + " " + kv("r", r) + " " + kv("sets", sets));
  Lcg64 rng(seed);
  std::size_t reproduced = 0, conflicted = 0;
  for (std::size_t s = 0; s < sets; ++s) {
    RandomSet set = random_set(rng, width, max_samples);
    cc4::Network net = cc4::train(set.samples, r);
    for (std::size_t j = 0; j < set.inputs.size(); ++j) {
      std::vector<std::int64_t> votes(kOutputBits, 0);
      bool conflict = false;
      for (std::size_t i = 0; i < set.inputs.size(); ++i) {
        if (popcount_distance(set.inputs[j], set.inputs[i]) > static_cast<std::size_t>(r)) continue;
        conflict |= set.samples[i].output != set.samples[j].output;
        for (std::size_t o = 0; o < kOutputBits; ++o) votes[o] += set.samples[i].output[o] ? 1 : -1;
      }
      std::vector<std::uint8_t> expected(kOutputBits);
      for (std::size_t o = 0; o < kOutputBits; ++o) expected[o] = votes[o] > 0;
      BitWord got = cc4::infer(net, set.samples[j].input);
      cell.checked();
      if (!conflict) {
        ++reproduced;
        if (got != set.samples[j].output) cell.fail("set=" + describe_set(set) + " " + kv("sample", j));
      } else {
        ++conflicted;
        if (got != BitWord(expected)) cell.fail("set=" + describe_set(set) + " " + kv("sample", j));
      }
    }
  }
  cell.measured(kv("reproduced", reproduced) + " " + kv("conflicted", conflicted));
  return cell.finish();
}

PropertyResult check_complement_symmetry(std::size_t width, std::size_t sets,
                                         std::size_t max_samples, std::uint64_t seed) {
  Cell cell("complement_symmetry", kv("n", width) + " " + kv("sets", sets));
  Lcg64 rng(seed);
  for (std::size_t s = 0; s < sets; ++s) {
    RandomSet set = random_set(rng, width, max_samples);
    std::size_t i = rng.below(set.samples.size());
    auto flipped = set.samples;
    std::vector<std::uint8_t> bits(flipped[i].output.bits().begin(), flipped[i].output.bits().end());
    for (auto& b : bits) b ^= 1;
    flipped[i].output = BitWord(std::move(bits));
    cell.checked();
    if (cc4::complement_sample_output(cc4::train(set.samples, 1), i) != cc4::train(flipped, 1)) {
      cell.fail("set=" + describe_set(set) + " " + kv("sample", i));
    }
  }
  return cell.finish();
}

// Training one set equals training its halves and stacking the hidden rows:
// every weight depends on its own sample only.
PropertyResult check_one_pass(std::size_t width, std::size_t sets, std::size_t max_samples,
                              std::uint64_t seed) {
  Cell cell("one_pass_independence", kv("n", width) + " " + kv("sets", sets));
  Lcg64 rng(seed);
  for (std::size_t s = 0; s < sets; ++s) {
    RandomSet set = random_set(rng, width, max_samples + 1);
    if (set.samples.size() < 2) continue;
    std::size_t cut = 1 + rng.below(set.samples.size() - 1);
    std::span<const TrainingSample> all(set.samples);
    auto whole = cc4::train(all, 2);
    auto head = cc4::train(all.first(cut), 2);
    auto tail = cc4::train(all.subspan(cut), 2);
    auto rows = head.hidden_weights();
    rows.insert(rows.end(), tail.hidden_weights().begin(), tail.hidden_weights().end());
    cell.checked();
    if (rows != whole.hidden_weights()) cell.fail("set=" + describe_set(set) + " " + kv("cut", cut));
  }
  return cell.finish();
}

PropertyResult check_region(std::size_t width, std::int64_t r, std::uint64_t seed) {
  Cell cell("generalization_region", kv("n", width) + " " + kv("r", r));
  Lcg64 rng(seed);
  std::uint64_t center = rng.bits(static_cast<unsigned>(width));
  std::vector<TrainingSample> one{{from_uint(center, width), BitWord{1}}};
  auto region = cc4::generalization_region(cc4::train(one, r), 0);
  std::vector<BitWord> expected;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << width); ++x) {
    if (popcount_distance(x, center) <= static_cast<std::size_t>(r)) expected.push_back(from_uint(x, width));
  }
  cell.checked(std::size_t{1} << width);
  if (region != expected) cell.fail("center=" + from_uint(center, width).to_string());
  cell.measured(kv("size", region.size()));
  return cell.finish();
}

// --- grid parsing -------------------------------------------------------------

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T v{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("grid key '" + std::string(key) + "': '" + std::string(text) +
                                "' is not an integer");
  }
  return v;
}

template <typename T>
std::pair<T, T> parse_range(std::string_view key, std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    T v = parse_number<T>(key, text);
    return {v, v};
  }
  return {parse_number<T>(key, text.substr(0, dots)), parse_number<T>(key, text.substr(dots + 2))};
}

}  // namespace

void CheckGrid::validate() const {
  auto guard = [](bool ok, const std::string& what) {
    if (!ok) throw RangeError("grid guard exceeded: " + what);
  };
  guard(metric_max_length >= 1 && metric_max_length <= 8, "metric length must be in 1..8");
  guard(gray_max_width >= 1 && gray_max_width <= 16, "gray width must be in 1..16");
  guard(uniform_length >= 1 && uniform_length <= 64, "L must be in 1..64");
  guard(k_min >= 1 && k_min <= k_max && k_max <= 5, "k range must lie in 1..5");
  guard(audit_max_value >= 1 && audit_max_value <= 16, "N must be in 1..16");
  guard(scaling_max_value <= 16, "scaleN must be at most 16");
  guard(!pattern_widths.empty(), "widths must not be empty");
  for (auto w : pattern_widths) guard(w >= 1 && w <= 12, "pattern widths must be in 1..12");
  guard(r_min >= 0 && r_min <= r_max, "r range must be nonnegative and ordered");
  guard(sets >= 1, "sets must be positive");
  guard(max_samples >= 1, "samples must be positive");
}

CheckGrid parse_grid(std::string_view text) {
  CheckGrid grid;
  while (!text.empty()) {
    auto semi = text.find(';');
    std::string_view entry = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("grid entry '" + std::string(entry) + "' is not key=value");
    }
    std::string_view key = entry.substr(0, eq);
    std::string_view value = entry.substr(eq + 1);
    if (key == "metric") {
      grid.metric_max_length = parse_number<std::size_t>(key, value);
    } else if (key == "gray") {
      grid.gray_max_width = parse_number<std::size_t>(key, value);
    } else if (key == "L") {
      grid.uniform_length = parse_number<std::size_t>(key, value);
    } else if (key == "k") {
      std::tie(grid.k_min, grid.k_max) = parse_range<std::uint64_t>(key, value);
    } else if (key == "N") {
      grid.audit_max_value = parse_number<std::uint64_t>(key, value);
    } else if (key == "scaleN") {
      grid.scaling_max_value = parse_number<std::uint64_t>(key, value);
    } else if (key == "widths") {
      grid.pattern_widths.clear();
      while (!value.empty()) {
        auto comma = value.find(',');
        grid.pattern_widths.push_back(parse_number<std::size_t>(key, value.substr(0, comma)));
        value = comma == std::string_view::npos ? std::string_view{} : value.substr(comma + 1);
      }
    } else if (key == "r") {
      std::tie(grid.r_min, grid.r_max) = parse_range<std::int64_t>(key, value);
    } else if (key == "sets") {
      grid.sets = parse_number<std::size_t>(key, value);
    } else if (key == "samples") {
      grid.max_samples = parse_number<std::size_t>(key, value);
    } else if (key == "bias") {
      grid.bias_vectors = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      grid.seed = parse_number<std::uint64_t>(key, value);
    } else {
      throw std::invalid_argument("unknown grid key '" + std::string(key) + "'");
    }
  }
  grid.validate();
  return grid;
}

std::size_t PropertyReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += !r.passed;
  return n;
}

std::string PropertyReport::to_machine() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.property << '\t' << r.params << '\t' << (r.passed ? "pass" : "fail") << ' '
        << r.measured;
    if (r.counterexample) out << " counterexample=" << *r.counterexample;
    if (!r.note.empty()) out << " note=" << r.note;
    out << '\n';
  }
  return out.str();
}

std::string PropertyReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.property << " [" << r.params << "] " << r.measured
        << '\n';
    if (r.counterexample) out << "     counterexample: " << *r.counterexample << '\n';
    if (!r.note.empty()) out << "     note: " << r.note << '\n';
  }
  out << results.size() - failures() << '/' << results.size() << " checks passed\n";
  return out.str();
}

PropertyReport run_property_checks(const CheckGrid& grid) {
  grid.validate();
  PropertyReport report;
  auto& out = report.results;

  for (std::size_t len = 1; len <= grid.metric_max_length; ++len) out.push_back(check_metric(len));
  for (std::size_t w = 1; w <= grid.gray_max_width; ++w) out.push_back(check_gray_adjacency(w));
  out.push_back(check_gray_roundtrip(8));
  for (auto& r : check_witnesses()) out.push_back(std::move(r));

  out.push_back(check_uniform_distance(grid.uniform_length));
  out.push_back(check_weight_monotone(grid.uniform_length));
  out.push_back(check_unary_roundtrips(grid.uniform_length));
  out.push_back(check_thermometer(grid.uniform_length));
  out.push_back(check_generalized_scaling(grid.k_max, grid.scaling_max_value));
  for (auto& r : check_codebook_distances()) out.push_back(std::move(r));
  for (std::uint64_t k = grid.k_min; k <= grid.k_max; ++k) {
    out.push_back(audit_generalized_min_distance(k, grid.audit_max_value));
  }

  // Each CC4 cell gets its own stream derived from the seed and its grid
  // coordinates, so results do not depend on which cells are enabled.
  auto cell_seed = [&grid](std::uint64_t tag, std::uint64_t a, std::uint64_t b) {
    Lcg64 mix(grid.seed ^ (tag << 48) ^ (a << 24) ^ b);
    return mix.next();
  };
  for (auto width : grid.pattern_widths) {
    for (std::int64_t r = grid.r_min; r <= grid.r_max; ++r) {
      auto ur = static_cast<std::uint64_t>(r);
      out.push_back(check_radius_law(width, r, grid.sets, grid.max_samples, cell_seed(1, width, ur)));
      out.push_back(check_training_reproduction(width, r, grid.sets, grid.max_samples,
                                                cell_seed(2, width, ur)));
      out.push_back(check_region(width, r, cell_seed(3, width, ur)));
    }
    out.push_back(check_complement_symmetry(width, grid.sets, grid.max_samples, cell_seed(4, width, 0)));
    out.push_back(check_one_pass(width, grid.sets, grid.max_samples, cell_seed(5, width, 0)));
  }
  out.push_back(check_bias_rule(grid.bias_vectors, cell_seed(6, 0, 0)));
  return report;
}

}  // namespace unary::harness
