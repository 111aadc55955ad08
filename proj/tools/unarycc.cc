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

// unarycc: unary codes, reference encoders and CC4 networks from the command line.
//
// Exit codes: 0 success, 1 usage or input error, 2 property failure.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "unary/cc4.h"
#include "unary/cc4_io.h"
#include "unary/codebook.h"
#include "unary/dataset.h"
#include "unary/evaluate.h"
#include "unary/hamming.h"
#include "unary/property_checks.h"
#include "unary/quantize.h"
#include "unary/sweep.h"
#include "unary/tables.h"
#include "unary/unary_codes.h"

namespace {

using namespace unary;
using namespace unary::harness;

constexpr int kUsageError = 1;
constexpr int kPropertyFailure = 2;

std::string quantizer_path(const std::string& model) { return model + ".quant"; }

struct QuantOptions {
  std::size_t bins = 4;
  std::optional<std::size_t> length;
  std::string family = "fixed";
  bool clamp = false;

  QuantizationSpec spec() const {
    QuantizationSpec q;
    q.bins = bins;
    q.length = length.value_or(bins);
    q.family = parse_family(family);
    q.clamp = clamp;
    return q;
  }
};

void add_quant_options(CLI::App* cmd, QuantOptions& q) {
  cmd->add_option("--bins", q.bins, "Bins per feature")->check(CLI::PositiveNumber);
  cmd->add_option("--length", q.length, "Code length per feature (default: bins)");
  cmd->add_option("--family", q.family, "Feature code family")
      ->check(CLI::IsMember({"fixed", "one-hot"}));
  cmd->add_flag("--clamp", q.clamp, "Clamp out-of-range feature values instead of failing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unary codes and CC4 corner-classification networks"};
  app.require_subcommand(1);

  // encode / decode
  std::string family;
  std::uint64_t n = 0;
  std::optional<std::size_t> length;
  std::uint64_t k = 1;
  std::optional<std::uint64_t> max_value;
  std::string word;

  auto* encode = app.add_subcommand("encode", "Encode a value");
  encode->add_option("--family", family)->required()->check(
      CLI::IsMember({"basic", "fixed", "one-hot", "generalized"}));
  encode->add_option("--n", n, "Value to encode")->required();
  encode->add_option("--length", length, "Code length (fixed, one-hot; padding for basic)");
  encode->add_option("--k", k, "Repetition factor (generalized)")->check(CLI::PositiveNumber);
  encode->add_option("--max", max_value, "Largest encodable value N (generalized; default n)");

  auto* decode = app.add_subcommand("decode", "Decode a word");
  decode->add_option("--family", family)->required()->check(
      CLI::IsMember({"basic", "fixed", "one-hot", "generalized"}));
  decode->add_option("--word", word, "Bit string")->required();
  decode->add_option("--k", k, "Repetition factor (generalized)")->check(CLI::PositiveNumber);

  int which = 0;
  auto* table = app.add_subcommand("table", "Print a reference code table");
  table->add_option("--which", which)->required()->check(CLI::IsMember({1, 2}));

  std::string data_path, model_path, input_bits;
  std::int64_t radius = 0;
  QuantOptions quant;
  auto* train = app.add_subcommand("train", "Train a CC4 network on a CSV dataset");
  train->add_option("--data", data_path)->required();
  train->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  train->add_option("--out", model_path)->required();
  add_quant_options(train, quant);

  auto* predict = app.add_subcommand("predict", "Run a trained network on one input word");
  predict->add_option("--model", model_path)->required();
  predict->add_option("--input", input_bits)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a trained network on a CSV dataset");
  eval->add_option("--model", model_path)->required();
  eval->add_option("--data", data_path)->required();
  eval->add_flag("--clamp", quant.clamp, "Clamp out-of-range feature values");

  std::int64_t r_min = 0, r_max = 0;
  std::size_t holdout_every = 4;
  auto* sweep = app.add_subcommand("sweep", "Train and evaluate over a range of radii");
  sweep->add_option("--data", data_path)->required();
  sweep->add_option("--r-min", r_min)->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--r-max", r_max)->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--holdout-every", holdout_every,
                    "Hold out every k-th row for evaluation (0 or 1: none)");
  add_quant_options(sweep, quant);

  std::string grid_text, report_path;
  bool machine = false;
  auto* check = app.add_subcommand("check", "Run the exhaustive property checks");
  check->add_option("--grid", grid_text, "key=value;... (see README)");
  check->add_flag("--machine", machine, "Print the tab-separated machine format");
  check->add_option("--report", report_path, "Also write the machine format to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*encode) {
      BitWord w{0};
      switch (parse_family(family)) {
        case CodeFamily::kBasic:
          w = encode_basic(n);
          if (length) w = pad_right(w, *length);
          break;
        case CodeFamily::kFixed:
          if (!length) throw CLI::ValidationError("--length", "required for the fixed family");
          w = encode_fixed(n, *length);
          break;
        case CodeFamily::kOneHot:
          if (!length) throw CLI::ValidationError("--length", "required for the one-hot family");
          w = encode_one_hot(n, *length);
          break;
        case CodeFamily::kGeneralized:
          w = encode_generalized(n, k, max_value.value_or(n));
          break;
      }
      std::cout << w << '\n';
    } else if (*decode) {
      BitWord w = BitWord::parse(word);
      std::uint64_t v = 0;
      switch (parse_family(family)) {
        case CodeFamily::kBasic: v = decode_basic(w); break;
        case CodeFamily::kFixed: v = decode_fixed(w); break;
        case CodeFamily::kOneHot: v = decode_one_hot(w); break;
        case CodeFamily::kGeneralized: v = decode_generalized(w, k); break;
      }
      std::cout << v << '\n';
    } else if (*table) {
      std::cout << emit_table(static_cast<ReferenceTable>(which));
    } else if (*train) {
      Dataset ds = load_dataset(data_path);
      Quantizer q = Quantizer::fit(ds, quant.spec());
      auto samples = q.encode(ds);
      cc4::Network net = cc4::train(samples, radius);
      cc4::save_file(net, model_path);
      q.save_file(quantizer_path(model_path));
      std::cout << "trained " << net.hidden_count() << " hidden neurons, input width "
                << net.input_width() << ", " << net.output_count() << " outputs, r=" << radius
                << '\n'
                << evaluate(net, samples).to_text();
    } else if (*predict) {
      cc4::Network net = cc4::load_file(model_path);
      std::cout << cc4::infer(net, BitWord::parse(input_bits)) << '\n';
    } else if (*eval) {
      cc4::Network net = cc4::load_file(model_path);
      Quantizer saved = Quantizer::load_file(quantizer_path(model_path));
      QuantizationSpec spec = saved.spec();
      spec.clamp = quant.clamp;
      Quantizer q(spec, saved.ranges(), saved.class_count());
      Dataset ds = load_dataset(data_path, LabelCheck::kSubsetOnly);
      if (ds.class_count > q.class_count()) {
        throw std::invalid_argument("dataset has more classes than the model was trained on");
      }
      std::cout << evaluate(net, q.encode(ds)).to_text();
    } else if (*sweep) {
      if (r_max < r_min) throw CLI::ValidationError("--r-max", "must not be below --r-min");
      Dataset ds = load_dataset(data_path);
      auto split = split_holdout(quantize_encode(ds, quant.spec()), holdout_every);
      std::cout << format_sweep(sweep_radius(split.train, split.holdout, r_min, r_max));
    } else if (*check) {
      PropertyReport report = run_property_checks(parse_grid(grid_text));
      std::cout << (machine ? report.to_machine() : report.to_text());
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot write " + report_path);
        out << report.to_machine();
      }
      return report.all_passed() ? 0 : kPropertyFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
