/*
 * Copyright 2026 The moteval Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "moteval/cli.hpp"

namespace {

using moteval::Benchmark;
using moteval::OutputFormat;

const std::map<std::string, Benchmark> kBenchmarks = {
    {"MOT15", Benchmark::MOT15}, {"MOT16", Benchmark::MOT16}, {"MOT17", Benchmark::MOT17}};
const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

// Enum-valued options are read as names and mapped after parsing.
struct Names {
  std::string benchmark = "MOT17";
  std::string format = "text";
  bool lenient = false;
};

CLI::Option* add_benchmark(CLI::App& cmd, Names& names) {
  return cmd.add_option("--benchmark,-b", names.benchmark, "MOT15, MOT16 or MOT17")
      ->check(CLI::IsMember(kBenchmarks, CLI::ignore_case));
}

CLI::Option* add_format(CLI::App& cmd, Names& names) {
  return cmd.add_option("--format,-f", names.format, "text, csv or json")
      ->check(CLI::IsMember(kFormats, CLI::ignore_case));
}

// IsMember with ignore_case rewrites the value to the canonical key.
void apply(const Names& names, Benchmark& benchmark, OutputFormat& format) {
  benchmark = kBenchmarks.at(names.benchmark);
  format = kFormats.at(names.format);
}

void add_run_options(CLI::App& cmd, moteval::cli::RunConfig& cfg, Names& names) {
  cmd.add_option("--gt", cfg.gt_root, "Benchmark root with seqmap.txt, gt/ and det/")
      ->required();
  cmd.add_option("--results", cfg.results, "Tracker result directory (repeatable)")
      ->required();
  add_benchmark(cmd, names);
  add_format(cmd, names);
  cmd.add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  cmd.add_option("--threshold", cfg.iou_threshold, "IoU matching threshold")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--jobs,-j", cfg.jobs, "Sequences evaluated in parallel")
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--lenient", names.lenient, "Accept extra columns and unknown class codes");
}

int finish(const moteval::cli::CommandResult& r, bool to_stdout) {
  if (to_stdout) std::cout << r.output;
  std::cerr << r.diagnostics;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-object tracking evaluation (CLEAR-MOT, identity and detector metrics)"};
  app.require_subcommand(1);

  moteval::cli::RunConfig eval_cfg;
  Names eval_names;
  auto* evaluate = app.add_subcommand("evaluate", "Score tracker results against ground truth");
  add_run_options(*evaluate, eval_cfg, eval_names);

  moteval::cli::RunConfig err_cfg;
  Names err_names;
  auto* error_analysis =
      app.add_subcommand("error-analysis", "Tracker FP/FN relative to the public detections");
  add_run_options(*error_analysis, err_cfg, err_names);

  std::string submission;
  Benchmark val_benchmark = Benchmark::MOT17;
  OutputFormat val_format = OutputFormat::Text;
  std::vector<std::string> sequences;
  auto* validate = app.add_subcommand("validate", "Check a submission archive or directory");
  validate->add_option("path", submission, "ZIP archive or directory")->required();
  Names val_names;
  add_benchmark(*validate, val_names);
  validate->add_option("--sequences", sequences,
                       "Expected file stems (default: the benchmark's test set)")
      ->delimiter(',');
  add_format(*validate, val_names);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : moteval::cli::kInputError;
  }

  try {
    if (evaluate->parsed()) {
      apply(eval_names, eval_cfg.benchmark, eval_cfg.format);
      if (eval_names.lenient) eval_cfg.mode = moteval::ParseMode::Lenient;
      return finish(moteval::cli::cmd_evaluate(eval_cfg), !eval_cfg.output);
    }
    if (error_analysis->parsed()) {
      apply(err_names, err_cfg.benchmark, err_cfg.format);
      if (err_names.lenient) err_cfg.mode = moteval::ParseMode::Lenient;
      return finish(moteval::cli::cmd_error_analysis(err_cfg), !err_cfg.output);
    }
    if (validate->parsed()) {
      apply(val_names, val_benchmark, val_format);
      std::optional<std::vector<std::string>> expected;
      if (!sequences.empty()) expected = sequences;
      return finish(moteval::cli::cmd_validate(submission, val_benchmark, expected, val_format),
                    true);
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return moteval::cli::kInternalError;
  }
  return moteval::cli::kInternalError;
}
