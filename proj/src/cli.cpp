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

#include "moteval/cli.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "moteval/evaluate.hpp"

namespace moteval::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> check_config(const RunConfig& cfg) {
  std::vector<std::string> problems;
  if (!fs::is_directory(cfg.gt_root)) {
    problems.push_back("ground-truth root not found: " + cfg.gt_root.string());
  }
  if (cfg.results.empty()) problems.push_back("no result directories given");
  for (const auto& r : cfg.results) {
    if (!fs::is_directory(r)) problems.push_back("result directory not found: " + r.string());
  }
  if (!(cfg.iou_threshold > 0.0 && cfg.iou_threshold <= 1.0)) {
    problems.push_back("IoU threshold must lie in (0, 1]");
  }
  if (cfg.jobs < 1) problems.push_back("jobs must be at least 1");
  return problems;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

CommandResult input_error(std::vector<std::string> problems) {
  return {kInputError, {}, join_lines(problems)};
}

void emit(const RunConfig& cfg, CommandResult& result) {
  if (!cfg.output) return;
  std::ofstream out(*cfg.output, std::ios::binary);
  if (!out) {
    result.exit_code = kInputError;
    result.diagnostics += "cannot write " + cfg.output->string() + "\n";
    return;
  }
  out << result.output;
}

MatchingConfig matching_config(const RunConfig& cfg) {
  MatchingConfig m;
  m.iou_threshold = cfg.iou_threshold;
  return m;
}

SequenceSet load_results(const RunConfig& cfg, const fs::path& results_dir) {
  LoadOptions opts;
  opts.results_dir = results_dir;
  opts.load_detections = false;
  opts.mode = cfg.mode;
  return load_sequence_set(cfg.gt_root, cfg.benchmark, opts);
}

}  // namespace

std::string tracker_name(const fs::path& results_dir) {
  auto p = results_dir;
  if (!p.has_filename()) p = p.parent_path();
  return p.filename().string();
}

CommandResult cmd_evaluate(const RunConfig& cfg) {
  if (auto problems = check_config(cfg); !problems.empty()) return input_error(problems);
  try {
    const MatchingConfig matching = matching_config(cfg);
    std::vector<TrackerReport> reports;
    std::vector<std::string> problems;
    for (const auto& dir : cfg.results) {
      SequenceSet set;
      try {
        set = load_results(cfg, dir);
      } catch (const LoadError& e) {
        problems.insert(problems.end(), e.problems().begin(), e.problems().end());
        continue;
      }
      const auto results = evaluate_parallel(set.sequences, matching, cfg.jobs);
      reports.push_back(make_tracker_report(tracker_name(dir), results));
    }
    if (!problems.empty()) return input_error(problems);
    sort_leaderboard(reports);
    CommandResult result{kSuccess, render(reports, cfg.format, to_string(cfg.benchmark)), {}};
    emit(cfg, result);
    return result;
  } catch (const std::exception& e) {
    return {kInternalError, {}, std::string("internal error: ") + e.what() + "\n"};
  }
}

CommandResult cmd_validate(const fs::path& path, Benchmark benchmark,
                           const std::optional<std::vector<std::string>>& expected,
                           OutputFormat format) {
  if (!fs::exists(path)) return input_error({"no such file or directory: " + path.string()});
  ValidationReport report;
  try {
    const auto names = expected ? *expected : expected_test_sequences(benchmark);
    report = validate_submission(path, names, variant_for(benchmark));
  } catch (const std::exception& e) {
    return input_error({std::string("cannot read submission: ") + e.what()});
  }

  CommandResult result;
  result.exit_code = report.passed ? kSuccess : kInputError;
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["passed"] = report.passed;
    doc["checked_files"] = report.checked_files;
    doc["issues"] = nlohmann::ordered_json::array();
    for (const auto& issue : report.issues) {
      doc["issues"].push_back({{"file", issue.file}, {"line", issue.line},
                               {"message", issue.message}});
    }
    out << doc.dump(2) << '\n';
  } else if (format == OutputFormat::Csv) {
    out << "file,line,message\n";
    for (const auto& issue : report.issues) {
      out << issue.file << ',' << issue.line << ",\"" << issue.message << "\"\n";
    }
  } else {
    out << (report.passed ? "PASS" : "FAIL") << ": " << report.checked_files.size()
        << " file(s) checked, " << report.issues.size() << " issue(s)\n";
    for (const auto& issue : report.issues) {
      out << "  " << issue.file;
      if (issue.line > 0) out << ':' << issue.line;
      out << ": " << issue.message << '\n';
    }
  }
  result.output = out.str();
  return result;
}

CommandResult cmd_error_analysis(const RunConfig& cfg) {
  if (auto problems = check_config(cfg); !problems.empty()) return input_error(problems);
  try {
    const MatchingConfig matching = matching_config(cfg);
    std::vector<std::string> problems;

    LoadOptions det_opts;
    det_opts.mode = cfg.mode;
    SequenceSet detector_set;
    try {
      detector_set = load_sequence_set(cfg.gt_root, cfg.benchmark, det_opts);
    } catch (const LoadError& e) {
      return input_error(e.problems());
    }
    for (auto& seq : detector_set.sequences) {
      const fs::path det_file = cfg.gt_root / "det" / (seq.display_name() + ".txt");
      if (!fs::exists(det_file)) problems.push_back("missing detections " + det_file.string());
      seq.results = detections_as_results(seq.detections);
    }
    if (!problems.empty()) return input_error(problems);
    const auto detector =
        pool_results(evaluate_parallel(detector_set.sequences, matching, cfg.jobs)).counts;

    std::vector<ErrorAnalysisRow> rows;
    for (const auto& dir : cfg.results) {
      SequenceSet set;
      try {
        set = load_results(cfg, dir);
      } catch (const LoadError& e) {
        problems.insert(problems.end(), e.problems().begin(), e.problems().end());
        continue;
      }
      const auto tracker =
          pool_results(evaluate_parallel(set.sequences, matching, cfg.jobs)).counts;
      rows.push_back({tracker_name(dir), error_ratios(tracker, detector)});
    }
    if (!problems.empty()) return input_error(problems);
    CommandResult result{kSuccess, render_error_analysis(rows, cfg.format), {}};
    emit(cfg, result);
    return result;
  } catch (const std::exception& e) {
    return {kInternalError, {}, std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace moteval::cli
