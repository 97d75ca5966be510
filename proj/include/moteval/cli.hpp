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

#ifndef MOTEVAL_CLI_HPP_
#define MOTEVAL_CLI_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "moteval/ingest.hpp"
#include "moteval/report.hpp"

namespace moteval::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kInternalError = 2 };

struct RunConfig {
  Benchmark benchmark = Benchmark::MOT17;
  std::filesystem::path gt_root;
  // One directory per tracker; the directory name labels the tracker.
  std::vector<std::filesystem::path> results;
  std::optional<std::filesystem::path> output;
  OutputFormat format = OutputFormat::Text;
  double iou_threshold = 0.5;
  int jobs = 1;
  ParseMode mode = ParseMode::Strict;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output;       // report body (also written to RunConfig::output)
  std::string diagnostics;  // human readable problems, one per line
};

CommandResult cmd_evaluate(const RunConfig& cfg);

CommandResult cmd_validate(const std::filesystem::path& path, Benchmark benchmark,
                           const std::optional<std::vector<std::string>>& expected = std::nullopt,
                           OutputFormat format = OutputFormat::Text);

/// Tracker errors relative to the public detections of `cfg.gt_root/det`,
/// taken without any score cut.
CommandResult cmd_error_analysis(const RunConfig& cfg);

std::string tracker_name(const std::filesystem::path& results_dir);

}  // namespace moteval::cli

#endif  // MOTEVAL_CLI_HPP_
