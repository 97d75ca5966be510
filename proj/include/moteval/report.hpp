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

#ifndef MOTEVAL_REPORT_HPP_
#define MOTEVAL_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moteval/clearmot.hpp"
#include "moteval/evaluate.hpp"
#include "moteval/identity.hpp"

namespace moteval {

/// Full metric set for one row of a results table. Optional values are
/// undefined metrics (zero denominators) and print as "N/A".
struct MetricsReport {
  std::string name;
  Counts counts;
  IdentityCounts identity_counts;

  std::optional<double> mota;
  std::optional<double> idf1;
  std::optional<double> idp;
  std::optional<double> idr;
  std::optional<double> motp;
  Rates rates;
};

MetricsReport make_report(std::string name, const Counts& counts, const IdentityCounts& identity);

struct TrackerReport {
  std::string tracker;
  std::vector<MetricsReport> sequences;  // input order
  MetricsReport overall;
};

TrackerReport make_tracker_report(std::string tracker, std::span<const SequenceResult> results);

/// Leaderboard order: MOTA descending, undefined MOTA last, then by name.
void sort_leaderboard(std::vector<TrackerReport>& reports);

enum class OutputFormat { Text, Csv, Json };

std::optional<OutputFormat> output_format_from_string(std::string_view s);

/// Renders reports in leaderboard order. Text uses two decimals; CSV and
/// JSON carry full precision.
std::string render(std::span<const TrackerReport> reports, OutputFormat format,
                   std::string_view benchmark);

struct ErrorAnalysisRow {
  std::string tracker;
  ErrorRatios ratios;
};

std::string render_error_analysis(std::span<const ErrorAnalysisRow> rows, OutputFormat format);

/// Fixed two-decimal form used in text tables ("N/A" when empty).
std::string format_fixed(std::optional<double> v, int decimals = 2);

}  // namespace moteval

#endif  // MOTEVAL_REPORT_HPP_
