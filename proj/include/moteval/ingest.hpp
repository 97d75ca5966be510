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

#ifndef MOTEVAL_INGEST_HPP_
#define MOTEVAL_INGEST_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moteval/model.hpp"

namespace moteval {

enum class Benchmark { MOT15, MOT16, MOT17 };

std::string_view to_string(Benchmark b);
std::optional<Benchmark> benchmark_from_string(std::string_view s);

// MOT15 rows carry 10 values (trailing world x,y,z); MOT16/17 rows carry 9
// (class and visibility for ground truth, unused otherwise).
enum class FormatVariant { MOT15, MOT16_17 };
enum class FileKind { Detection, GroundTruth, Result };
enum class ParseMode { Strict, Lenient };

FormatVariant variant_for(Benchmark b);

struct FormatSchema {
  FormatVariant variant = FormatVariant::MOT16_17;
  FileKind kind = FileKind::Result;

  std::size_t column_count() const { return variant == FormatVariant::MOT15 ? 10 : 9; }
};

/// Malformed input. `line()` is 1-based, 0 when the error is not tied to a row.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses comma separated rows into entries. Whitespace around fields and
/// blank lines are accepted. In strict mode the column count must match the
/// schema exactly and class codes must be known; lenient mode ignores extra
/// columns, maps unknown classes to ObjectClass::Other and records a note in
/// `warnings` (if given).
std::vector<BoxEntry> parse_file(std::string_view text, const FormatSchema& schema,
                                 ParseMode mode = ParseMode::Strict,
                                 std::vector<std::string>* warnings = nullptr);

/// Reads and parses a file. ParseError messages are prefixed with the path.
std::vector<BoxEntry> read_entries(const std::filesystem::path& path,
                                   const FormatSchema& schema,
                                   ParseMode mode = ParseMode::Strict);

std::string read_text_file(const std::filesystem::path& path);

/// Serializes tracker output in the 9 column layout, sorted by (frame, id).
/// Numbers use the shortest decimal form that parses back to the same value.
/// Throws std::invalid_argument for entries without a track id.
std::string write_result_file(std::span<const BoxEntry> entries);

struct ValidationIssue {
  std::string file;
  std::size_t line = 0;
  std::string message;
};

struct ValidationReport {
  bool passed = false;
  std::vector<std::string> checked_files;
  std::vector<ValidationIssue> issues;
};

/// Checks a submission (a directory or a .zip archive) against the expected
/// per-sequence result files. Content problems land in the report; only an
/// unreadable container throws.
ValidationReport validate_submission(const std::filesystem::path& archive_or_dir,
                                     std::span<const std::string> expected_sequences,
                                     FormatVariant variant = FormatVariant::MOT16_17);

/// File stems a complete test-set submission must contain.
std::vector<std::string> expected_test_sequences(Benchmark b);

struct SeqMapEntry {
  std::string name;
  int num_frames = 0;
};

/// Sequence map: one "<name> <num_frames>" pair per line, fields separated by
/// spaces or tabs. Blank lines and lines starting with '#' are skipped.
std::vector<SeqMapEntry> parse_seqmap(std::string_view text);

struct SequenceSet {
  Benchmark benchmark = Benchmark::MOT16;
  // For MOT17 every sequence appears once per detector, in DPM, FRCNN, SDP order.
  std::vector<SequenceData> sequences;

  std::vector<const SequenceData*> partition(Detector d) const;
};

/// Aggregated loading failure, one entry per problem found.
class LoadError : public std::runtime_error {
 public:
  explicit LoadError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct LoadOptions {
  // Directory of tracker output; results stay empty when unset.
  std::optional<std::filesystem::path> results_dir;
  bool load_detections = true;
  ParseMode mode = ParseMode::Strict;
};

/// Loads `root/seqmap.txt`, `root/gt/<Seq>.txt` and, when present,
/// `root/det/<Seq>.txt` (MOT17: `root/det/<Seq>-<DET>.txt`). Result files are
/// `<Seq>.txt`, or `<Seq>-<DET>.txt` for MOT17, inside `results_dir`.
SequenceSet load_sequence_set(const std::filesystem::path& root, Benchmark benchmark,
                              const LoadOptions& options = {});

}  // namespace moteval

#endif  // MOTEVAL_INGEST_HPP_
