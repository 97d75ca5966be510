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

#include "moteval/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "moteval/zip.hpp"

namespace moteval {

namespace fs = std::filesystem;

std::string_view to_string(Benchmark b) {
  switch (b) {
    case Benchmark::MOT15:
      return "MOT15";
    case Benchmark::MOT16:
      return "MOT16";
    case Benchmark::MOT17:
      return "MOT17";
  }
  return "?";
}

std::optional<Benchmark> benchmark_from_string(std::string_view s) {
  if (s == "MOT15") return Benchmark::MOT15;
  if (s == "MOT16") return Benchmark::MOT16;
  if (s == "MOT17") return Benchmark::MOT17;
  return std::nullopt;
}

FormatVariant variant_for(Benchmark b) {
  return b == Benchmark::MOT15 ? FormatVariant::MOT15 : FormatVariant::MOT16_17;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double to_number(std::string_view field, std::size_t line, std::size_t column) {
  // from_chars rejects a leading '+', which some writers emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(line, "column " + std::to_string(column) + ": malformed number '" +
                               std::string(field) + "'");
  }
  return value;
}

int to_integer(std::string_view field, std::size_t line, std::size_t column) {
  const double v = to_number(field, line, column);
  if (v != std::floor(v) || std::abs(v) > 2e9) {
    throw ParseError(line, "column " + std::to_string(column) + ": expected an integer, got '" +
                               std::string(field) + "'");
  }
  return static_cast<int>(v);
}

std::size_t min_columns(const FormatSchema& schema, ParseMode mode) {
  if (mode == ParseMode::Strict) return schema.column_count();
  if (schema.kind == FileKind::GroundTruth && schema.variant == FormatVariant::MOT16_17) return 9;
  return 7;
}

void append_number(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::vector<BoxEntry> parse_file(std::string_view text, const FormatSchema& schema,
                                 ParseMode mode, std::vector<std::string>* warnings) {
  std::vector<BoxEntry> entries;
  std::unordered_set<std::uint64_t> seen;
  const std::size_t expected = schema.column_count();
  const std::size_t minimum = min_columns(schema, mode);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const auto fields = split_fields(line);
    if (mode == ParseMode::Strict ? fields.size() != expected : fields.size() < minimum) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " columns, found " +
                                    std::to_string(fields.size()));
    }

    BoxEntry e;
    e.frame = to_integer(fields[0], line_no, 1);
    e.track_id = to_integer(fields[1], line_no, 2);
    if (e.frame < 1) throw ParseError(line_no, "frame index must be >= 1");
    if (schema.kind != FileKind::Detection && e.track_id < 0) {
      throw ParseError(line_no, "track id must be non-negative");
    }
    const double left = to_number(fields[2], line_no, 3);
    const double top = to_number(fields[3], line_no, 4);
    const double width = to_number(fields[4], line_no, 5);
    const double height = to_number(fields[5], line_no, 6);
    if (!(width > 0.0) || !(height > 0.0)) {
      throw ParseError(line_no, "box width and height must be positive");
    }
    e.box = Box(left, top, width, height);
    e.confidence = to_number(fields[6], line_no, 7);
    // Remaining columns are parsed for well-formedness even where unused.
    for (std::size_t c = 7; c < fields.size() && c < expected; ++c) {
      to_number(fields[c], line_no, c + 1);
    }

    if (schema.kind == FileKind::GroundTruth && schema.variant == FormatVariant::MOT16_17) {
      const int code = to_integer(fields[7], line_no, 8);
      if (auto cls = object_class_from_code(code)) {
        e.object_class = *cls;
      } else if (mode == ParseMode::Lenient) {
        e.object_class = ObjectClass::Other;
        if (warnings) {
          warnings->push_back("line " + std::to_string(line_no) + ": unknown class code " +
                              std::to_string(code) + " mapped to 'other'");
        }
      } else {
        throw ParseError(line_no, "unknown class code " + std::to_string(code));
      }
      double vis = to_number(fields[8], line_no, 9);
      if (vis < 0.0 || vis > 1.0) {
        if (mode == ParseMode::Strict) throw ParseError(line_no, "visibility outside [0, 1]");
        vis = std::clamp(vis, 0.0, 1.0);
      }
      e.visibility = vis;
    }

    if (e.track_id != -1) {
      const auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.frame)) << 32) |
                       static_cast<std::uint32_t>(e.track_id);
      if (!seen.insert(key).second) {
        throw ParseError(line_no, "duplicate entry for frame " + std::to_string(e.frame) +
                                      ", id " + std::to_string(e.track_id));
      }
    }
    entries.push_back(e);
  }
  return entries;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<BoxEntry> read_entries(const fs::path& path, const FormatSchema& schema,
                                   ParseMode mode) {
  const std::string text = read_text_file(path);
  try {
    return parse_file(text, schema, mode);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

std::string write_result_file(std::span<const BoxEntry> entries) {
  std::vector<const BoxEntry*> sorted;
  sorted.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.track_id < 0) throw std::invalid_argument("result entries need a track id >= 0");
    sorted.push_back(&e);
  }
  std::sort(sorted.begin(), sorted.end(), [](const BoxEntry* a, const BoxEntry* b) {
    return std::tie(a->frame, a->track_id) < std::tie(b->frame, b->track_id);
  });

  std::string out;
  out.reserve(sorted.size() * 48);
  for (const BoxEntry* e : sorted) {
    out += std::to_string(e->frame);
    out += ',';
    out += std::to_string(e->track_id);
    for (double v : {e->box.left(), e->box.top(), e->box.width(), e->box.height(),
                     e->confidence}) {
      out += ',';
      append_number(out, v);
    }
    out += ",-1,-1\n";
  }
  return out;
}

ValidationReport validate_submission(const fs::path& archive_or_dir,
                                     std::span<const std::string> expected_sequences,
                                     FormatVariant variant) {
  if (!fs::exists(archive_or_dir)) {
    throw std::runtime_error("no such file or directory: " + archive_or_dir.string());
  }

  ValidationReport report;
  std::map<std::string, std::string> files;  // base name -> content
  if (fs::is_directory(archive_or_dir)) {
    for (const auto& de : fs::directory_iterator(archive_or_dir)) {
      if (!de.is_regular_file()) continue;
      files[de.path().filename().string()] = read_text_file(de.path());
    }
  } else {
    for (auto& member : read_zip_file(archive_or_dir)) {
      if (member.name.empty() || member.name.back() == '/') continue;
      const std::string base = fs::path(member.name).filename().string();
      if (files.contains(base)) {
        report.issues.push_back({base, 0, "file appears more than once in the archive"});
        continue;
      }
      files[base] = std::move(member.data);
    }
  }

  const FormatSchema schema{variant, FileKind::Result};
  std::set<std::string> expected_names;
  for (const auto& seq : expected_sequences) {
    const std::string file = seq + ".txt";
    expected_names.insert(file);
    const auto it = files.find(file);
    if (it == files.end()) {
      report.issues.push_back({file, 0, "missing sequence " + seq});
      continue;
    }
    report.checked_files.push_back(file);
    try {
      parse_file(it->second, schema, ParseMode::Strict);
    } catch (const ParseError& e) {
      report.issues.push_back({file, e.line(), e.what()});
    } catch (const std::invalid_argument& e) {
      report.issues.push_back({file, 0, e.what()});
    }
  }
  for (const auto& [name, _] : files) {
    if (!expected_names.contains(name)) {
      report.issues.push_back({name, 0, "unexpected file"});
    }
  }
  report.passed = report.issues.empty();
  return report;
}

std::vector<std::string> expected_test_sequences(Benchmark b) {
  switch (b) {
    case Benchmark::MOT15:
      return {"TUD-Crossing",    "PETS09-S2L2",    "ETH-Jelmoli",  "ETH-Linthescher",
              "ETH-Crossing",    "AVG-TownCentre", "ADL-Rundle-1", "ADL-Rundle-3",
              "KITTI-16",        "KITTI-19",       "Venice-1"};
    case Benchmark::MOT16:
      return {"MOT16-01", "MOT16-03", "MOT16-06", "MOT16-07",
              "MOT16-08", "MOT16-12", "MOT16-14"};
    case Benchmark::MOT17: {
      std::vector<std::string> out;
      for (const char* seq : {"MOT17-01", "MOT17-03", "MOT17-06", "MOT17-07", "MOT17-08",
                              "MOT17-12", "MOT17-14"}) {
        for (auto d : {Detector::DPM, Detector::FRCNN, Detector::SDP}) {
          out.push_back(std::string(seq) + "-" + std::string(to_string(d)));
        }
      }
      return out;
    }
  }
  return {};
}

std::vector<SeqMapEntry> parse_seqmap(std::string_view text) {
  std::vector<SeqMapEntry> out;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream fields{std::string(t)};
    SeqMapEntry e;
    std::string count;
    std::string extra;
    if (!(fields >> e.name >> count) || (fields >> extra)) {
      throw ParseError(line_no, "expected '<name> <num_frames>'");
    }
    e.num_frames = to_integer(count, line_no, 2);
    if (e.num_frames <= 0) throw ParseError(line_no, "frame count must be positive");
    if (!names.insert(e.name).second) {
      throw ParseError(line_no, "sequence listed twice: " + e.name);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<const SequenceData*> SequenceSet::partition(Detector d) const {
  std::vector<const SequenceData*> out;
  for (const auto& s : sequences) {
    if (s.detector == d) out.push_back(&s);
  }
  return out;
}

LoadError::LoadError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "failed to load sequence set";
        for (const auto& p : problems) msg += "\n  " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

SequenceSet load_sequence_set(const fs::path& root, Benchmark benchmark,
                              const LoadOptions& options) {
  const fs::path seqmap_path = root / "seqmap.txt";
  if (!fs::exists(seqmap_path)) throw LoadError({"missing sequence map " + seqmap_path.string()});
  std::vector<SeqMapEntry> seqmap;
  try {
    seqmap = parse_seqmap(read_text_file(seqmap_path));
  } catch (const ParseError& e) {
    throw LoadError({seqmap_path.string() + ": " + e.what()});
  }

  const FormatVariant variant = variant_for(benchmark);
  std::vector<std::string> problems;
  SequenceSet set;
  set.benchmark = benchmark;

  auto load = [&](const fs::path& path, FileKind kind, int num_frames,
                  std::vector<BoxEntry>& into) {
    try {
      into = read_entries(path, {variant, kind}, options.mode);
    } catch (const std::exception& e) {
      problems.push_back(e.what());
      return;
    }
    for (const auto& entry : into) {
      if (entry.frame > num_frames) {
        problems.push_back(path.string() + ": frame " + std::to_string(entry.frame) +
                           " exceeds sequence length " + std::to_string(num_frames));
        return;
      }
    }
  };

  std::vector<std::optional<Detector>> partitions;
  if (benchmark == Benchmark::MOT17) {
    partitions = {Detector::DPM, Detector::FRCNN, Detector::SDP};
  } else {
    partitions = {std::nullopt};
  }

  for (const auto& item : seqmap) {
    SequenceData base;
    base.name = item.name;
    base.num_frames = item.num_frames;
    const fs::path gt_path = root / "gt" / (item.name + ".txt");
    if (!fs::exists(gt_path)) {
      problems.push_back("missing ground truth " + gt_path.string());
      continue;
    }
    load(gt_path, FileKind::GroundTruth, item.num_frames, base.gt);

    for (const auto& det : partitions) {
      SequenceData seq = base;
      seq.detector = det;
      const std::string stem = seq.display_name();
      if (options.load_detections) {
        const fs::path det_path = root / "det" / (stem + ".txt");
        if (fs::exists(det_path)) {
          load(det_path, FileKind::Detection, item.num_frames, seq.detections);
        }
      }
      if (options.results_dir) {
        const fs::path res_path = *options.results_dir / (stem + ".txt");
        if (!fs::exists(res_path)) {
          problems.push_back("missing result file " + res_path.string());
        } else {
          load(res_path, FileKind::Result, item.num_frames, seq.results);
        }
      }
      set.sequences.push_back(std::move(seq));
    }
  }
  if (!problems.empty()) throw LoadError(std::move(problems));
  return set;
}

}  // namespace moteval
