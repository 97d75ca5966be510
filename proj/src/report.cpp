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

#include "moteval/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace moteval {

namespace {

using Json = nlohmann::ordered_json;

std::optional<double> guarded(double (*fn)(const Counts&), const Counts& c) {
  try {
    return fn(c);
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_value(std::optional<double> v) { return v ? shortest(*v) : "N/A"; }

Json json_value(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

struct Column {
  const char* title;
  int width;
};

constexpr Column kTextColumns[] = {{"MOTA", 8},  {"IDF1", 8}, {"MOTP", 8},  {"FAR", 7},
                                   {"MT", 6},    {"ML", 6},   {"FP", 9},    {"FN", 9},
                                   {"IDSW", 7},  {"FM", 7},   {"IDSWR", 8}, {"FMR", 8}};

std::vector<std::string> text_cells(const MetricsReport& r) {
  const auto& c = r.counts;
  return {format_fixed(r.mota),       format_fixed(r.idf1),        format_fixed(r.motp),
          format_fixed(r.rates.far),  std::to_string(c.mt),        std::to_string(c.ml),
          std::to_string(c.fp),       std::to_string(c.fn),        std::to_string(c.idsw),
          std::to_string(c.fm),       format_fixed(r.rates.idswr), format_fixed(r.rates.fmr)};
}

void text_header(std::ostringstream& out, const std::string& first, std::size_t name_width) {
  out << std::left << std::setw(static_cast<int>(name_width)) << first;
  for (const auto& col : kTextColumns) out << std::right << std::setw(col.width) << col.title;
  out << '\n';
}

void text_row(std::ostringstream& out, const MetricsReport& r, std::size_t name_width) {
  out << std::left << std::setw(static_cast<int>(name_width)) << r.name;
  const auto cells = text_cells(r);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << std::right << std::setw(kTextColumns[i].width) << cells[i];
  }
  out << '\n';
}

constexpr const char* kCsvHeader =
    "tracker,sequence,MOTA,IDF1,MOTP,FAR,MT,ML,FP,FN,IDSW,FM,IDSWR,FMR,"
    "PT,Recall,Precision,IDP,IDR,IDTP,IDFP,IDFN,GT,TP,Frames,GTTracks";

void csv_row(std::ostringstream& out, const std::string& tracker, const MetricsReport& r) {
  const auto& c = r.counts;
  const auto& id = r.identity_counts;
  out << tracker << ',' << r.name << ',' << csv_value(r.mota) << ',' << csv_value(r.idf1) << ','
      << csv_value(r.motp) << ',' << csv_value(r.rates.far) << ',' << c.mt << ',' << c.ml << ','
      << c.fp << ',' << c.fn << ',' << c.idsw << ',' << c.fm << ',' << csv_value(r.rates.idswr)
      << ',' << csv_value(r.rates.fmr) << ',' << c.pt << ',' << csv_value(r.rates.recall) << ','
      << csv_value(r.rates.precision) << ',' << csv_value(r.idp) << ',' << csv_value(r.idr)
      << ',' << id.idtp << ',' << id.idfp << ',' << id.idfn << ',' << c.gt_total << ',' << c.tp
      << ',' << c.frames << ',' << c.gt_tracks << '\n';
}

Json report_json(const MetricsReport& r) {
  const auto& c = r.counts;
  const auto& id = r.identity_counts;
  Json j;
  j["name"] = r.name;
  j["MOTA"] = json_value(r.mota);
  j["IDF1"] = json_value(r.idf1);
  j["MOTP"] = json_value(r.motp);
  j["FAR"] = json_value(r.rates.far);
  j["MT"] = c.mt;
  j["ML"] = c.ml;
  j["FP"] = c.fp;
  j["FN"] = c.fn;
  j["IDSW"] = c.idsw;
  j["FM"] = c.fm;
  j["IDSWR"] = json_value(r.rates.idswr);
  j["FMR"] = json_value(r.rates.fmr);
  j["PT"] = c.pt;
  j["Recall"] = json_value(r.rates.recall);
  j["Precision"] = json_value(r.rates.precision);
  j["IDP"] = json_value(r.idp);
  j["IDR"] = json_value(r.idr);
  j["IDTP"] = id.idtp;
  j["IDFP"] = id.idfp;
  j["IDFN"] = id.idfn;
  j["GT"] = c.gt_total;
  j["TP"] = c.tp;
  j["Frames"] = c.frames;
  j["GTTracks"] = c.gt_tracks;
  return j;
}

}  // namespace

std::string format_fixed(std::optional<double> v, int decimals) {
  if (!v) return "N/A";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, *v);
  return buf;
}

MetricsReport make_report(std::string name, const Counts& counts,
                          const IdentityCounts& identity) {
  MetricsReport r;
  r.name = std::move(name);
  r.counts = counts;
  r.identity_counts = identity;
  r.mota = guarded(&mota, counts);
  r.motp = guarded(&motp, counts);
  r.rates = derived_rates(counts);
  const auto id = identity_scores(identity);
  r.idf1 = id.idf1;
  r.idp = id.idp;
  r.idr = id.idr;
  return r;
}

TrackerReport make_tracker_report(std::string tracker, std::span<const SequenceResult> results) {
  TrackerReport t;
  t.tracker = std::move(tracker);
  for (const auto& r : results) t.sequences.push_back(make_report(r.name, r.counts, r.identity));
  const auto pooled = pool_results(results);
  t.overall = make_report("OVERALL", pooled.counts, pooled.identity);
  return t;
}

void sort_leaderboard(std::vector<TrackerReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const TrackerReport& a, const TrackerReport& b) {
                     const auto& ma = a.overall.mota;
                     const auto& mb = b.overall.mota;
                     if (ma.has_value() != mb.has_value()) return ma.has_value();
                     if (ma && mb && *ma != *mb) return *ma > *mb;
                     return a.tracker < b.tracker;
                   });
}

std::optional<OutputFormat> output_format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string render(std::span<const TrackerReport> reports, OutputFormat format,
                   std::string_view benchmark) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text: {
      std::size_t width = 10;
      for (const auto& t : reports) {
        width = std::max(width, t.tracker.size() + 2);
        for (const auto& s : t.sequences) width = std::max(width, s.name.size() + 2);
      }
      out << benchmark << " leaderboard\n";
      text_header(out, "Tracker", width);
      for (const auto& t : reports) {
        MetricsReport row = t.overall;
        row.name = t.tracker;
        text_row(out, row, width);
      }
      for (const auto& t : reports) {
        out << "\n" << t.tracker << "\n";
        text_header(out, "Sequence", width);
        for (const auto& s : t.sequences) text_row(out, s, width);
        text_row(out, t.overall, width);
      }
      break;
    }
    case OutputFormat::Csv: {
      out << kCsvHeader << '\n';
      for (const auto& t : reports) {
        for (const auto& s : t.sequences) csv_row(out, t.tracker, s);
        csv_row(out, t.tracker, t.overall);
      }
      break;
    }
    case OutputFormat::Json: {
      Json doc;
      doc["benchmark"] = std::string(benchmark);
      doc["trackers"] = Json::array();
      for (const auto& t : reports) {
        Json jt;
        jt["tracker"] = t.tracker;
        jt["overall"] = report_json(t.overall);
        jt["sequences"] = Json::array();
        for (const auto& s : t.sequences) jt["sequences"].push_back(report_json(s));
        doc["trackers"].push_back(std::move(jt));
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_error_analysis(std::span<const ErrorAnalysisRow> rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text: {
      std::size_t width = 10;
      for (const auto& r : rows) width = std::max(width, r.tracker.size() + 2);
      out << std::left << std::setw(static_cast<int>(width)) << "Tracker" << std::right
          << std::setw(10) << "FP" << std::setw(10) << "FP(det)" << std::setw(9) << "FP ratio"
          << std::setw(10) << "FN" << std::setw(10) << "FN(det)" << std::setw(9) << "FN ratio"
          << '\n';
      for (const auto& r : rows) {
        const auto& x = r.ratios;
        out << std::left << std::setw(static_cast<int>(width)) << r.tracker << std::right
            << std::setw(10) << x.tracker_fp << std::setw(10) << x.detector_fp << std::setw(9)
            << format_fixed(x.fp_ratio) << std::setw(10) << x.tracker_fn << std::setw(10)
            << x.detector_fn << std::setw(9) << format_fixed(x.fn_ratio) << '\n';
      }
      break;
    }
    case OutputFormat::Csv: {
      out << "tracker,FP,FP_detector,FP_ratio,FN,FN_detector,FN_ratio\n";
      for (const auto& r : rows) {
        const auto& x = r.ratios;
        out << r.tracker << ',' << x.tracker_fp << ',' << x.detector_fp << ','
            << csv_value(x.fp_ratio) << ',' << x.tracker_fn << ',' << x.detector_fn << ','
            << csv_value(x.fn_ratio) << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      Json doc = Json::array();
      for (const auto& r : rows) {
        const auto& x = r.ratios;
        Json j;
        j["tracker"] = r.tracker;
        j["FP"] = x.tracker_fp;
        j["FP_detector"] = x.detector_fp;
        j["FP_ratio"] = json_value(x.fp_ratio);
        j["FN"] = x.tracker_fn;
        j["FN_detector"] = x.detector_fn;
        j["FN_ratio"] = json_value(x.fn_ratio);
        doc.push_back(std::move(j));
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace moteval
