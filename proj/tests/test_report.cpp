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

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "moteval/report.hpp"

using namespace moteval;

namespace {

Counts sample_counts() {
  Counts c;
  c.tp = 80;
  c.fn = 20;
  c.fp = 10;
  c.idsw = 2;
  c.fm = 4;
  c.gt_total = 100;
  c.frames = 40;
  c.overlap_sum = 60.0;
  c.match_total = 80;
  c.mt = 3;
  c.pt = 1;
  c.ml = 1;
  c.gt_tracks = 5;
  return c;
}

TrackerReport tracker(const std::string& name, const Counts& c, const IdentityCounts& id) {
  const std::vector<SequenceResult> rs = {{"S1", c, id}};
  return make_tracker_report(name, rs);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("make_report") {
  const auto r = make_report("x", sample_counts(), IdentityCounts{60, 30, 40});
  CHECK(*r.mota == doctest::Approx(68.0));
  CHECK(*r.motp == doctest::Approx(75.0));
  CHECK(*r.idf1 == doctest::Approx(100.0 * 120.0 / 190.0));
  CHECK(*r.rates.far == doctest::Approx(0.25));

  const auto empty = make_report("e", Counts{}, IdentityCounts{});
  CHECK_FALSE(empty.mota);
  CHECK_FALSE(empty.motp);
  CHECK_FALSE(empty.idf1);
}

TEST_CASE("format_fixed") {
  CHECK(format_fixed(58.8456) == "58.85");
  CHECK(format_fixed(-3.0) == "-3.00");
  CHECK(format_fixed(std::nullopt) == "N/A");
}

TEST_CASE("leaderboard order") {
  Counts worse = sample_counts();
  worse.fp = 50;
  std::vector<TrackerReport> reports = {tracker("b", worse, {}), tracker("none", Counts{}, {}),
                                        tracker("a", sample_counts(), {}),
                                        tracker("c", sample_counts(), {})};
  sort_leaderboard(reports);
  CHECK(reports[0].tracker == "a");
  CHECK(reports[1].tracker == "c");
  CHECK(reports[2].tracker == "b");
  CHECK(reports[3].tracker == "none");
}

TEST_CASE("text, csv and json agree") {
  Counts second = sample_counts();
  second.fn = 50;
  second.tp = 50;
  const std::vector<TrackerReport> reports = {tracker("trkA", sample_counts(), {60, 30, 40}),
                                              tracker("trkB", second, {10, 0, 90})};
  const auto text = render(reports, OutputFormat::Text, "MOT16");
  const auto csv = render(reports, OutputFormat::Csv, "MOT16");
  const auto json = nlohmann::json::parse(render(reports, OutputFormat::Json, "MOT16"));

  CHECK(text.rfind("MOT16 leaderboard\n", 0) == 0);
  CHECK(json["benchmark"] == "MOT16");
  REQUIRE(json["trackers"].size() == 2);

  const auto lines = split(csv, '\n');
  REQUIRE(lines.size() == 5);
  const auto header = split(lines[0], ',');
  for (std::size_t t = 0; t < 2; ++t) {
    const auto& jt = json["trackers"][t];
    const auto row = split(lines[2 * t + 2], ',');  // OVERALL row
    REQUIRE(row.size() == header.size());
    CHECK(row[0] == jt["tracker"].get<std::string>());
    CHECK(row[1] == "OVERALL");
    for (std::size_t k = 2; k < header.size(); ++k) {
      const auto& v = jt["overall"][header[k]];
      REQUIRE_FALSE(v.is_null());
      CHECK(std::stod(row[k]) == v.get<double>());
    }
    // The text table shows the same values rounded.
    const std::string mota = format_fixed(jt["overall"]["MOTA"].get<double>());
    CHECK(text.find(mota) != std::string::npos);
  }
}

TEST_CASE("undefined values") {
  const std::vector<TrackerReport> reports = {tracker("t", Counts{}, {})};
  CHECK(render(reports, OutputFormat::Text, "MOT15").find("N/A") != std::string::npos);
  CHECK(render(reports, OutputFormat::Csv, "MOT15").find(",N/A,") != std::string::npos);
  const auto json = nlohmann::json::parse(render(reports, OutputFormat::Json, "MOT15"));
  CHECK(json["trackers"][0]["overall"]["MOTA"].is_null());
}

TEST_CASE("output format names") {
  CHECK(output_format_from_string("json") == OutputFormat::Json);
  CHECK(output_format_from_string("csv") == OutputFormat::Csv);
  CHECK(output_format_from_string("text") == OutputFormat::Text);
  CHECK_FALSE(output_format_from_string("xml"));
}

TEST_CASE("error analysis rendering") {
  ErrorRatios r;
  r.tracker_fp = 5;
  r.detector_fp = 10;
  r.fp_ratio = 0.5;
  const std::vector<ErrorAnalysisRow> rows = {{"t", r}};
  CHECK(render_error_analysis(rows, OutputFormat::Csv) ==
        "tracker,FP,FP_detector,FP_ratio,FN,FN_detector,FN_ratio\nt,5,10,0.5,0,0,N/A\n");
  const auto json = nlohmann::json::parse(render_error_analysis(rows, OutputFormat::Json));
  CHECK(json[0]["FP_ratio"] == 0.5);
  CHECK(json[0]["FN_ratio"].is_null());
  CHECK(render_error_analysis(rows, OutputFormat::Text).find("0.50") != std::string::npos);
}
