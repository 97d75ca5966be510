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

#include "synthetic.hpp"

#include <unistd.h>

#include <fstream>
#include <random>
#include <sstream>

namespace moteval::testing {

namespace fs = std::filesystem;

SequenceData make_synthetic_sequence(const std::string& name, std::uint32_t seed,
                                     const SynthOptions& opts) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 2.0);
  std::uniform_real_distribution<double> xs(0.0, 1800.0);
  std::uniform_real_distribution<double> ys(100.0, 800.0);
  std::uniform_real_distribution<double> vel(-4.0, 4.0);
  std::uniform_real_distribution<double> heights(60.0, 220.0);

  SequenceData seq;
  seq.name = name;
  seq.num_frames = opts.num_frames;
  seq.fps = 30.0;

  int next_hyp = 1;
  for (int t = 0; t < opts.num_targets; ++t) {
    const double h = heights(rng);
    const double w = h * 0.41;
    double x = xs(rng);
    double y = ys(rng);
    const double vx = vel(rng);
    const double vy = vel(rng) * 0.25;
    const int start = 1 + static_cast<int>(unit(rng) * opts.num_frames * 0.5);
    const int length = 10 + static_cast<int>(unit(rng) * opts.num_frames * 0.6);
    const int end = std::min(opts.num_frames, start + length);
    const bool neutral = unit(rng) < opts.neutral_share;
    const ObjectClass cls = neutral ? (unit(rng) < 0.5 ? ObjectClass::StaticPerson
                                                       : ObjectClass::Distractor)
                                    : ObjectClass::Pedestrian;
    int hyp = next_hyp++;
    for (int f = start; f <= end; ++f) {
      x += vx;
      y += vy;
      BoxEntry g;
      g.frame = f;
      g.track_id = t + 1;
      g.box = Box(x, y, w, h);
      g.confidence = neutral ? 0.0 : 1.0;
      g.object_class = cls;
      g.visibility = 1.0;
      seq.gt.push_back(g);

      BoxEntry d;
      d.frame = f;
      d.track_id = -1;
      d.box = Box(x + noise(rng), y + noise(rng), w * (1.0 + 0.03 * noise(rng) / 2.0), h);
      d.confidence = unit(rng);
      if (unit(rng) > opts.miss_rate * 0.5) seq.detections.push_back(d);

      if (unit(rng) < opts.miss_rate) continue;
      if (unit(rng) < opts.switch_rate) hyp = next_hyp++;
      BoxEntry r;
      r.frame = f;
      r.track_id = hyp;
      r.box = Box(x + noise(rng), y + noise(rng), w, h * (1.0 + 0.03 * noise(rng) / 2.0));
      r.confidence = 1.0;
      seq.results.push_back(r);
    }
  }

  std::poisson_distribution<int> alarms(opts.false_alarms);
  for (int f = 1; f <= opts.num_frames; ++f) {
    const int n = alarms(rng);
    for (int k = 0; k < n; ++k) {
      const double h = heights(rng);
      BoxEntry r;
      r.frame = f;
      r.track_id = next_hyp++;
      r.box = Box(xs(rng), ys(rng), h * 0.41, h);
      r.confidence = 1.0;
      seq.results.push_back(r);
      BoxEntry d = r;
      d.track_id = -1;
      d.confidence = unit(rng) * 0.5;
      seq.detections.push_back(d);
    }
  }
  return seq;
}

namespace {

void append_number(std::ostringstream& out, double v) {
  out.precision(17);
  out << v;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

std::string write_gt_file(const std::vector<BoxEntry>& gt) {
  std::ostringstream out;
  for (const auto& e : gt) {
    out << e.frame << ',' << e.track_id << ',';
    append_number(out, e.box.left());
    out << ',';
    append_number(out, e.box.top());
    out << ',';
    append_number(out, e.box.width());
    out << ',';
    append_number(out, e.box.height());
    out << ',' << e.confidence << ',' << static_cast<int>(e.object_class) << ',';
    append_number(out, e.visibility);
    out << '\n';
  }
  return out.str();
}

std::string write_det_file(const std::vector<BoxEntry>& det) {
  std::ostringstream out;
  for (const auto& e : det) {
    out << e.frame << ",-1,";
    append_number(out, e.box.left());
    out << ',';
    append_number(out, e.box.top());
    out << ',';
    append_number(out, e.box.width());
    out << ',';
    append_number(out, e.box.height());
    out << ',';
    append_number(out, e.confidence);
    out << ",-1,-1\n";
  }
  return out.str();
}

fs::path write_benchmark(const fs::path& root, const std::vector<SequenceData>& seqs,
                         Benchmark benchmark, const std::string& tracker) {
  const fs::path results = root / "results" / tracker;
  fs::create_directories(results);
  std::ostringstream seqmap;
  for (const auto& s : seqs) {
    seqmap << s.name << ' ' << s.num_frames << '\n';
    write_file(root / "gt" / (s.name + ".txt"), write_gt_file(s.gt));
    if (benchmark == Benchmark::MOT17) {
      for (const char* det : {"DPM", "FRCNN", "SDP"}) {
        const std::string stem = s.name + "-" + det;
        write_file(root / "det" / (stem + ".txt"), write_det_file(s.detections));
        write_file(results / (stem + ".txt"), write_result_file(s.results));
      }
    } else {
      write_file(root / "det" / (s.name + ".txt"), write_det_file(s.detections));
      write_file(results / (s.name + ".txt"), write_result_file(s.results));
    }
  }
  write_file(root / "seqmap.txt", seqmap.str());
  return results;
}

fs::path scratch_dir(const std::string& tag) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("moteval-" + tag + "-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace moteval::testing
