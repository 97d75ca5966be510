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

#include "moteval/deteval.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <tuple>

namespace moteval {

namespace {

// Greedy matching by decreasing IoU; returns the number of matched detections.
long long greedy_hits(const std::vector<const BoxEntry*>& dets,
                      const std::vector<const BoxEntry*>& gts, double threshold) {
  struct Cand {
    double overlap;
    std::size_t det;
    std::size_t gt;
  };
  std::vector<Cand> cands;
  for (std::size_t d = 0; d < dets.size(); ++d) {
    for (std::size_t g = 0; g < gts.size(); ++g) {
      const double o = iou(dets[d]->box, gts[g]->box);
      if (o >= threshold) cands.push_back({o, d, g});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(b.overlap, a.det, a.gt) < std::tie(a.overlap, b.det, b.gt);
  });
  std::vector<char> det_used(dets.size(), 0);
  std::vector<char> gt_used(gts.size(), 0);
  long long hits = 0;
  for (const auto& c : cands) {
    if (det_used[c.det] || gt_used[c.gt]) continue;
    det_used[c.det] = 1;
    gt_used[c.gt] = 1;
    ++hits;
  }
  return hits;
}

void append_number(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

PRCurve pr_curve(std::span<const BoxEntry> detections, std::span<const BoxEntry> gt,
                 const DetEvalConfig& cfg) {
  if (cfg.mode == GtMode::VisibleOnly && !cfg.visibility_cut) {
    throw std::invalid_argument("visible-only evaluation needs a visibility cut");
  }

  struct FrameData {
    std::vector<const BoxEntry*> dets;  // descending score
    std::vector<const BoxEntry*> gts;
    long long hits = 0;
  };
  std::map<int, FrameData> frames;
  long long num_gt = 0;
  for (const auto& g : gt) {
    if (g.object_class != ObjectClass::Pedestrian || g.confidence == 0.0) continue;
    if (cfg.mode == GtMode::VisibleOnly && g.visibility < *cfg.visibility_cut) continue;
    frames[g.frame].gts.push_back(&g);
    ++num_gt;
  }
  std::vector<const BoxEntry*> by_score;
  by_score.reserve(detections.size());
  for (const auto& d : detections) {
    frames[d.frame].dets.push_back(&d);
    by_score.push_back(&d);
  }
  for (auto& [_, f] : frames) {
    std::stable_sort(f.dets.begin(), f.dets.end(), [](const BoxEntry* a, const BoxEntry* b) {
      return a->confidence > b->confidence;
    });
  }
  std::stable_sort(by_score.begin(), by_score.end(), [](const BoxEntry* a, const BoxEntry* b) {
    return a->confidence > b->confidence;
  });

  PRCurve curve;
  long long total_hits = 0;
  std::size_t kept = 0;
  std::size_t i = 0;
  while (i < by_score.size()) {
    const double threshold = by_score[i]->confidence;
    std::vector<int> touched;
    while (i < by_score.size() && by_score[i]->confidence == threshold) {
      touched.push_back(by_score[i]->frame);
      ++i;
      ++kept;
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int frame : touched) {
      auto& f = frames[frame];
      std::vector<const BoxEntry*> active;
      for (const auto* d : f.dets) {
        if (d->confidence < threshold) break;
        active.push_back(d);
      }
      const long long hits = greedy_hits(active, f.gts, cfg.iou_threshold);
      total_hits += hits - f.hits;
      f.hits = hits;
    }
    PRPoint pt;
    pt.threshold = threshold;
    pt.recall = num_gt > 0 ? 100.0 * static_cast<double>(total_hits) / static_cast<double>(num_gt)
                           : 0.0;
    pt.precision = 100.0 * static_cast<double>(total_hits) / static_cast<double>(kept);
    curve.points.push_back(pt);
  }

  curve.ap = average_precision(curve);
  if (cfg.operating_threshold) {
    for (const auto& pt : curve.points) {
      if (pt.threshold >= *cfg.operating_threshold) curve.operating_point = pt;
    }
  }
  return curve;
}

double average_precision(const PRCurve& curve) {
  if (curve.points.empty()) return 0.0;
  double sum = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const double level = 10.0 * k;
    double best = 0.0;
    for (const auto& pt : curve.points) {
      if (pt.recall >= level - 1e-9) best = std::max(best, pt.precision);
    }
    sum += best;
  }
  return sum / 11.0;
}

std::string curve_to_csv(const PRCurve& curve) {
  std::string out = "threshold,recall,precision\n";
  for (const auto& pt : curve.points) {
    append_number(out, pt.threshold);
    out += ',';
    append_number(out, pt.recall);
    out += ',';
    append_number(out, pt.precision);
    out += '\n';
  }
  return out;
}

}  // namespace moteval
