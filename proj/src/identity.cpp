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

#include "moteval/identity.hpp"

#include <algorithm>
#include <map>

#include "moteval/linear_assignment.hpp"

namespace moteval {

namespace {

std::map<int, std::size_t> index_ids(std::span<const BoxEntry> entries,
                                     std::vector<int>& ids) {
  for (const auto& e : entries) ids.push_back(e.track_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  return index;
}

}  // namespace

TrackMatchTable build_table(std::span<const BoxEntry> gt, std::span<const BoxEntry> pred,
                            double iou_threshold) {
  TrackMatchTable t;
  const auto gt_index = index_ids(gt, t.gt_ids);
  const auto pred_index = index_ids(pred, t.pred_ids);
  t.gt_lengths.assign(t.gt_ids.size(), 0);
  t.pred_lengths.assign(t.pred_ids.size(), 0);
  t.co_detections.assign(t.gt_ids.size() * t.pred_ids.size(), 0);

  std::map<int, std::vector<const BoxEntry*>> gt_frames;
  std::map<int, std::vector<const BoxEntry*>> pred_frames;
  for (const auto& e : gt) {
    ++t.gt_lengths[gt_index.at(e.track_id)];
    gt_frames[e.frame].push_back(&e);
  }
  for (const auto& e : pred) {
    ++t.pred_lengths[pred_index.at(e.track_id)];
    pred_frames[e.frame].push_back(&e);
  }
  for (const auto& [frame, gts] : gt_frames) {
    const auto it = pred_frames.find(frame);
    if (it == pred_frames.end()) continue;
    for (const auto* g : gts) {
      const std::size_t gi = gt_index.at(g->track_id);
      for (const auto* p : it->second) {
        if (iou(g->box, p->box) >= iou_threshold) {
          ++t.co_detections[gi * t.pred_ids.size() + pred_index.at(p->track_id)];
        }
      }
    }
  }
  return t;
}

TrackMatchTable build_table(const PreprocessedSequence& seq, double iou_threshold) {
  std::vector<BoxEntry> gt;
  std::vector<BoxEntry> pred;
  for (const auto& f : seq.frames) {
    gt.insert(gt.end(), f.gt.begin(), f.gt.end());
    pred.insert(pred.end(), f.results.begin(), f.results.end());
  }
  return build_table(gt, pred, iou_threshold);
}

IdentityScores identity_scores(const IdentityCounts& c) {
  IdentityScores s;
  s.counts = c;
  const auto tp = static_cast<double>(c.idtp);
  if (c.idtp + c.idfp > 0) s.idp = 100.0 * tp / static_cast<double>(c.idtp + c.idfp);
  if (c.idtp + c.idfn > 0) s.idr = 100.0 * tp / static_cast<double>(c.idtp + c.idfn);
  const long long denom = 2 * c.idtp + c.idfp + c.idfn;
  if (denom > 0) s.idf1 = 100.0 * 2.0 * tp / static_cast<double>(denom);
  return s;
}

IdentityScores solve_identity(const TrackMatchTable& table) {
  const std::size_t g = table.gt_ids.size();
  const std::size_t p = table.pred_ids.size();
  long long gt_total = 0;
  long long pred_total = 0;
  for (auto l : table.gt_lengths) gt_total += l;
  for (auto l : table.pred_lengths) pred_total += l;

  // Rows: gt tracks then pred dummies. Columns: pred tracks then gt dummies.
  // A forbidden cell costs more than leaving every track unmatched.
  const auto forbidden = static_cast<double>(gt_total + pred_total + 1);
  CostMatrix cost(g + p, p + g, 0.0);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      cost(i, j) = static_cast<double>(table.gt_lengths[i] + table.pred_lengths[j] -
                                       2 * table.co(i, j));
    }
    for (std::size_t k = 0; k < g; ++k) {
      cost(i, p + k) = k == i ? static_cast<double>(table.gt_lengths[i]) : forbidden;
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = 0; k < p; ++k) {
      cost(g + j, k) = k == j ? static_cast<double>(table.pred_lengths[j]) : forbidden;
    }
  }

  IdentityCounts counts;
  std::vector<std::pair<int, int>> matched;
  if (g > 0 && p > 0) {
    const auto row_to_col = solve_linear_assignment(cost);
    for (std::size_t i = 0; i < g; ++i) {
      const int j = row_to_col[i];
      if (j < 0 || static_cast<std::size_t>(j) >= p) continue;
      const long long co = table.co(i, static_cast<std::size_t>(j));
      if (co == 0) continue;
      counts.idtp += co;
      matched.emplace_back(table.gt_ids[i], table.pred_ids[static_cast<std::size_t>(j)]);
    }
  }
  counts.idfn = gt_total - counts.idtp;
  counts.idfp = pred_total - counts.idtp;

  auto scores = identity_scores(counts);
  scores.matched_tracks = std::move(matched);
  return scores;
}

}  // namespace moteval
