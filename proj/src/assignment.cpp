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

#include "moteval/assignment.hpp"

#include <algorithm>
#include <stdexcept>

#include "moteval/linear_assignment.hpp"

namespace moteval {

void MatchingConfig::validate() const {
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0)) {
    throw std::invalid_argument("IoU threshold must lie in (0, 1]");
  }
}

namespace {

struct Pair {
  std::size_t gt;
  std::size_t res;
  double overlap;
};

// Maximum number of feasible pairs, and among those the smallest total
// 1 - IoU. Infeasible cells carry a cost exceeding any feasible total.
std::vector<Pair> optimal_pairs(std::span<const BoxEntry* const> gt,
                                std::span<const BoxEntry* const> res, double threshold) {
  if (gt.empty() || res.empty()) return {};
  const double infeasible = static_cast<double>(std::min(gt.size(), res.size())) + 1.0;
  CostMatrix cost(gt.size(), res.size(), infeasible);
  CostMatrix overlap(gt.size(), res.size(), 0.0);
  for (std::size_t i = 0; i < gt.size(); ++i) {
    for (std::size_t j = 0; j < res.size(); ++j) {
      const double o = iou(gt[i]->box, res[j]->box);
      overlap(i, j) = o;
      if (o >= threshold) cost(i, j) = 1.0 - o;
    }
  }
  const auto row_to_col = solve_linear_assignment(cost);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < row_to_col.size(); ++i) {
    if (row_to_col[i] < 0) continue;
    const auto j = static_cast<std::size_t>(row_to_col[i]);
    if (overlap(i, j) >= threshold) pairs.push_back({i, j, overlap(i, j)});
  }
  return pairs;
}

// Stable id order so that solver tie-breaking does not depend on file order.
std::vector<const BoxEntry*> sorted_by_id(std::span<const BoxEntry> entries) {
  std::vector<const BoxEntry*> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(&e);
  std::stable_sort(out.begin(), out.end(), [](const BoxEntry* a, const BoxEntry* b) {
    return a->track_id < b->track_id;
  });
  return out;
}

bool is_scored_gt(const BoxEntry& e) {
  return e.object_class == ObjectClass::Pedestrian && e.confidence != 0.0;
}

}  // namespace

PreprocessedFrame preprocess_frame(std::span<const BoxEntry> gt_frame,
                                   std::span<const BoxEntry> res_frame,
                                   const MatchingConfig& cfg) {
  PreprocessedFrame out;
  const auto gt = sorted_by_id(gt_frame);
  const auto res = sorted_by_id(res_frame);

  std::vector<char> drop(res.size(), 0);
  bool any_neutral = false;
  for (const auto* g : gt) any_neutral |= cfg.neutral_classes.contains(g->object_class);
  if (any_neutral) {
    for (const auto& p : optimal_pairs(gt, res, cfg.iou_threshold)) {
      if (cfg.neutral_classes.contains(gt[p.gt]->object_class) && p.overlap > cfg.iou_threshold) {
        drop[p.res] = 1;
      }
    }
  }
  for (std::size_t j = 0; j < res.size(); ++j) {
    (drop[j] ? out.removed : out.results).push_back(*res[j]);
  }
  for (const auto* g : gt) {
    if (is_scored_gt(*g)) out.gt.push_back(*g);
  }
  return out;
}

FrameMatch match_frame(int frame, std::span<const BoxEntry> gt, std::span<const BoxEntry> res,
                       const MatchState& prev, const MatchingConfig& cfg) {
  FrameMatch out;
  out.events.frame = frame;
  out.state.last_known = prev.last_known;

  const auto gt_sorted = sorted_by_id(gt);
  const auto res_sorted = sorted_by_id(res);
  std::map<int, std::size_t> gt_index;
  std::map<int, std::size_t> res_index;
  for (std::size_t i = 0; i < gt_sorted.size(); ++i) gt_index[gt_sorted[i]->track_id] = i;
  for (std::size_t j = 0; j < res_sorted.size(); ++j) res_index[res_sorted[j]->track_id] = j;

  std::vector<char> gt_used(gt_sorted.size(), 0);
  std::vector<char> res_used(res_sorted.size(), 0);
  std::vector<Match> matches;

  for (const auto& [gid, pid] : prev.previous) {
    const auto gi = gt_index.find(gid);
    const auto rj = res_index.find(pid);
    if (gi == gt_index.end() || rj == res_index.end()) continue;
    const double o = iou(gt_sorted[gi->second]->box, res_sorted[rj->second]->box);
    if (o < cfg.iou_threshold) continue;
    gt_used[gi->second] = 1;
    res_used[rj->second] = 1;
    matches.push_back({gid, pid, o, true});
  }

  std::vector<const BoxEntry*> gt_rest;
  std::vector<const BoxEntry*> res_rest;
  for (std::size_t i = 0; i < gt_sorted.size(); ++i) {
    if (!gt_used[i]) gt_rest.push_back(gt_sorted[i]);
  }
  for (std::size_t j = 0; j < res_sorted.size(); ++j) {
    if (!res_used[j]) res_rest.push_back(res_sorted[j]);
  }
  for (const auto& p : optimal_pairs(gt_rest, res_rest, cfg.iou_threshold)) {
    const int gid = gt_rest[p.gt]->track_id;
    const int pid = res_rest[p.res]->track_id;
    gt_used[gt_index[gid]] = 1;
    res_used[res_index[pid]] = 1;
    matches.push_back({gid, pid, p.overlap, false});
  }

  std::sort(matches.begin(), matches.end(),
            [](const Match& a, const Match& b) { return a.gt_id < b.gt_id; });
  for (const auto& m : matches) {
    const auto known = prev.last_known.find(m.gt_id);
    if (known != prev.last_known.end() && known->second != m.pred_id) {
      out.events.idsw_ids.push_back(m.gt_id);
    }
    out.state.previous[m.gt_id] = m.pred_id;
    out.state.last_known[m.gt_id] = m.pred_id;
  }
  for (std::size_t i = 0; i < gt_sorted.size(); ++i) {
    if (!gt_used[i]) out.events.fn_ids.push_back(gt_sorted[i]->track_id);
  }
  for (std::size_t j = 0; j < res_sorted.size(); ++j) {
    if (!res_used[j]) out.events.fp_ids.push_back(res_sorted[j]->track_id);
  }
  out.events.matches = std::move(matches);
  return out;
}

PreprocessedSequence preprocess_sequence(const SequenceData& seq, const MatchingConfig& cfg) {
  cfg.validate();
  if (seq.num_frames <= 0) throw std::invalid_argument("sequence has no frames: " + seq.name);

  const auto n = static_cast<std::size_t>(seq.num_frames);
  std::vector<std::vector<BoxEntry>> gt_by_frame(n);
  std::vector<std::vector<BoxEntry>> res_by_frame(n);
  auto bucket = [&](const std::vector<BoxEntry>& entries, auto& into) {
    for (const auto& e : entries) {
      if (e.frame < 1 || e.frame > seq.num_frames) {
        throw std::out_of_range(seq.name + ": frame " + std::to_string(e.frame) +
                                " outside 1.." + std::to_string(seq.num_frames));
      }
      into[static_cast<std::size_t>(e.frame - 1)].push_back(e);
    }
  };
  bucket(seq.gt, gt_by_frame);
  bucket(seq.results, res_by_frame);

  PreprocessedSequence out;
  out.name = seq.display_name();
  out.num_frames = seq.num_frames;
  out.frames.reserve(n);
  for (std::size_t f = 0; f < n; ++f) {
    out.frames.push_back(preprocess_frame(gt_by_frame[f], res_by_frame[f], cfg));
  }
  return out;
}

EventLog run_matching(const PreprocessedSequence& seq, const MatchingConfig& cfg) {
  EventLog log;
  log.sequence = seq.name;
  log.num_frames = seq.num_frames;
  log.frames.reserve(seq.frames.size());

  // First and last annotated frame per trajectory.
  std::map<int, std::pair<int, int>> extent;
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    const int frame = static_cast<int>(f) + 1;
    for (const auto& g : seq.frames[f].gt) {
      auto [it, inserted] = extent.try_emplace(g.track_id, frame, frame);
      if (!inserted) it->second.second = frame;
    }
  }
  for (const auto& [id, range] : extent) {
    log.timelines[id] = TrackTimeline{range.first,
                                      std::vector<bool>(range.second - range.first + 1, false)};
  }

  MatchState state;
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    const int frame = static_cast<int>(f) + 1;
    auto step = match_frame(frame, seq.frames[f].gt, seq.frames[f].results, state, cfg);
    for (const auto& m : step.events.matches) {
      auto& tl = log.timelines[m.gt_id];
      tl.tracked[static_cast<std::size_t>(frame - tl.first_frame)] = true;
    }
    state = std::move(step.state);
    log.frames.push_back(std::move(step.events));
  }
  return log;
}

EventLog run_sequence(const SequenceData& seq, const MatchingConfig& cfg) {
  return run_matching(preprocess_sequence(seq, cfg), cfg);
}

}  // namespace moteval
