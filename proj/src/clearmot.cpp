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

#include "moteval/clearmot.hpp"

namespace moteval {

Counts& Counts::operator+=(const Counts& o) {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  idsw += o.idsw;
  fm += o.fm;
  gt_total += o.gt_total;
  frames += o.frames;
  overlap_sum += o.overlap_sum;
  match_total += o.match_total;
  mt += o.mt;
  pt += o.pt;
  ml += o.ml;
  gt_tracks += o.gt_tracks;
  return *this;
}

TrackClass classify_track(int tracked_frames, int span) {
  // Integer form of ratio >= 0.8 and ratio < 0.2.
  if (5LL * tracked_frames >= 4LL * span) return TrackClass::MostlyTracked;
  if (5LL * tracked_frames < span) return TrackClass::MostlyLost;
  return TrackClass::PartiallyTracked;
}

int count_fragmentations(const TrackTimeline& timeline) {
  int fragments = 0;
  bool lost_after_tracking = false;
  bool was_tracked = false;
  for (bool tracked : timeline.tracked) {
    if (tracked) {
      if (lost_after_tracking) ++fragments;
      lost_after_tracking = false;
    } else if (was_tracked) {
      lost_after_tracking = true;
    }
    was_tracked = tracked;
  }
  return fragments;
}

Counts accumulate(const EventLog& log) {
  Counts c;
  c.frames = log.num_frames;
  for (const auto& f : log.frames) {
    c.tp += static_cast<long long>(f.matches.size());
    c.fp += static_cast<long long>(f.fp_ids.size());
    c.fn += static_cast<long long>(f.fn_ids.size());
    c.idsw += static_cast<long long>(f.idsw_ids.size());
    for (const auto& m : f.matches) c.overlap_sum += m.overlap;
  }
  c.match_total = c.tp;
  c.gt_total = c.tp + c.fn;

  for (const auto& [id, timeline] : log.timelines) {
    ++c.gt_tracks;
    c.fm += count_fragmentations(timeline);
    int tracked = 0;
    for (bool t : timeline.tracked) tracked += t ? 1 : 0;
    switch (classify_track(tracked, timeline.span())) {
      case TrackClass::MostlyTracked:
        ++c.mt;
        break;
      case TrackClass::PartiallyTracked:
        ++c.pt;
        break;
      case TrackClass::MostlyLost:
        ++c.ml;
        break;
    }
  }
  return c;
}

double mota(const Counts& c) {
  if (c.gt_total <= 0) throw UndefinedMetricError("MOTA undefined without ground truth");
  return 100.0 * (1.0 - static_cast<double>(c.fn + c.fp + c.idsw) /
                            static_cast<double>(c.gt_total));
}

double motp(const Counts& c) {
  if (c.match_total <= 0) throw UndefinedMetricError("MOTP undefined without matches");
  return 100.0 * c.overlap_sum / static_cast<double>(c.match_total);
}

Rates derived_rates(const Counts& c) {
  Rates r;
  if (c.frames > 0) r.far = static_cast<double>(c.fp) / static_cast<double>(c.frames);
  if (c.gt_total > 0) {
    r.recall = 100.0 * static_cast<double>(c.tp) / static_cast<double>(c.gt_total);
  }
  if (c.tp + c.fp > 0) {
    r.precision = 100.0 * static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  }
  if (r.recall && *r.recall > 0.0) {
    r.idswr = static_cast<double>(c.idsw) / *r.recall;
    r.fmr = static_cast<double>(c.fm) / *r.recall;
  }
  return r;
}

Counts pool(std::span<const Counts> counts) {
  if (counts.empty()) throw std::invalid_argument("pool needs at least one entry");
  Counts total;
  for (const auto& c : counts) total += c;
  return total;
}

}  // namespace moteval
