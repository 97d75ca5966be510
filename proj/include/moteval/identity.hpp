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

#ifndef MOTEVAL_IDENTITY_HPP_
#define MOTEVAL_IDENTITY_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moteval/assignment.hpp"
#include "moteval/model.hpp"

namespace moteval {

/// Track-level overlap statistics between every ground-truth and predicted
/// trajectory of a sequence.
struct TrackMatchTable {
  std::vector<int> gt_ids;    // ascending
  std::vector<int> pred_ids;  // ascending
  std::vector<long long> gt_lengths;
  std::vector<long long> pred_lengths;
  // co_detections[i * pred_ids.size() + j]: frames where both tracks exist
  // and overlap by at least the threshold.
  std::vector<long long> co_detections;

  long long co(std::size_t gt, std::size_t pred) const {
    return co_detections[gt * pred_ids.size() + pred];
  }
};

TrackMatchTable build_table(std::span<const BoxEntry> gt, std::span<const BoxEntry> pred,
                            double iou_threshold);

/// Same as above on boxes that already went through distractor handling.
TrackMatchTable build_table(const PreprocessedSequence& seq, double iou_threshold);

struct IdentityCounts {
  long long idtp = 0;
  long long idfp = 0;
  long long idfn = 0;

  IdentityCounts& operator+=(const IdentityCounts& o) {
    idtp += o.idtp;
    idfp += o.idfp;
    idfn += o.idfn;
    return *this;
  }
  bool operator==(const IdentityCounts&) const = default;
};

struct IdentityScores {
  IdentityCounts counts;
  std::optional<double> idp;   // percent
  std::optional<double> idr;   // percent
  std::optional<double> idf1;  // percent
  std::vector<std::pair<int, int>> matched_tracks;  // (gt id, pred id)
};

/// Ratios from (possibly pooled) counts; undefined ratios stay empty.
IdentityScores identity_scores(const IdentityCounts& counts);

/// Optimal one-to-one track pairing maximizing co-detected frames, solved as
/// a min-cost assignment over a matrix augmented with one dummy node per
/// track. Pairing (i, j) costs the boxes of i and j it leaves unexplained;
/// a track paired with its dummy costs its full length.
IdentityScores solve_identity(const TrackMatchTable& table);

}  // namespace moteval

#endif  // MOTEVAL_IDENTITY_HPP_
