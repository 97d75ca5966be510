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

#ifndef MOTEVAL_ASSIGNMENT_HPP_
#define MOTEVAL_ASSIGNMENT_HPP_

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "moteval/model.hpp"

namespace moteval {

struct MatchingConfig {
  double iou_threshold = 0.5;
  std::set<ObjectClass> neutral_classes = {ObjectClass::PersonOnVehicle, ObjectClass::StaticPerson,
                                           ObjectClass::Distractor, ObjectClass::Reflection};

  /// Throws std::invalid_argument unless 0 < iou_threshold <= 1.
  void validate() const;
};

struct Match {
  int gt_id = 0;
  int pred_id = 0;
  double overlap = 0.0;
  // True when the pair was kept from the previous frame without re-solving.
  bool carried_over = false;
};

struct FrameEvents {
  int frame = 0;
  std::vector<Match> matches;
  std::vector<int> fp_ids;
  std::vector<int> fn_ids;
  std::vector<int> idsw_ids;  // gt ids whose hypothesis changed this frame
};

/// Boxes of one frame after distractor handling.
struct PreprocessedFrame {
  std::vector<BoxEntry> gt;        // active pedestrians only
  std::vector<BoxEntry> results;   // results still subject to scoring
  std::vector<BoxEntry> removed;   // results absorbed by a neutral annotation
};

/// Drops result boxes that cover a neutral-class annotation and keeps only
/// active pedestrian ground truth.
///
/// All results are first matched against every annotation of the frame (any
/// class, any flag) with the same optimal assignment used for scoring. A
/// result whose partner has a neutral class and overlaps it by strictly more
/// than the threshold is removed; it is neither a hit nor a false alarm.
PreprocessedFrame preprocess_frame(std::span<const BoxEntry> gt_frame,
                                   std::span<const BoxEntry> res_frame,
                                   const MatchingConfig& cfg);

/// Matching state threaded through a sequence.
struct MatchState {
  std::map<int, int> previous;    // gt id -> pred id matched in the previous frame
  std::map<int, int> last_known;  // gt id -> most recent pred id, never forgotten
};

struct FrameMatch {
  FrameEvents events;
  MatchState state;
};

/// Matches one preprocessed frame. Pairs from the previous frame that still
/// overlap by at least the threshold are kept unconditionally; the remaining
/// boxes are assigned optimally with cost 1 - IoU, pairs below the threshold
/// being infeasible. An identity switch is recorded whenever a ground-truth
/// object is matched to a hypothesis other than its last known one.
FrameMatch match_frame(int frame, std::span<const BoxEntry> gt, std::span<const BoxEntry> res,
                       const MatchState& prev, const MatchingConfig& cfg);

/// Per-frame boxes of a whole sequence after preprocessing; index 0 is frame 1.
struct PreprocessedSequence {
  std::string name;
  int num_frames = 0;
  std::vector<PreprocessedFrame> frames;
};

PreprocessedSequence preprocess_sequence(const SequenceData& seq, const MatchingConfig& cfg);

/// Tracked/untracked timeline of one ground-truth trajectory, spanning its
/// first to last annotated frame. Frames inside the span without an active
/// annotation count as untracked.
struct TrackTimeline {
  int first_frame = 0;
  std::vector<bool> tracked;

  int span() const { return static_cast<int>(tracked.size()); }
};

struct EventLog {
  std::string sequence;
  int num_frames = 0;
  std::vector<FrameEvents> frames;
  std::map<int, TrackTimeline> timelines;
};

EventLog run_matching(const PreprocessedSequence& seq, const MatchingConfig& cfg);

EventLog run_sequence(const SequenceData& seq, const MatchingConfig& cfg);

}  // namespace moteval

#endif  // MOTEVAL_ASSIGNMENT_HPP_
