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

#ifndef MOTEVAL_TESTS_FIXTURES_HPP_
#define MOTEVAL_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "moteval/model.hpp"

namespace moteval::testing {

inline BoxEntry gt_box(int frame, int id, double x, double y, double w = 10.0, double h = 10.0,
                       ObjectClass cls = ObjectClass::Pedestrian, double flag = 1.0,
                       double visibility = 1.0) {
  BoxEntry e;
  e.frame = frame;
  e.track_id = id;
  e.box = Box(x, y, w, h);
  e.confidence = flag;
  e.object_class = cls;
  e.visibility = visibility;
  return e;
}

inline BoxEntry res_box(int frame, int id, double x, double y, double w = 10.0,
                        double h = 10.0, double score = 1.0) {
  BoxEntry e;
  e.frame = frame;
  e.track_id = id;
  e.box = Box(x, y, w, h);
  e.confidence = score;
  return e;
}

inline SequenceData make_sequence(std::string name, int frames, std::vector<BoxEntry> gt,
                                  std::vector<BoxEntry> results) {
  SequenceData s;
  s.name = std::move(name);
  s.num_frames = frames;
  s.gt = std::move(gt);
  s.results = std::move(results);
  return s;
}

// Six-frame tracker-to-target assignment scenarios. Boxes are
// 10x10; a horizontal offset d gives IoU (10 - d) / (10 + d), so d <= 3 is a
// match at the 0.5 threshold and d >= 4 is not.

/// One target; hypothesis 1 follows it in frames 1-3, hypothesis 2 in 4-6.
SequenceData scenario_id_switch();

/// One target; hypothesis 1 in frames 1-2, nothing in frame 3, a new
/// hypothesis 2 in frames 4-6.
SequenceData scenario_fragmentation();

/// Two targets whose paths cross two straight hypotheses. The frame-1
/// assignment is carried over, one target is lost from frame 3 on and the
/// other in frame 6.
SequenceData scenario_carryover();

/// A target whose annotation is interrupted in frame 3. Hypothesis 1 covers
/// frames 1-4, drifts away in frame 5 where hypothesis 2 takes over.
SequenceData scenario_interrupted();

}  // namespace moteval::testing

#endif  // MOTEVAL_TESTS_FIXTURES_HPP_
