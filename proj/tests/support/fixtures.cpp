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

#include "fixtures.hpp"

namespace moteval::testing {

SequenceData scenario_id_switch() {
  std::vector<BoxEntry> gt;
  std::vector<BoxEntry> res;
  for (int f = 1; f <= 6; ++f) gt.push_back(gt_box(f, 1, 0.0, 0.0));
  for (int f = 1; f <= 3; ++f) res.push_back(res_box(f, 1, 1.0, 0.0));
  for (int f = 4; f <= 6; ++f) res.push_back(res_box(f, 2, -1.0, 0.0));
  return make_sequence("scenario-a", 6, gt, res);
}

SequenceData scenario_fragmentation() {
  std::vector<BoxEntry> gt;
  std::vector<BoxEntry> res;
  for (int f = 1; f <= 6; ++f) gt.push_back(gt_box(f, 1, 0.0, 0.0));
  for (int f = 1; f <= 2; ++f) res.push_back(res_box(f, 1, 1.0, 0.0));
  for (int f = 4; f <= 6; ++f) res.push_back(res_box(f, 2, -1.0, 0.0));
  return make_sequence("scenario-b", 6, gt, res);
}

SequenceData scenario_carryover() {
  std::vector<BoxEntry> gt;
  std::vector<BoxEntry> res;
  // Target 1 leaves hypothesis 1 after frame 2.
  for (int f = 1; f <= 6; ++f) gt.push_back(gt_box(f, 1, f <= 2 ? 0.0 : 20.0, 0.0));
  for (int f = 1; f <= 6; ++f) gt.push_back(gt_box(f, 2, 50.0, 0.0));
  // Hypothesis 1 crosses over onto target 2 in frames 3-5, closer than
  // hypothesis 2, but target 2 stays locked to hypothesis 2.
  const double h1[] = {0.0, 0.0, 50.5, 50.5, 50.5, 80.0};
  const double h2[] = {50.0, 52.0, 53.0, 53.0, 53.0};
  for (int f = 1; f <= 6; ++f) res.push_back(res_box(f, 1, h1[f - 1], 0.0));
  for (int f = 1; f <= 5; ++f) res.push_back(res_box(f, 2, h2[f - 1], 0.0));
  return make_sequence("scenario-c", 6, gt, res);
}

SequenceData scenario_interrupted() {
  std::vector<BoxEntry> gt;
  std::vector<BoxEntry> res;
  for (int f : {1, 2, 4, 5, 6}) gt.push_back(gt_box(f, 1, 0.0, 0.0));
  const double h1[] = {0.0, 0.0, 0.0, 0.0, 5.0};
  for (int f = 1; f <= 5; ++f) res.push_back(res_box(f, 1, h1[f - 1], 0.0));
  for (int f = 5; f <= 6; ++f) res.push_back(res_box(f, 2, 1.0, 0.0));
  return make_sequence("scenario-d", 6, gt, res);
}

}  // namespace moteval::testing
