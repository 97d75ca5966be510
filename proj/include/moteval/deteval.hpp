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

#ifndef MOTEVAL_DETEVAL_HPP_
#define MOTEVAL_DETEVAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moteval/model.hpp"

namespace moteval {

enum class GtMode {
  TrackingGt,   // every active pedestrian annotation, occluded ones included
  VisibleOnly,  // pedestrians whose visibility reaches a cut
};

struct DetEvalConfig {
  double iou_threshold = 0.5;
  GtMode mode = GtMode::TrackingGt;
  // Required for GtMode::VisibleOnly.
  std::optional<double> visibility_cut;
  // Score of the public detection set; marks the operating point.
  std::optional<double> operating_threshold;
};

struct PRPoint {
  double threshold = 0.0;
  double recall = 0.0;     // percent
  double precision = 0.0;  // percent
};

struct PRCurve {
  std::vector<PRPoint> points;  // thresholds strictly decreasing
  double ap = 0.0;              // percent
  std::optional<PRPoint> operating_point;
};

/// Sweeps every distinct detection score. At each threshold the detections
/// scoring at least that much are matched greedily, per frame, to ground
/// truth in order of decreasing IoU.
PRCurve pr_curve(std::span<const BoxEntry> detections, std::span<const BoxEntry> gt,
                 const DetEvalConfig& cfg = {});

/// 11-point interpolated average precision in percent (0 for an empty curve).
double average_precision(const PRCurve& curve);

/// One "threshold,recall,precision" row per point, with a header line.
std::string curve_to_csv(const PRCurve& curve);

}  // namespace moteval

#endif  // MOTEVAL_DETEVAL_HPP_
