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

#ifndef MOTEVAL_MODEL_HPP_
#define MOTEVAL_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moteval {

/// Axis-aligned box in image coordinates (1-based, may extend past the frame).
class Box {
 public:
  Box() = default;
  /// Throws std::invalid_argument unless width > 0 and height > 0.
  Box(double left, double top, double width, double height);

  double left() const { return left_; }
  double top() const { return top_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double right() const { return left_ + width_; }
  double bottom() const { return top_ + height_; }
  double area() const { return width_ * height_; }

  bool operator==(const Box&) const = default;

 private:
  double left_ = 0.0;
  double top_ = 0.0;
  double width_ = 1.0;
  double height_ = 1.0;
};

/// Annotation label codes as they appear in the class column of MOT16/17
/// ground truth. `Other` is never produced by a strict parse; lenient parsing
/// maps unknown codes to it.
enum class ObjectClass : int {
  Other = 0,
  Pedestrian = 1,
  PersonOnVehicle = 2,
  Car = 3,
  Bicycle = 4,
  Motorbike = 5,
  NonMotorizedVehicle = 6,
  StaticPerson = 7,
  Distractor = 8,
  Occluder = 9,
  OccluderOnGround = 10,
  OccluderFull = 11,
  Reflection = 12,
};

std::optional<ObjectClass> object_class_from_code(int code);
std::string_view to_string(ObjectClass c);

/// Classes a tracker is neither rewarded nor penalized for following.
bool is_neutral_default(ObjectClass c);

/// One row of a detection, ground-truth or result file.
struct BoxEntry {
  int frame = 1;
  int track_id = -1;
  Box box;
  // Detector score, or the 0/1 "consider this entry" flag for ground truth.
  double confidence = 1.0;
  ObjectClass object_class = ObjectClass::Pedestrian;
  double visibility = 1.0;

  bool operator==(const BoxEntry&) const = default;
};

enum class Detector { DPM, FRCNN, SDP };

std::string_view to_string(Detector d);
std::optional<Detector> detector_from_string(std::string_view s);

struct SequenceData {
  std::string name;
  int num_frames = 0;
  std::vector<BoxEntry> gt;
  std::vector<BoxEntry> results;
  std::vector<BoxEntry> detections;
  double fps = 0.0;
  // Set for MOT17, where each sequence is evaluated once per public detector.
  std::optional<Detector> detector;

  /// Name used in reports: "MOT17-02-FRCNN" when a detector tag is set.
  std::string display_name() const;
};

/// Intersection over union of two boxes treated as continuous rectangles.
double iou(const Box& a, const Box& b);

/// Area of the intersection of two boxes (0 when disjoint).
double intersection_area(const Box& a, const Box& b);

/// Visibility ratio for every entry of one frame, keyed by track id.
///
/// A box is occluded by every other box whose bottom edge is lower in the
/// image (larger y). Equal bottom edges resolve in favour of the larger box
/// occluding the smaller one. The result is 1 minus the fraction of the box
/// covered by the union of its occluders.
std::map<int, double> derive_visibility(std::span<const BoxEntry> frame_gt);

}  // namespace moteval

#endif  // MOTEVAL_MODEL_HPP_
