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

#include "moteval/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace moteval {

Box::Box(double left, double top, double width, double height)
    : left_(left), top_(top), width_(width), height_(height) {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(left) ||
      !std::isfinite(top) || !std::isfinite(width) || !std::isfinite(height)) {
    throw std::invalid_argument("box needs finite coordinates and positive extent");
  }
}

namespace {

constexpr std::array<std::string_view, 13> kClassNames = {
    "other",       "pedestrian", "person_on_vehicle", "car",
    "bicycle",     "motorbike",  "non_motorized_vehicle",
    "static_person", "distractor", "occluder", "occluder_on_ground",
    "occluder_full", "reflection"};

}  // namespace

std::optional<ObjectClass> object_class_from_code(int code) {
  if (code < 1 || code > 12) return std::nullopt;
  return static_cast<ObjectClass>(code);
}

std::string_view to_string(ObjectClass c) {
  return kClassNames[static_cast<std::size_t>(c)];
}

bool is_neutral_default(ObjectClass c) {
  switch (c) {
    case ObjectClass::PersonOnVehicle:
    case ObjectClass::StaticPerson:
    case ObjectClass::Distractor:
    case ObjectClass::Reflection:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(Detector d) {
  switch (d) {
    case Detector::DPM:
      return "DPM";
    case Detector::FRCNN:
      return "FRCNN";
    case Detector::SDP:
      return "SDP";
  }
  return "?";
}

std::optional<Detector> detector_from_string(std::string_view s) {
  if (s == "DPM") return Detector::DPM;
  if (s == "FRCNN") return Detector::FRCNN;
  if (s == "SDP") return Detector::SDP;
  return std::nullopt;
}

std::string SequenceData::display_name() const {
  if (!detector) return name;
  return name + "-" + std::string(to_string(*detector));
}

double intersection_area(const Box& a, const Box& b) {
  const double w = std::min(a.right(), b.right()) - std::max(a.left(), b.left());
  const double h = std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

double iou(const Box& a, const Box& b) {
  const double inter = intersection_area(a, b);
  if (inter <= 0.0) return 0.0;
  const double uni = a.area() + b.area() - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

namespace {

struct Rect {
  double x0, y0, x1, y1;
};

// Area of the union of rectangles, by coordinate compression.
double union_area(const std::vector<Rect>& rects) {
  if (rects.empty()) return 0.0;
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(rects.size() * 2);
  ys.reserve(rects.size() * 2);
  for (const auto& r : rects) {
    xs.push_back(r.x0);
    xs.push_back(r.x1);
    ys.push_back(r.y0);
    ys.push_back(r.y1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double cx = 0.5 * (xs[i] + xs[i + 1]);
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      const double cy = 0.5 * (ys[j] + ys[j + 1]);
      const bool covered = std::any_of(rects.begin(), rects.end(), [&](const Rect& r) {
        return cx > r.x0 && cx < r.x1 && cy > r.y0 && cy < r.y1;
      });
      if (covered) total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
    }
  }
  return total;
}

bool occludes(const Box& front, const Box& back) {
  if (front.bottom() != back.bottom()) return front.bottom() > back.bottom();
  return front.area() > back.area();
}

}  // namespace

std::map<int, double> derive_visibility(std::span<const BoxEntry> frame_gt) {
  std::map<int, double> out;
  for (std::size_t i = 0; i < frame_gt.size(); ++i) {
    const Box& target = frame_gt[i].box;
    std::vector<Rect> clipped;
    for (std::size_t j = 0; j < frame_gt.size(); ++j) {
      if (j == i) continue;
      const Box& other = frame_gt[j].box;
      if (!occludes(other, target)) continue;
      Rect r{std::max(target.left(), other.left()), std::max(target.top(), other.top()),
             std::min(target.right(), other.right()),
             std::min(target.bottom(), other.bottom())};
      if (r.x1 > r.x0 && r.y1 > r.y0) clipped.push_back(r);
    }
    const double covered = union_area(clipped);
    out[frame_gt[i].track_id] = std::clamp(1.0 - covered / target.area(), 0.0, 1.0);
  }
  return out;
}

}  // namespace moteval
