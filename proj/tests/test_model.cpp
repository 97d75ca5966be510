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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "moteval/model.hpp"
#include "oracles.hpp"

using namespace moteval;
using moteval::testing::gt_box;

TEST_CASE("box rejects non-positive extent") {
  CHECK_THROWS_AS(Box(0, 0, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(Box(0, 0, 10, -1), std::invalid_argument);
  CHECK_NOTHROW(Box(-50, -20, 10, 10));
}

TEST_CASE("iou basic cases") {
  const Box a(0, 0, 10, 10);
  CHECK(iou(a, a) == doctest::Approx(1.0));
  CHECK(iou(a, Box(20, 20, 5, 5)) == 0.0);
  CHECK(iou(a, Box(10, 0, 10, 10)) == 0.0);  // touching edges
  CHECK(iou(a, Box(5, 0, 10, 10)) == doctest::Approx(50.0 / 150.0));
  CHECK(testing::pixel_iou(a, Box(5, 0, 10, 10)) == doctest::Approx(50.0 / 150.0));
}

TEST_CASE("iou matches pixel counting on integer boxes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pos(-5, 15);
  std::uniform_int_distribution<int> ext(1, 12);
  for (int k = 0; k < 300; ++k) {
    const Box a(pos(rng), pos(rng), ext(rng), ext(rng));
    const Box b(pos(rng), pos(rng), ext(rng), ext(rng));
    CHECK(iou(a, b) == doctest::Approx(testing::pixel_iou(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("iou is symmetric and translation invariant") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> pos(-50, 50);
  std::uniform_real_distribution<double> ext(1, 40);
  for (int k = 0; k < 500; ++k) {
    const Box a(pos(rng), pos(rng), ext(rng), ext(rng));
    const Box b(pos(rng), pos(rng), ext(rng), ext(rng));
    const double dx = pos(rng);
    const double dy = pos(rng);
    const double o = iou(a, b);
    CHECK(o == iou(b, a));
    CHECK(o >= 0.0);
    CHECK(o <= 1.0);
    const Box a2(a.left() + dx, a.top() + dy, a.width(), a.height());
    const Box b2(b.left() + dx, b.top() + dy, b.width(), b.height());
    CHECK(iou(a2, b2) == doctest::Approx(o).epsilon(1e-9));
    if (o >= 0.5) {
      const double inter = intersection_area(a, b);
      CHECK(inter > a.area() / 3.0);
      CHECK(inter > b.area() / 3.0);
    }
  }
}

TEST_CASE("object classes") {
  CHECK(object_class_from_code(1) == ObjectClass::Pedestrian);
  CHECK(object_class_from_code(12) == ObjectClass::Reflection);
  CHECK_FALSE(object_class_from_code(0).has_value());
  CHECK_FALSE(object_class_from_code(13).has_value());
  int neutral = 0;
  for (int code = 1; code <= 12; ++code) {
    if (is_neutral_default(*object_class_from_code(code))) ++neutral;
  }
  CHECK(neutral == 4);
  CHECK(is_neutral_default(ObjectClass::PersonOnVehicle));
  CHECK(is_neutral_default(ObjectClass::StaticPerson));
  CHECK(is_neutral_default(ObjectClass::Distractor));
  CHECK(is_neutral_default(ObjectClass::Reflection));
}

TEST_CASE("derive_visibility") {
  SUBCASE("single box is fully visible") {
    const std::vector<BoxEntry> f = {gt_box(1, 1, 0, 0, 10, 20)};
    CHECK(derive_visibility(f).at(1) == 1.0);
  }
  SUBCASE("box behind a larger, closer box is hidden") {
    const std::vector<BoxEntry> f = {gt_box(1, 1, 2, 2, 5, 5), gt_box(1, 2, 0, 0, 20, 20)};
    const auto vis = derive_visibility(f);
    CHECK(vis.at(1) == 0.0);
    CHECK(vis.at(2) == 1.0);
  }
  SUBCASE("half covered") {
    // Box 2 ends lower in the image, so it is in front.
    const std::vector<BoxEntry> f = {gt_box(1, 1, 0, 0, 10, 10), gt_box(1, 2, 5, 0, 10, 12)};
    const auto vis = derive_visibility(f);
    CHECK(vis.at(1) == doctest::Approx(0.5));
    CHECK(vis.at(2) == 1.0);
    CHECK(testing::pixel_visibility(f).at(1) == doctest::Approx(0.5));
  }
  SUBCASE("equal bottoms: larger occludes smaller") {
    const std::vector<BoxEntry> f = {gt_box(1, 1, 0, 5, 10, 10), gt_box(1, 2, 4, 0, 10, 15)};
    const auto vis = derive_visibility(f);
    CHECK(vis.at(1) == doctest::Approx(0.4));
    CHECK(vis.at(2) == 1.0);
  }
}

TEST_CASE("derive_visibility matches pixel oracle and ignores input order") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pos(0, 30);
  std::uniform_int_distribution<int> ext(2, 15);
  std::uniform_int_distribution<int> count(1, 6);
  for (int k = 0; k < 100; ++k) {
    std::vector<BoxEntry> frame;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) frame.push_back(gt_box(1, i + 1, pos(rng), pos(rng), ext(rng), ext(rng)));
    const auto vis = derive_visibility(frame);
    const auto oracle = testing::pixel_visibility(frame);
    for (const auto& [id, v] : oracle) CHECK(vis.at(id) == doctest::Approx(v).epsilon(1e-12));
    std::shuffle(frame.begin(), frame.end(), rng);
    CHECK(derive_visibility(frame) == vis);
  }
}
