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
#include <numeric>
#include <random>

#include "doctest.h"
#include "moteval/linear_assignment.hpp"

using namespace moteval;

namespace {

double total(const CostMatrix& m, const std::vector<int>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] >= 0) s += m(r, static_cast<std::size_t>(a[r]));
  }
  return s;
}

// Minimum over all injective maps from the smaller side.
double brute_force(const CostMatrix& m) {
  const bool tall = m.rows() > m.cols();
  const std::size_t small = tall ? m.cols() : m.rows();
  const std::size_t large = tall ? m.rows() : m.cols();
  std::vector<std::size_t> perm(large);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 1e300;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < small; ++i) s += tall ? m(perm[i], i) : m(i, perm[i]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("empty matrices") {
  CHECK(solve_linear_assignment(CostMatrix(0, 3)).empty());
  CHECK(solve_linear_assignment(CostMatrix(2, 0)) == std::vector<int>{-1, -1});
}

TEST_CASE("classic 3x3") {
  CostMatrix m(3, 3);
  const double v[3][3] = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v[r][c];
  const auto a = solve_linear_assignment(m);
  CHECK(total(m, a) == 5.0);
}

TEST_CASE("random rectangular matrices match enumeration") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_real_distribution<double> val(0.0, 10.0);
  for (int k = 0; k < 300; ++k) {
    CostMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = val(rng);
    const auto a = solve_linear_assignment(m);
    REQUIRE(a.size() == m.rows());
    std::vector<int> cols;
    for (int c : a) {
      if (c >= 0) cols.push_back(c);
    }
    CHECK(cols.size() == std::min(m.rows(), m.cols()));
    std::sort(cols.begin(), cols.end());
    CHECK(std::adjacent_find(cols.begin(), cols.end()) == cols.end());
    CHECK(total(m, a) == doctest::Approx(brute_force(m)).epsilon(1e-9));
  }
}
