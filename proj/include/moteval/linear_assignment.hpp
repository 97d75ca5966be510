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

#ifndef MOTEVAL_LINEAR_ASSIGNMENT_HPP_
#define MOTEVAL_LINEAR_ASSIGNMENT_HPP_

#include <cstddef>
#include <vector>

namespace moteval {

/// Dense row-major matrix of assignment costs.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Minimum-cost rectangular assignment (Kuhn-Munkres with potentials,
/// O(n^2 m)). Every row of the smaller side is assigned. Returns, per row,
/// the chosen column or -1 if the row was left unassigned because the matrix
/// has more rows than columns. Results are deterministic for a given matrix.
std::vector<int> solve_linear_assignment(const CostMatrix& cost);

}  // namespace moteval

#endif  // MOTEVAL_LINEAR_ASSIGNMENT_HPP_
