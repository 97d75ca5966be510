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

#ifndef MOTEVAL_EVALUATE_HPP_
#define MOTEVAL_EVALUATE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moteval/assignment.hpp"
#include "moteval/clearmot.hpp"
#include "moteval/identity.hpp"
#include "moteval/model.hpp"

namespace moteval {

/// Everything needed to report one (tracker, sequence) pair. Both count sets
/// are additive, so benchmark figures come from summing these.
struct SequenceResult {
  std::string name;
  Counts counts;
  IdentityCounts identity;
};

/// Runs distractor handling once and feeds the same boxes to the CLEAR-MOT
/// engine and the identity matcher.
SequenceResult evaluate_sequence(const SequenceData& seq, const MatchingConfig& cfg);

/// Reference path: one sequence after another on the calling thread.
std::vector<SequenceResult> evaluate_serial(std::span<const SequenceData> seqs,
                                            const MatchingConfig& cfg);

/// OpenMP path over sequences. Output order follows the input order and the
/// values are identical to evaluate_serial for any thread count. The first
/// failing sequence (by index) has its exception rethrown.
std::vector<SequenceResult> evaluate_parallel(std::span<const SequenceData> seqs,
                                              const MatchingConfig& cfg, int threads);

struct PooledResult {
  Counts counts;
  IdentityCounts identity;
};

/// Ordered fold of per-sequence counts (sequence concatenation).
PooledResult pool_results(std::span<const SequenceResult> results);

/// Copy of `detections` turned into tracker output: every box gets its own
/// id, so no identity is ever shared across frames.
std::vector<BoxEntry> detections_as_results(std::span<const BoxEntry> detections);

struct ErrorRatios {
  long long tracker_fp = 0;
  long long detector_fp = 0;
  long long tracker_fn = 0;
  long long detector_fn = 0;
  std::optional<double> fp_ratio;  // tracker FP / detector FP
  std::optional<double> fn_ratio;  // tracker FN / detector FN
};

ErrorRatios error_ratios(const Counts& tracker, const Counts& detector);

int max_threads();

}  // namespace moteval

#endif  // MOTEVAL_EVALUATE_HPP_
