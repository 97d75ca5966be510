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

#include "moteval/evaluate.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace moteval {

SequenceResult evaluate_sequence(const SequenceData& seq, const MatchingConfig& cfg) {
  const auto pre = preprocess_sequence(seq, cfg);
  SequenceResult out;
  out.name = pre.name;
  out.counts = accumulate(run_matching(pre, cfg));
  out.identity = solve_identity(build_table(pre, cfg.iou_threshold)).counts;
  return out;
}

std::vector<SequenceResult> evaluate_serial(std::span<const SequenceData> seqs,
                                            const MatchingConfig& cfg) {
  std::vector<SequenceResult> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(evaluate_sequence(s, cfg));
  return out;
}

std::vector<SequenceResult> evaluate_parallel(std::span<const SequenceData> seqs,
                                              const MatchingConfig& cfg, int threads) {
  const auto n = static_cast<long long>(seqs.size());
  std::vector<SequenceResult> out(seqs.size());
  std::vector<std::exception_ptr> errors(seqs.size());
  if (threads < 1) threads = 1;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = evaluate_sequence(seqs[k], cfg);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

PooledResult pool_results(std::span<const SequenceResult> results) {
  PooledResult p;
  for (const auto& r : results) {
    p.counts += r.counts;
    p.identity += r.identity;
  }
  return p;
}

std::vector<BoxEntry> detections_as_results(std::span<const BoxEntry> detections) {
  std::vector<BoxEntry> out(detections.begin(), detections.end());
  int next = 1;
  for (auto& e : out) {
    e.track_id = next++;
    e.object_class = ObjectClass::Pedestrian;
    e.visibility = 1.0;
  }
  return out;
}

ErrorRatios error_ratios(const Counts& tracker, const Counts& detector) {
  ErrorRatios r;
  r.tracker_fp = tracker.fp;
  r.tracker_fn = tracker.fn;
  r.detector_fp = detector.fp;
  r.detector_fn = detector.fn;
  if (detector.fp > 0) {
    r.fp_ratio = static_cast<double>(tracker.fp) / static_cast<double>(detector.fp);
  }
  if (detector.fn > 0) {
    r.fn_ratio = static_cast<double>(tracker.fn) / static_cast<double>(detector.fn);
  }
  return r;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace moteval
