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

#ifndef MOTEVAL_CLEARMOT_HPP_
#define MOTEVAL_CLEARMOT_HPP_

#include <optional>
#include <span>
#include <stdexcept>

#include "moteval/assignment.hpp"

namespace moteval {

/// Raised when a metric's denominator is zero.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Additive event counts. Pooling sequences is a componentwise sum.
struct Counts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  long long idsw = 0;
  long long fm = 0;
  long long gt_total = 0;
  long long frames = 0;
  double overlap_sum = 0.0;
  long long match_total = 0;
  long long mt = 0;
  long long pt = 0;
  long long ml = 0;
  long long gt_tracks = 0;

  Counts& operator+=(const Counts& o);
  bool operator==(const Counts&) const = default;
};

// Track coverage thresholds: mostly tracked at >= 80% of the life span,
// mostly lost below 20%.
enum class TrackClass { MostlyTracked, PartiallyTracked, MostlyLost };
TrackClass classify_track(int tracked_frames, int span);

/// Number of tracked -> untracked transitions that are followed by a
/// return to tracked.
int count_fragmentations(const TrackTimeline& timeline);

Counts accumulate(const EventLog& log);

double mota(const Counts& c);
double motp(const Counts& c);

struct Rates {
  std::optional<double> far;        // false alarms per frame
  std::optional<double> recall;     // percent
  std::optional<double> precision;  // percent
  std::optional<double> idswr;      // IDSW per recall percent point
  std::optional<double> fmr;        // FM per recall percent point
};

Rates derived_rates(const Counts& c);

/// Componentwise sum. Throws std::invalid_argument on an empty list.
Counts pool(std::span<const Counts> counts);

}  // namespace moteval

#endif  // MOTEVAL_CLEARMOT_HPP_
