// Copyright 2026 The Hawkes-DP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAWKES_DP_COUNT_SERIES_H_
#define HAWKES_DP_COUNT_SERIES_H_

#include <cstdint>
#include <vector>

#include "hawkes_dp/hawkes.h"

namespace hawkes_dp {

// Counts of events in the K consecutive bins [i * delta, (i + 1) * delta).
// horizon is K * delta, i.e. the part of the observation window that was
// actually binned.
struct CountSeries {
  std::vector<std::int64_t> counts;
  double delta = 0.0;
  double horizon = 0.0;

  std::size_t size() const { return counts.size(); }
  // Throws kInvalidArgument unless K >= 2, counts are nonnegative and
  // horizon matches K * delta.
  void Validate() const;
};

struct SampleStats {
  double eta_hat = 0.0;       // sample mean
  double sigma_sq_hat = 0.0;  // unbiased sample variance (divisor K - 1)
  std::int64_t k = 0;
};

// K = floor(horizon / delta); the trailing partial bin is dropped.
// Throws kPreconditionViolated if fewer than two whole bins fit.
CountSeries BinEvents(const EventSequence& events, double delta);

// Builds a series from raw counts, horizon = K * delta.
CountSeries MakeCountSeries(std::vector<std::int64_t> counts, double delta);

SampleStats ComputeSampleStats(const CountSeries& series);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_COUNT_SERIES_H_
