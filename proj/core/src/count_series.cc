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

#include "hawkes_dp/count_series.h"

#include <cmath>
#include <string>

#include "hawkes_dp/error.h"

namespace hawkes_dp {

void CountSeries::Validate() const {
  if (counts.size() < 2) {
    Fail(ErrorCode::kPreconditionViolated,
         "count series needs at least 2 bins, got " +
             std::to_string(counts.size()));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    Fail(ErrorCode::kInvalidArgument, "bin width must be positive");
  }
  const double expected = static_cast<double>(counts.size()) * delta;
  if (std::abs(horizon - expected) > 1e-9 * expected) {
    Fail(ErrorCode::kInvalidArgument, "horizon differs from K * delta");
  }
  for (std::int64_t c : counts) {
    if (c < 0) Fail(ErrorCode::kInvalidArgument, "negative bin count");
  }
}

CountSeries BinEvents(const EventSequence& events, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    Fail(ErrorCode::kInvalidArgument, "bin width must be positive");
  }
  // Tolerate horizons that are a multiple of delta up to rounding.
  const double ratio = events.horizon() / delta;
  const auto k = static_cast<std::int64_t>(std::floor(ratio * (1.0 + 1e-12)));
  if (k < 2) {
    Fail(ErrorCode::kPreconditionViolated,
         "horizon " + std::to_string(events.horizon()) +
             " holds fewer than 2 bins of width " + std::to_string(delta));
  }
  CountSeries series;
  series.counts.assign(static_cast<std::size_t>(k), 0);
  series.delta = delta;
  series.horizon = static_cast<double>(k) * delta;
  for (double t : events.timestamps()) {
    const auto i = static_cast<std::int64_t>(std::floor(t / delta));
    if (i >= 0 && i < k) ++series.counts[static_cast<std::size_t>(i)];
  }
  return series;
}

CountSeries MakeCountSeries(std::vector<std::int64_t> counts, double delta) {
  CountSeries series;
  series.counts = std::move(counts);
  series.delta = delta;
  series.horizon = static_cast<double>(series.counts.size()) * delta;
  series.Validate();
  return series;
}

SampleStats ComputeSampleStats(const CountSeries& series) {
  series.Validate();
  const auto k = static_cast<std::int64_t>(series.size());
  std::int64_t total = 0;
  for (std::int64_t c : series.counts) total += c;
  const double mean = static_cast<double>(total) / static_cast<double>(k);
  double ss = 0.0;
  for (std::int64_t c : series.counts) {
    const double d = static_cast<double>(c) - mean;
    ss += d * d;
  }
  return SampleStats{.eta_hat = mean,
                     .sigma_sq_hat = ss / static_cast<double>(k - 1),
                     .k = k};
}

}  // namespace hawkes_dp
