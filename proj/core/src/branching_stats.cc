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

#include "hawkes_dp/branching_stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "hawkes_dp/error.h"
#include "hawkes_dp/privacy.h"

namespace hawkes_dp {

double BorelLogPmf(double nu, std::int64_t j) {
  if (!(nu >= 0.0 && nu < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "Borel parameter must lie in [0, 1)");
  }
  if (j < 1) Fail(ErrorCode::kInvalidArgument, "Borel support starts at 1");
  if (nu == 0.0) {
    return j == 1 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  const auto jd = static_cast<double>(j);
  return -nu * jd + (jd - 1.0) * std::log(nu * jd) - std::lgamma(jd + 1.0);
}

double BorelPmf(double nu, std::int64_t j) {
  return std::exp(BorelLogPmf(nu, j));
}

double ProgenyTailBound(double nu, double d) {
  if (!(nu > 0.0 && nu < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "nu must lie in (0, 1)");
  }
  if (!(d > 1.0 / (1.0 - nu))) {
    Fail(ErrorCode::kPreconditionViolated, "need d > 1 / (1 - nu)");
  }
  const double rate = nu - 1.0 - std::log(nu);
  return std::exp(2.0 - rate * d);
}

double LargestTreeProbBound(double mu, double alpha, double horizon, double a) {
  if (!(a > 1.0)) Fail(ErrorCode::kInvalidArgument, "need a > 1");
  if (!(horizon > 0.0)) Fail(ErrorCode::kInvalidArgument, "need horizon > 0");
  const double e2 = std::numbers::e * std::numbers::e;
  return std::exp(-mu * horizon * e2 *
                  std::exp(-(10.0 * a / 21.0) * (1.0 - alpha)));
}

double LargestTreeScale(double mu, double alpha, double horizon, double gamma) {
  return 2.1 * (std::log(mu * horizon / gamma) + 2.0) / (1.0 - alpha);
}

std::int64_t TreeStats::total_events() const {
  return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
}

std::int64_t TreeStats::max_size() const {
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

double TreeStats::mean_size() const {
  if (sizes.empty()) return 0.0;
  return static_cast<double>(total_events()) / static_cast<double>(sizes.size());
}

std::map<std::int64_t, std::int64_t> TreeStats::Histogram() const {
  std::map<std::int64_t, std::int64_t> hist;
  for (std::int64_t s : sizes) ++hist[s];
  return hist;
}

TreeStats ComputeTreeSizes(const EventSequence& events) {
  if (!events.labeled() && !events.empty()) {
    Fail(ErrorCode::kInvalidArgument, "sequence carries no tree labels");
  }
  TreeStats stats;
  stats.horizon = events.horizon();
  const auto ids = events.tree_ids();
  const std::int64_t max_id =
      ids.empty() ? -1 : *std::max_element(ids.begin(), ids.end());
  if (max_id < 2 * static_cast<std::int64_t>(ids.size())) {
    // Dense ids (as produced by the simulator): count directly.
    std::vector<std::int64_t> counts(static_cast<std::size_t>(max_id + 1), 0);
    for (std::int64_t id : ids) ++counts[static_cast<std::size_t>(id)];
    for (std::int64_t c : counts) {
      if (c > 0) stats.sizes.push_back(c);
    }
    return stats;
  }
  std::map<std::int64_t, std::int64_t> by_id;
  for (std::int64_t id : ids) ++by_id[id];
  stats.sizes.reserve(by_id.size());
  for (const auto& [id, size] : by_id) stats.sizes.push_back(size);
  return stats;
}

double DiscrepancyBound(const ParamBounds& bounds, double gamma, std::int64_t b,
                        double delta) {
  bounds.Validate();
  if (b < 1) Fail(ErrorCode::kInvalidArgument, "need B >= 1");
  const double au = bounds.alpha_upper;
  const double min_delta = 10.0 * au * au / (2.0 * (1.0 - au));
  if (!(delta > min_delta)) {
    Fail(ErrorCode::kPreconditionViolated,
         "bin width " + std::to_string(delta) + " must exceed " +
             std::to_string(min_delta));
  }
  return std::pow(static_cast<double>(b), 1.5) * std::sqrt(delta) *
         C1Constant(bounds, gamma);
}

}  // namespace hawkes_dp
