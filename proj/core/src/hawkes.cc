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

#include "hawkes_dp/hawkes.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hawkes_dp/error.h"
#include "hawkes_dp/random.h"

namespace hawkes_dp {

namespace {

void CheckSimulationArgs(const HawkesParams& params, double horizon,
                         double warmup) {
  params.Validate();
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    Fail(ErrorCode::kInvalidArgument, "horizon must be positive and finite");
  }
  if (!(warmup >= 0.0) || !std::isfinite(warmup)) {
    Fail(ErrorCode::kInvalidArgument, "warmup must be nonnegative and finite");
  }
}

struct RawEvent {
  double time;
  std::int64_t tree;
  std::int64_t parent;  // index into the raw event list, -1 for immigrants
};

}  // namespace

void HawkesParams::Validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    Fail(ErrorCode::kInvalidArgument,
         "mu must be positive, got " + std::to_string(mu));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

EventSequence::EventSequence(std::vector<double> timestamps, double horizon)
    : timestamps_(std::move(timestamps)), horizon_(horizon) {
  Validate();
}

EventSequence::EventSequence(
    std::vector<double> timestamps, std::vector<std::int64_t> tree_ids,
    std::vector<std::optional<std::size_t>> parent_indices, double horizon)
    : timestamps_(std::move(timestamps)),
      tree_ids_(std::move(tree_ids)),
      parent_indices_(std::move(parent_indices)),
      horizon_(horizon) {
  Validate();
}

void EventSequence::Validate() const {
  if (!(horizon_ >= 0.0) || !std::isfinite(horizon_)) {
    Fail(ErrorCode::kInvalidArgument, "horizon must be finite and >= 0");
  }
  for (std::size_t i = 0; i < timestamps_.size(); ++i) {
    const double t = timestamps_[i];
    if (!(t >= 0.0 && t <= horizon_)) {
      Fail(ErrorCode::kInvalidArgument,
           "timestamp " + std::to_string(i) + " outside [0, horizon]");
    }
    // Ties are tolerated and keep insertion order.
    if (i > 0 && t < timestamps_[i - 1]) {
      Fail(ErrorCode::kInvalidArgument,
           "timestamps not sorted at index " + std::to_string(i));
    }
  }
  if (tree_ids_.empty() && parent_indices_.empty()) return;
  if (tree_ids_.size() != timestamps_.size() ||
      parent_indices_.size() != timestamps_.size()) {
    Fail(ErrorCode::kInvalidArgument, "label columns differ in length");
  }
  for (std::size_t i = 0; i < timestamps_.size(); ++i) {
    if (tree_ids_[i] < 0) {
      Fail(ErrorCode::kInvalidArgument, "negative tree id");
    }
    if (const auto& parent = parent_indices_[i]) {
      if (*parent >= i || !(timestamps_[*parent] < timestamps_[i]) ||
          tree_ids_[*parent] != tree_ids_[i]) {
        Fail(ErrorCode::kInvalidArgument,
             "inconsistent parent for event " + std::to_string(i));
      }
    }
  }
}

double IntensityAt(const HawkesParams& params, const EventSequence& events,
                   double t) {
  double excitation = 0.0;
  for (double ti : events.timestamps()) {
    if (!(ti < t)) break;
    excitation += std::exp(-(t - ti));
  }
  return params.mu + params.alpha * excitation;
}

double DefaultWarmup(const HawkesParams& params) {
  return 20.0 / (1.0 - params.alpha);
}

EventSequence SimulateThinning(const HawkesParams& params, double horizon,
                               std::uint64_t seed,
                               std::optional<double> warmup) {
  const double burn = warmup.value_or(DefaultWarmup(params));
  CheckSimulationArgs(params, horizon, burn);

  Rng rng(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(1.1 * params.StationaryRate() * horizon) +
              16);
  double t = -burn;
  double excitation = 0.0;  // sum of alpha * exp(-(t - t_i)) at time t
  while (true) {
    // Intensity only decays until the next event, so its current value
    // bounds it over the next candidate gap.
    const double bound = params.mu + excitation;
    const double gap = rng.Exponential(bound);
    t += gap;
    if (t > horizon) break;
    excitation *= std::exp(-gap);
    if (rng.Uniform() * bound <= params.mu + excitation) {
      excitation += params.alpha;
      if (t >= 0.0) out.push_back(t);
    }
  }
  return EventSequence(std::move(out), horizon);
}

EventSequence SimulateBranching(const HawkesParams& params, double horizon,
                                std::uint64_t seed,
                                std::optional<double> warmup) {
  const double burn = warmup.value_or(DefaultWarmup(params));
  CheckSimulationArgs(params, horizon, burn);

  Rng rng(seed);
  std::vector<RawEvent> raw;
  raw.reserve(static_cast<std::size_t>(
                  1.1 * params.StationaryRate() * (horizon + burn)) +
              16);

  std::int64_t tree = 0;
  std::vector<std::size_t> stack;
  for (double t = -burn + rng.Exponential(params.mu); t <= horizon;
       t += rng.Exponential(params.mu)) {
    // Grow each tree completely before drawing the next immigrant, so the
    // random stream is consumed in a fixed order.
    raw.push_back({t, tree, -1});
    stack.push_back(raw.size() - 1);
    while (!stack.empty()) {
      const std::size_t parent = stack.back();
      stack.pop_back();
      const double parent_time = raw[parent].time;
      const std::int64_t children = rng.Poisson(params.alpha);
      for (std::int64_t c = 0; c < children; ++c) {
        const double child_time = parent_time + rng.Exponential(1.0);
        if (child_time > horizon) continue;
        raw.push_back({child_time, tree, static_cast<std::int64_t>(parent)});
        stack.push_back(raw.size() - 1);
      }
    }
    ++tree;
  }

  std::vector<std::size_t> order;
  order.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].time >= 0.0) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw[a].time < raw[b].time;
  });

  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> output_index(raw.size(), kAbsent);
  for (std::size_t k = 0; k < order.size(); ++k) output_index[order[k]] = k;

  std::vector<double> times(order.size());
  std::vector<std::int64_t> trees(order.size());
  std::vector<std::optional<std::size_t>> parents(order.size());
  std::unordered_map<std::int64_t, std::int64_t> compact;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const RawEvent& e = raw[order[k]];
    times[k] = e.time;
    auto [it, inserted] =
        compact.try_emplace(e.tree, static_cast<std::int64_t>(compact.size()));
    trees[k] = it->second;
    if (e.parent >= 0) {
      const std::size_t p = output_index[static_cast<std::size_t>(e.parent)];
      if (p != kAbsent) parents[k] = p;
    }
  }
  return EventSequence(std::move(times), std::move(trees), std::move(parents),
                       horizon);
}

double StationaryBinVariance(double mu, double alpha, double delta) {
  const double one_minus = 1.0 - alpha;
  const double x = one_minus * delta;
  const double om2 = one_minus * one_minus;
  const double om3 = om2 * one_minus;
  const double om4 = om2 * om2;
  return mu * delta / om3 +
         alpha * alpha * mu * (-std::expm1(-2.0 * x)) / (2.0 * om4) -
         2.0 * alpha * mu * (-std::expm1(-x)) / om4;
}

TheoreticalMoments ComputeTheoreticalMoments(const HawkesParams& params,
                                             double delta) {
  params.Validate();
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    Fail(ErrorCode::kInvalidArgument, "bin width must be positive");
  }
  return TheoreticalMoments{
      .eta = params.mu * delta / (1.0 - params.alpha),
      .sigma_sq = StationaryBinVariance(params.mu, params.alpha, delta),
      .delta = delta,
  };
}

TransientMoments ComputeTransientMoments(const HawkesParams& params,
                                         double lambda0, double t) {
  params.Validate();
  if (!(t > 0.0)) Fail(ErrorCode::kInvalidArgument, "t must be positive");
  if (!(lambda0 >= params.mu)) {
    Fail(ErrorCode::kInvalidArgument, "lambda0 must be at least mu");
  }
  const double a = params.alpha;
  const double om = 1.0 - a;
  const double lam_inf = params.mu / om;
  const double excess = lambda0 - lam_inf;
  const double decay1 = -std::expm1(-om * t);
  const double decay2 = -std::expm1(-2.0 * om * t);

  TransientMoments m;
  m.mean = lam_inf * t + excess / om * decay1;
  m.variance = lam_inf / (om * om) * t +
               a * a * (2.0 * lambda0 - lam_inf) / (2.0 * om * om * om) * decay2 -
               2.0 * a * excess / (om * om) * t * std::exp(-om * t) +
               ((1.0 + a) / (om * om) * excess - 2.0 * a / (om * om * om) * lam_inf) *
                   decay1;
  return m;
}

}  // namespace hawkes_dp
