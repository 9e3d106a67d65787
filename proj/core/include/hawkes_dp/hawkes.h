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

// Exponential-kernel Hawkes process with unit decay rate:
//
//   lambda(t) = mu + sum_{t_i < t} alpha * exp(-(t - t_i)),  0 < alpha < 1.
//
// Two independent generators (thinning and immigration-birth branching) and
// the closed-form moments of the binned count series.

#ifndef HAWKES_DP_HAWKES_H_
#define HAWKES_DP_HAWKES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hawkes_dp {

struct HawkesParams {
  double mu = 1.0;     // background (immigrant) rate
  double alpha = 0.5;  // mean number of direct offspring per event

  // Throws kInvalidArgument unless mu > 0 and 0 < alpha < 1.
  void Validate() const;
  double StationaryRate() const { return mu / (1.0 - alpha); }
};

// Ordered event times on [0, horizon]. A sequence produced by the branching
// generator also carries, per event, the tree it belongs to and the index of
// its parent (absent for immigrants, and for events whose parent fell before
// time 0).
class EventSequence {
 public:
  EventSequence() = default;
  EventSequence(std::vector<double> timestamps, double horizon);
  EventSequence(std::vector<double> timestamps,
                std::vector<std::int64_t> tree_ids,
                std::vector<std::optional<std::size_t>> parent_indices,
                double horizon);

  std::span<const double> timestamps() const { return timestamps_; }
  std::span<const std::int64_t> tree_ids() const { return tree_ids_; }
  std::span<const std::optional<std::size_t>> parent_indices() const {
    return parent_indices_;
  }
  double horizon() const { return horizon_; }
  std::size_t size() const { return timestamps_.size(); }
  bool empty() const { return timestamps_.empty(); }
  bool labeled() const { return !tree_ids_.empty(); }

  friend bool operator==(const EventSequence&, const EventSequence&) = default;

 private:
  void Validate() const;

  std::vector<double> timestamps_;
  std::vector<std::int64_t> tree_ids_;
  std::vector<std::optional<std::size_t>> parent_indices_;
  double horizon_ = 0.0;
};

struct TheoreticalMoments {
  double eta = 0.0;       // mean bin count
  double sigma_sq = 0.0;  // bin count variance
  double delta = 0.0;     // bin width
};

struct TransientMoments {
  double mean = 0.0;
  double variance = 0.0;
};

// mu + sum over events strictly before t of alpha * exp(-(t - t_i)).
double IntensityAt(const HawkesParams& params, const EventSequence& events,
                   double t);

// Warmup used when none is given: 20 / (1 - alpha), after which the residual
// excitation from an empty start has decayed by e^-20.
double DefaultWarmup(const HawkesParams& params);

// Ogata-style thinning on [-warmup, horizon]. The excitation state decays
// exactly between candidate points. Events before 0 are dropped from the
// output but still excite the process on [0, horizon].
EventSequence SimulateThinning(const HawkesParams& params, double horizon,
                               std::uint64_t seed,
                               std::optional<double> warmup = std::nullopt);

// Immigration-birth construction: Poisson(mu) immigrants on
// [-warmup, horizon], each event spawning Poisson(alpha) children after
// Exp(1) delays. Offspring past the horizon are not generated. The output is
// labeled with compact tree ids (order of first in-window appearance).
EventSequence SimulateBranching(const HawkesParams& params, double horizon,
                                std::uint64_t seed,
                                std::optional<double> warmup = std::nullopt);

// Stationary mean and variance of a bin count of width delta.
TheoreticalMoments ComputeTheoreticalMoments(const HawkesParams& params,
                                             double delta);

// Variance formula alone, evaluated with expm1 so the alpha -> 0 limit is
// accurate. Does not validate its arguments.
double StationaryBinVariance(double mu, double alpha, double delta);

// Mean and variance of the count on [0, t] for a process whose intensity at
// time 0 is lambda0 (lambda0 >= mu).
TransientMoments ComputeTransientMoments(const HawkesParams& params,
                                         double lambda0, double t);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_HAWKES_H_
