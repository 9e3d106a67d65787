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

// Laplace release of the count-series mean and variance. Neighbouring
// sequences differ by one whole tree of events; sensitivities follow from a
// bound on the largest tree, either known (relation-aware, B) or derived
// from the horizon (relation-unaware, C2 * ln T).

#ifndef HAWKES_DP_PRIVACY_H_
#define HAWKES_DP_PRIVACY_H_

#include <cstdint>

#include "hawkes_dp/count_series.h"
#include "hawkes_dp/estimator.h"
#include "hawkes_dp/param_bounds.h"
#include "hawkes_dp/random.h"

namespace hawkes_dp {

struct PrivacyBudget {
  double epsilon = 1.0;  // per released statistic
  double gamma = 0.05;   // random-DP failure probability, in (0, 1/2]

  // epsilon may be +infinity (no noise).
  void Validate() const;
};

enum class SensitivityMode { kRelationAware, kRelationUnaware };

struct SensitivitySpec {
  SensitivityMode mode = SensitivityMode::kRelationAware;
  std::int64_t b = 0;  // relation-aware only
  double c1 = 0.0;
  double c2 = 0.0;
  double mu_upper = 0.0;

  static SensitivitySpec RelationAware(std::int64_t b,
                                       const ParamBounds& bounds, double gamma);
  static SensitivitySpec RelationUnaware(const ParamBounds& bounds,
                                         double gamma);
};

// sqrt(1.1 * mu_upper / ((1 - alpha_upper)^3 * gamma)).
double C1Constant(const ParamBounds& bounds, double gamma);
// 3 / (1 - alpha_upper)^2.
double C2Constant(const ParamBounds& bounds);

// 3 ln T / (1 - alpha_upper)^2: with probability >= 1 - gamma no tree
// observed on [0, T] is larger, once T passes HorizonThreshold.
double TreeBound(double alpha_upper, double horizon);
// (mu_upper * e^2 / gamma)^(5/2).
double HorizonThreshold(double mu_upper, double gamma);
bool ValidateHorizon(double mu_upper, double gamma, double horizon);

double MeanSensitivity(const SensitivitySpec& spec, std::int64_t k,
                       double horizon);
double VarianceSensitivity(const SensitivitySpec& spec, std::int64_t k,
                           double delta, double horizon);

// Zero-mean Laplace noise by inverse CDF of one uniform per draw.
class LaplaceSampler {
 public:
  explicit LaplaceSampler(std::uint64_t seed) : rng_(seed) {}

  // scale == 0 returns exactly 0 (the infinite-budget limit).
  double Sample(double scale);
  static double FromUniform(double u, double scale);

 private:
  Rng rng_;
};

// Adds independent Laplace(sensitivity / epsilon) noise to both statistics.
// Relation-unaware mode throws kHorizonTooShort below HorizonThreshold.
SampleStats PrivatizeStats(const SampleStats& stats,
                           const SensitivitySpec& spec,
                           const PrivacyBudget& budget, double delta,
                           double horizon, LaplaceSampler& sampler);

// PrivatizeStats followed by InvertMoments, tagged with the release
// metadata: epsilon_total = 2 epsilon, gamma_total = gamma (relation-aware)
// or 2 gamma (relation-unaware).
EstimateResult PrivateEstimate(const CountSeries& series,
                               const ParamBounds& bounds,
                               const SensitivitySpec& spec,
                               const PrivacyBudget& budget,
                               LaplaceSampler& sampler);
EstimateResult PrivateEstimate(const CountSeries& series,
                               const ParamBounds& bounds,
                               const SensitivitySpec& spec,
                               const PrivacyBudget& budget, std::uint64_t seed);

ReleaseMetadata MakeReleaseMetadata(const SensitivitySpec& spec,
                                    const PrivacyBudget& budget);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_PRIVACY_H_
