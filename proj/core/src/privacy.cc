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

#include "hawkes_dp/privacy.h"

#include <cmath>
#include <numbers>
#include <string>

#include "hawkes_dp/error.h"

namespace hawkes_dp {

namespace {

void CheckK(std::int64_t k) {
  if (k < 2) Fail(ErrorCode::kInvalidArgument, "need at least 2 bins");
}

// Largest tree size entering the sensitivity: B or C2 ln T.
double TreeScale(const SensitivitySpec& spec, double horizon) {
  if (spec.mode == SensitivityMode::kRelationAware) {
    return static_cast<double>(spec.b);
  }
  if (!(horizon > 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "horizon must exceed 1");
  }
  return spec.c2 * std::log(horizon);
}

}  // namespace

void PrivacyBudget::Validate() const {
  if (!(epsilon > 0.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "epsilon must be positive, got " + std::to_string(epsilon));
  }
  if (!(gamma > 0.0 && gamma <= 0.5)) {
    Fail(ErrorCode::kInvalidArgument,
         "gamma must lie in (0, 1/2], got " + std::to_string(gamma));
  }
}

double C1Constant(const ParamBounds& bounds, double gamma) {
  const double om = 1.0 - bounds.alpha_upper;
  return std::sqrt(1.1 * bounds.mu_upper / (om * om * om) / gamma);
}

double C2Constant(const ParamBounds& bounds) {
  const double om = 1.0 - bounds.alpha_upper;
  return 3.0 / (om * om);
}

SensitivitySpec SensitivitySpec::RelationAware(std::int64_t b,
                                               const ParamBounds& bounds,
                                               double gamma) {
  bounds.Validate();
  if (b < 0) Fail(ErrorCode::kInvalidArgument, "B must be nonnegative");
  return SensitivitySpec{.mode = SensitivityMode::kRelationAware,
                         .b = b,
                         .c1 = C1Constant(bounds, gamma),
                         .c2 = C2Constant(bounds),
                         .mu_upper = bounds.mu_upper};
}

SensitivitySpec SensitivitySpec::RelationUnaware(const ParamBounds& bounds,
                                                 double gamma) {
  bounds.Validate();
  return SensitivitySpec{.mode = SensitivityMode::kRelationUnaware,
                         .b = 0,
                         .c1 = C1Constant(bounds, gamma),
                         .c2 = C2Constant(bounds),
                         .mu_upper = bounds.mu_upper};
}

double TreeBound(double alpha_upper, double horizon) {
  const double om = 1.0 - alpha_upper;
  return 3.0 * std::log(horizon) / (om * om);
}

double HorizonThreshold(double mu_upper, double gamma) {
  return std::pow(mu_upper * std::numbers::e * std::numbers::e / gamma, 2.5);
}

bool ValidateHorizon(double mu_upper, double gamma, double horizon) {
  // Compare in log space so the exact boundary T = e^5 (mu = gamma = 1)
  // is not lost to pow rounding.
  return std::log(horizon) >=
         2.5 * (std::log(mu_upper / gamma) + 2.0) * (1.0 - 1e-15);
}

double MeanSensitivity(const SensitivitySpec& spec, std::int64_t k,
                       double horizon) {
  CheckK(k);
  return TreeScale(spec, horizon) / static_cast<double>(k);
}

double VarianceSensitivity(const SensitivitySpec& spec, std::int64_t k,
                           double delta, double horizon) {
  CheckK(k);
  if (!(delta > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "bin width must be positive");
  }
  const double b = TreeScale(spec, horizon);
  const auto kd = static_cast<double>(k);
  return b * b / kd + 2.0 * std::pow(b, 1.5) * std::sqrt(delta) * spec.c1 /
                          (kd - 1.0);
}

double LaplaceSampler::FromUniform(double u, double scale) {
  if (u == 0.5 || scale == 0.0) return 0.0;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u - 0.5));
  return u < 0.5 ? -magnitude : magnitude;
}

double LaplaceSampler::Sample(double scale) {
  if (!(scale >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "Laplace scale must be nonnegative");
  }
  return FromUniform(rng_.Uniform(), scale);
}

SampleStats PrivatizeStats(const SampleStats& stats,
                           const SensitivitySpec& spec,
                           const PrivacyBudget& budget, double delta,
                           double horizon, LaplaceSampler& sampler) {
  budget.Validate();
  if (spec.mode == SensitivityMode::kRelationUnaware &&
      !ValidateHorizon(spec.mu_upper, budget.gamma, horizon)) {
    Fail(ErrorCode::kHorizonTooShort,
         "horizon " + std::to_string(horizon) + " is below " +
             std::to_string(HorizonThreshold(spec.mu_upper, budget.gamma)));
  }
  const double mean_scale =
      MeanSensitivity(spec, stats.k, horizon) / budget.epsilon;
  const double var_scale =
      VarianceSensitivity(spec, stats.k, delta, horizon) / budget.epsilon;
  SampleStats out = stats;
  out.eta_hat += sampler.Sample(mean_scale);
  out.sigma_sq_hat += sampler.Sample(var_scale);
  return out;
}

ReleaseMetadata MakeReleaseMetadata(const SensitivitySpec& spec,
                                    const PrivacyBudget& budget) {
  const bool aware = spec.mode == SensitivityMode::kRelationAware;
  return ReleaseMetadata{.epsilon_total = 2.0 * budget.epsilon,
                         .gamma_total = aware ? budget.gamma : 2.0 * budget.gamma,
                         .relation_aware = aware,
                         .b = aware ? spec.b : 0};
}

EstimateResult PrivateEstimate(const CountSeries& series,
                               const ParamBounds& bounds,
                               const SensitivitySpec& spec,
                               const PrivacyBudget& budget,
                               LaplaceSampler& sampler) {
  const SampleStats noisy =
      PrivatizeStats(ComputeSampleStats(series), spec, budget, series.delta,
                     series.horizon, sampler);
  EstimateResult result;
  if (noisy.eta_hat > 0.0) {
    result = InvertMoments(noisy.eta_hat, noisy.sigma_sq_hat, series.delta,
                           bounds);
  } else {
    // A nonpositive noisy mean admits no parameter pair.
    result.eta_hat = noisy.eta_hat;
    result.sigma_sq_hat = noisy.sigma_sq_hat;
    result.delta = series.delta;
  }
  result.release = MakeReleaseMetadata(spec, budget);
  return result;
}

EstimateResult PrivateEstimate(const CountSeries& series,
                               const ParamBounds& bounds,
                               const SensitivitySpec& spec,
                               const PrivacyBudget& budget,
                               std::uint64_t seed) {
  LaplaceSampler sampler(seed);
  return PrivateEstimate(series, bounds, spec, budget, sampler);
}

}  // namespace hawkes_dp
