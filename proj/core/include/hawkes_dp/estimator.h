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

// Method-of-moments estimation: the stationary mean fixes mu as a function
// of alpha, leaving a one-dimensional root find on the variance equation.

#ifndef HAWKES_DP_ESTIMATOR_H_
#define HAWKES_DP_ESTIMATOR_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "hawkes_dp/count_series.h"
#include "hawkes_dp/param_bounds.h"

namespace hawkes_dp {

enum class EstimateStatus {
  kConverged,
  // Root lies at or below the lower alpha bracket edge (Poisson-like data);
  // alpha_hat is that edge.
  kBoundary,
  kNonConvergence,
};

std::string_view EstimateStatusName(EstimateStatus status);

// Privacy accounting attached to a private release.
struct ReleaseMetadata {
  double epsilon_total = 0.0;
  double gamma_total = 0.0;
  bool relation_aware = true;
  std::int64_t b = 0;  // maximum tree size used; 0 when relation-unaware
};

struct EstimateResult {
  double mu_hat = 0.0;
  double alpha_hat = 0.0;
  double eta_hat = 0.0;
  double sigma_sq_hat = 0.0;
  double delta = 0.0;
  EstimateStatus status = EstimateStatus::kNonConvergence;
  bool mu_in_bounds = false;  // mu_hat is reported unclamped
  int iterations = 0;
  double residual = 0.0;  // g(alpha_hat)
  std::optional<ReleaseMetadata> release;

  bool converged() const { return status != EstimateStatus::kNonConvergence; }
};

// Solves g(alpha) = Var(alpha) - sigma_sq_hat = 0 on
// [max(alpha_lower, 1e-6), alpha_upper] by bisection, with
// mu(alpha) = eta_hat * (1 - alpha) / delta. Absence of a root is reported
// through status, never thrown. Throws kInvalidArgument when eta_hat <= 0
// or delta <= 0.
EstimateResult InvertMoments(double eta_hat, double sigma_sq_hat, double delta,
                             const ParamBounds& bounds);

EstimateResult Estimate(const CountSeries& series, const ParamBounds& bounds);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_ESTIMATOR_H_
