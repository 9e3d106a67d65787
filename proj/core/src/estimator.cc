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

#include "hawkes_dp/estimator.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hawkes_dp/error.h"
#include "hawkes_dp/hawkes.h"

namespace hawkes_dp {

namespace {

constexpr double kMinAlpha = 1e-6;
constexpr double kRelativeResidual = 1e-10;
constexpr double kBracketWidth = 1e-12;
constexpr int kMaxIterations = 200;

}  // namespace

void ParamBounds::Validate() const {
  if (!(mu_lower > 0.0 && mu_lower <= mu_upper && std::isfinite(mu_upper))) {
    Fail(ErrorCode::kInvalidArgument,
         "need 0 < mu_lower <= mu_upper, got [" + std::to_string(mu_lower) +
             ", " + std::to_string(mu_upper) + "]");
  }
  if (!(alpha_lower > 0.0 && alpha_lower <= alpha_upper && alpha_upper < 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "need 0 < alpha_lower <= alpha_upper < 1, got [" +
             std::to_string(alpha_lower) + ", " + std::to_string(alpha_upper) +
             "]");
  }
}

std::string_view EstimateStatusName(EstimateStatus status) {
  switch (status) {
    case EstimateStatus::kConverged:
      return "converged";
    case EstimateStatus::kBoundary:
      return "boundary";
    case EstimateStatus::kNonConvergence:
      return "nonconvergence";
  }
  return "unknown";
}

EstimateResult InvertMoments(double eta_hat, double sigma_sq_hat, double delta,
                             const ParamBounds& bounds) {
  bounds.Validate();
  if (!(eta_hat > 0.0) || !std::isfinite(eta_hat)) {
    Fail(ErrorCode::kInvalidArgument,
         "sample mean must be positive, got " + std::to_string(eta_hat));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    Fail(ErrorCode::kInvalidArgument, "bin width must be positive");
  }

  EstimateResult result;
  result.eta_hat = eta_hat;
  result.sigma_sq_hat = sigma_sq_hat;
  result.delta = delta;
  if (!std::isfinite(sigma_sq_hat)) return result;

  auto mu_of = [&](double a) { return eta_hat * (1.0 - a) / delta; };
  auto g = [&](double a) {
    return StationaryBinVariance(mu_of(a), a, delta) - sigma_sq_hat;
  };
  const double tol = kRelativeResidual * std::abs(sigma_sq_hat);
  auto finish = [&](double a, double ga, EstimateStatus status) {
    result.alpha_hat = a;
    result.mu_hat = mu_of(a);
    result.residual = ga;
    result.status = status;
    result.mu_in_bounds =
        result.mu_hat >= bounds.mu_lower && result.mu_hat <= bounds.mu_upper;
    return result;
  };

  double lo = std::max(bounds.alpha_lower, kMinAlpha);
  double hi = bounds.alpha_upper;
  double g_lo = g(lo);
  double g_hi = g(hi);
  if (std::abs(g_lo) <= tol) return finish(lo, g_lo, EstimateStatus::kConverged);
  if (std::abs(g_hi) <= tol) return finish(hi, g_hi, EstimateStatus::kConverged);
  if (g_lo > 0.0) {
    // g(0) = eta_hat - sigma_sq_hat; a sign change on [0, lo] puts the root
    // below the bracket.
    if (eta_hat - sigma_sq_hat <= 0.0) {
      return finish(lo, g_lo, EstimateStatus::kBoundary);
    }
    return result;
  }
  if (g_hi < 0.0) return result;

  double mid = lo;
  double g_mid = g_lo;
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    mid = 0.5 * (lo + hi);
    g_mid = g(mid);
    if (std::abs(g_mid) <= tol || hi - lo <= kBracketWidth) break;
    if (g_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.iterations = it + 1;
  return finish(mid, g_mid, EstimateStatus::kConverged);
}

EstimateResult Estimate(const CountSeries& series, const ParamBounds& bounds) {
  const SampleStats stats = ComputeSampleStats(series);
  return InvertMoments(stats.eta_hat, stats.sigma_sq_hat, series.delta, bounds);
}

}  // namespace hawkes_dp
