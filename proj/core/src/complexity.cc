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

#include "hawkes_dp/complexity.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "hawkes_dp/count_series.h"
#include "hawkes_dp/error.h"
#include "hawkes_dp/random.h"

namespace hawkes_dp {

namespace {

constexpr int kEta4Batches = 100;

// Acklam's rational approximation for the lower half, p <= 0.5.
double AcklamLower(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLowBreak = 0.02425;
  if (p < kLowBreak) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

void CheckTheoremPreconditions(const ComplexityInputs& in, double c9,
                               double delta_bin) {
  in.bounds.Validate();
  if (!(in.xi > 0.0)) {
    Fail(ErrorCode::kPreconditionViolated, "xi > 0 violated");
  }
  if (!(in.delta_prob > 0.0 && in.delta_prob <= 1.0)) {
    Fail(ErrorCode::kPreconditionViolated, "0 < delta <= 1 violated");
  }
  const double xi_max = c9 * in.bounds.mu_lower / 6.0;
  if (!(in.xi < xi_max)) {
    Fail(ErrorCode::kPreconditionViolated,
         "xi < C9 mu_lower / 6 = " + std::to_string(xi_max) + " violated");
  }
  const double om = 1.0 - in.bounds.alpha_upper;
  const double delta_min = 4.0 * c9 * in.bounds.mu_upper / (om * om * om * om * in.xi);
  if (!(delta_bin > delta_min)) {
    Fail(ErrorCode::kPreconditionViolated,
         "Delta > 4 C9 mu_upper / ((1 - alpha_upper)^4 xi) = " +
             std::to_string(delta_min) + " violated (Delta = " +
             std::to_string(delta_bin) + ")");
  }
  if (!(in.sigma_sq > 0.0) || !std::isfinite(in.eta4)) {
    Fail(ErrorCode::kPreconditionViolated,
         "sigma_sq > 0 and finite eta4 required");
  }
}

ComplexityReport MakeReport(std::vector<ComplexityTerm> terms) {
  ComplexityReport report;
  report.terms = std::move(terms);
  const auto it = std::max_element(
      report.terms.begin(), report.terms.end(),
      [](const ComplexityTerm& a, const ComplexityTerm& b) {
        return a.value < b.value;
      });
  report.required_t = it->value;
  report.binding_term = it->label;
  return report;
}

// Smallest T in [e^3, 1e30] (to relative 1e-9) with holds(T), for a
// predicate that is false-then-true on the bracket.
double SolveMonotone(const std::function<bool(double)>& holds) {
  double lo = std::exp(3.0);
  double hi = 1e30;
  if (holds(lo)) return lo;
  if (!holds(hi)) {
    Fail(ErrorCode::kPreconditionViolated,
         "condition not met for any T below 1e30");
  }
  while (hi - lo > 1e-9 * lo) {
    const double mid = std::sqrt(lo * hi) < 2.0 * lo ? 0.5 * (lo + hi)
                                                      : std::sqrt(lo * hi);
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double InverseNormalCdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    Fail(ErrorCode::kDomainError,
         "quantile argument must lie in (0, 1), got " + std::to_string(p));
  }
  // 1 - p is exact for p >= 0.5, so reflecting keeps full precision in the
  // upper tail and makes the result exactly antisymmetric.
  if (p > 0.5) return -InverseNormalCdf(1.0 - p);
  double x = AcklamLower(p);
  const double density =
      std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  x -= (NormalCdf(x) - p) / density;
  return x;
}

double C9Constant(const ParamBounds& bounds, ConstantSet set) {
  bounds.Validate();
  const double om = 1.0 - bounds.alpha_upper;
  const double ratio = bounds.mu_upper / bounds.mu_lower;
  if (set == ConstantSet::kTheorem) {
    return std::max(8.0 / (bounds.mu_lower * om),
                    1.0 + 8.0 * ratio / (om * om) + 4.0 / (3.0 * om));
  }
  return std::max(10.0 / (bounds.mu_lower * om),
                  2.0 + 10.0 * ratio / (om * om) + 10.0 / (3.0 * om));
}

ComplexityReport RequiredTNonPrivate(const ComplexityInputs& in) {
  const double c9 = C9Constant(in.bounds, in.constants);
  CheckTheoremPreconditions(in, c9, in.delta_bin);
  const double psi8 = InverseNormalCdf(1.0 - in.delta_prob / 8.0);
  const double psi16 = InverseNormalCdf(1.0 - in.delta_prob / 16.0);
  const double pre = in.sigma_sq / in.xi;
  const double xd = in.xi * in.delta_bin;
  return MakeReport({
      {"variance_quantile", pre * c9 * c9 * psi8 * psi8 / xd},
      {"fourth_moment",
       pre * 9.0 * c9 * c9 * psi16 * psi16 * (in.eta4 - in.sigma_sq) / xd},
      {"mean_quantile", pre * 3.0 * c9 * psi16 * psi16},
      {"inverse_delta", pre * 24.0 * c9 / in.delta_prob},
  });
}

ComplexityReport RequiredTPrivate(const ComplexityInputs& in,
                                  const PrivacyBudget& budget,
                                  std::optional<std::int64_t> b) {
  budget.Validate();
  const double c9 = C9Constant(in.bounds, in.constants);
  if (in.c && !(*in.c > 0.0)) {
    Fail(ErrorCode::kPreconditionViolated, "c > 0 violated");
  }
  if (b && *b < 1) Fail(ErrorCode::kPreconditionViolated, "B >= 1 violated");
  // Without c the bin width is fixed; check it up front.
  if (!in.c) CheckTheoremPreconditions(in, c9, in.delta_bin);

  const double om = 1.0 - in.bounds.alpha_upper;
  const double om3 = om * om * om;
  const double mu_up = in.bounds.mu_upper;
  const double psi16 = InverseNormalCdf(1.0 - in.delta_prob / 16.0);
  const double psi32 = InverseNormalCdf(1.0 - in.delta_prob / 32.0);
  const double c1 = C1Constant(in.bounds, budget.gamma);
  const double c2 = C2Constant(in.bounds);
  auto c_at = [&](double t) { return in.c ? *in.c : in.delta_bin / std::log(t); };

  const double pre12 = c9 * c9 * mu_up / (om3 * in.xi * in.xi);
  std::vector<ComplexityTerm> terms = {
      {"c12_quantile", pre12 * psi16 * psi16},
      {"c12_fourth_moment",
       pre12 * 9.0 * c9 * c9 * psi32 * psi32 * (in.eta4 - in.sigma_sq)},
  };

  const double k13 = mu_up / (om3 * in.xi);
  const double m13_quantile = 3.0 * c9 * psi32 * psi32;
  const double m13_delta = 48.0 * c9 / in.delta_prob;
  for (const auto& [label, m] :
       {std::pair{"c13_quantile", m13_quantile},
        std::pair{"c13_inverse_delta", m13_delta}}) {
    terms.push_back({label, SolveMonotone([&, m = m](double t) {
                       return t / std::log(t) >= c_at(t) * k13 * m;
                     })});
  }

  const double log_term = std::log(4.0 / in.delta_prob);
  if (b) {
    const double bd = static_cast<double>(*b);
    const double k = 4.0 * bd * bd * c1 * c9 / (budget.epsilon * in.xi) * log_term;
    terms.push_back({"c14_laplace_aware", SolveMonotone([&](double t) {
                       return t / std::sqrt(std::log(t)) >
                              std::sqrt(c_at(t)) * k;
                     })});
  } else {
    const double k = 4.0 * c1 * c2 * c2 * c9 / (budget.epsilon * in.xi) * log_term;
    terms.push_back({"c14_laplace", SolveMonotone([&](double t) {
                       return t / std::pow(std::log(t), 2.5) >
                              std::sqrt(c_at(t)) * k;
                     })});
  }

  ComplexityReport report = MakeReport(std::move(terms));
  if (in.c) {
    CheckTheoremPreconditions(in, c9, *in.c * std::log(report.required_t));
  }
  return report;
}

double RequiredTMean(double sigma_sq, double xi, double delta_prob,
                     double delta_bin) {
  const double psi = InverseNormalCdf(1.0 - delta_prob / 4.0);
  return sigma_sq / (xi * xi * delta_bin) * psi * psi;
}

Eta4Estimate EstimateEta4(const HawkesParams& params, double delta,
                          std::int64_t num_bins, std::uint64_t seed) {
  params.Validate();
  if (num_bins < 10000) {
    Fail(ErrorCode::kInvalidArgument, "eta4 estimation needs >= 10^4 bins");
  }
  if (!(delta > 0.0)) Fail(ErrorCode::kInvalidArgument, "need delta > 0");

  const std::int64_t per_batch = num_bins / kEta4Batches;
  auto batches = ParallelMap(kEta4Batches, [&](std::size_t i) {
    const std::int64_t bins =
        per_batch + (static_cast<std::int64_t>(i) < num_bins % kEta4Batches);
    const EventSequence events = SimulateThinning(
        params, static_cast<double>(bins) * delta, MixSeed(seed, {i}));
    return BinEvents(events, delta).counts;
  });

  double total = 0.0;
  for (const auto& batch : batches) {
    for (std::int64_t c : batch) total += static_cast<double>(c);
  }
  const double mean = total / static_cast<double>(num_bins);

  std::vector<double> batch_m4(kEta4Batches);
  double m2 = 0.0;
  double m4 = 0.0;
  for (std::size_t i = 0; i < batches.size(); ++i) {
    double b4 = 0.0;
    for (std::int64_t c : batches[i]) {
      const double d = static_cast<double>(c) - mean;
      const double d2 = d * d;
      m2 += d2;
      b4 += d2 * d2;
    }
    m4 += b4;
    batch_m4[i] = b4 / static_cast<double>(batches[i].size());
  }
  const double avg = std::accumulate(batch_m4.begin(), batch_m4.end(), 0.0) /
                     kEta4Batches;
  double ss = 0.0;
  for (double v : batch_m4) ss += (v - avg) * (v - avg);

  Eta4Estimate est;
  est.num_bins = num_bins;
  est.eta4 = m4 / static_cast<double>(num_bins);
  est.sigma_sq = m2 / static_cast<double>(num_bins - 1);
  est.std_error = std::sqrt(ss / (kEta4Batches - 1) / kEta4Batches);
  return est;
}

}  // namespace hawkes_dp
