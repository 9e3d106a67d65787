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

// Sample-complexity conditions: the horizon T after which the non-private
// and private estimates are within xi of the truth with probability at
// least 1 - delta.

#ifndef HAWKES_DP_COMPLEXITY_H_
#define HAWKES_DP_COMPLEXITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hawkes_dp/hawkes.h"
#include "hawkes_dp/param_bounds.h"
#include "hawkes_dp/privacy.h"

namespace hawkes_dp {

double NormalCdf(double x);
// Psi(p) for 0 < p < 1, absolute error below 1e-9. Throws kDomainError
// outside (0, 1).
double InverseNormalCdf(double p);

// kTheorem: max{8 / (mu_l (1 - a_u)), 1 + 8 mu_u / (mu_l (1 - a_u)^2)
//                + 4 / (3 (1 - a_u))}.
// kAppendix: the (10, 2, 10/3) variant used by the private-estimate proof.
enum class ConstantSet { kTheorem, kAppendix };
double C9Constant(const ParamBounds& bounds,
                  ConstantSet set = ConstantSet::kTheorem);

struct ComplexityInputs {
  ParamBounds bounds;
  double xi = 0.0;          // target precision
  double delta_prob = 0.0;  // failure probability in (0, 1]
  double delta_bin = 0.0;   // bin width
  double eta4 = 0.0;        // central fourth moment of a bin count
  double sigma_sq = 0.0;    // bin count variance
  // Private case: delta_bin = c ln T. When absent, c is taken as
  // delta_bin / ln T at every candidate T.
  std::optional<double> c;
  ConstantSet constants = ConstantSet::kTheorem;
};

struct ComplexityTerm {
  std::string label;
  double value = 0.0;
};

struct ComplexityReport {
  double required_t = 0.0;
  std::string binding_term;
  std::vector<ComplexityTerm> terms;
};

// Throws kPreconditionViolated naming the violated inequality.
ComplexityReport RequiredTNonPrivate(const ComplexityInputs& inputs);

// Conditions on T/ln T and T/(ln T)^(5/2) are solved by bisection on
// [e^3, 1e30]. With b set, the relation-aware form
// T / sqrt(ln T) > 4 sqrt(c) B^2 C1 C9 / (eps xi) ln(4 / delta) replaces
// the last condition.
ComplexityReport RequiredTPrivate(const ComplexityInputs& inputs,
                                  const PrivacyBudget& budget,
                                  std::optional<std::int64_t> b = std::nullopt);

// sigma_sq / (xi^2 delta_bin) Psi(1 - delta_prob / 4)^2.
double RequiredTMean(double sigma_sq, double xi, double delta_prob,
                     double delta_bin);

struct Eta4Estimate {
  double eta4 = 0.0;  // central fourth moment
  double std_error = 0.0;
  double sigma_sq = 0.0;  // variance from the same bins
  std::int64_t num_bins = 0;
};

// Monte-Carlo central fourth moment of simulated bin counts. Bins are
// generated in 100 independently seeded batches; std_error is the
// batch-means standard error. Requires num_bins >= 10^4.
Eta4Estimate EstimateEta4(const HawkesParams& params, double delta,
                          std::int64_t num_bins, std::uint64_t seed);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_COMPLEXITY_H_
