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

// Total-progeny (Borel) law of a Poisson(nu) Galton-Watson tree, the tail
// and largest-tree bounds built on it, and empirical tree statistics of
// labeled event sequences.

#ifndef HAWKES_DP_BRANCHING_STATS_H_
#define HAWKES_DP_BRANCHING_STATS_H_

#include <cstdint>
#include <map>
#include <vector>

#include "hawkes_dp/hawkes.h"
#include "hawkes_dp/param_bounds.h"

namespace hawkes_dp {

// log P(W = j) = -nu j + (j - 1) ln(nu j) - ln j!, for 0 <= nu < 1, j >= 1.
double BorelLogPmf(double nu, std::int64_t j);
double BorelPmf(double nu, std::int64_t j);

// e^2 exp(-(nu - 1 - ln nu) d), an upper bound on P(W > d).
// Requires 0 < nu < 1 and d > 1 / (1 - nu).
double ProgenyTailBound(double nu, double d);

// exp(-mu T e^2 exp(-(10 a / 21)(1 - alpha))): lower bound on the
// probability that no tree observed on [0, T] exceeds a / (1 - alpha).
double LargestTreeProbBound(double mu, double alpha, double horizon, double a);

// The a at which LargestTreeProbBound equals e^-gamma >= 1 - gamma:
// 2.1 ln(mu e^2 T / gamma) / (1 - alpha).
double LargestTreeScale(double mu, double alpha, double horizon, double gamma);

struct TreeStats {
  std::vector<std::int64_t> sizes;  // in-window size of tree i
  double horizon = 0.0;

  std::int64_t num_trees() const {
    return static_cast<std::int64_t>(sizes.size());
  }
  std::int64_t total_events() const;
  std::int64_t max_size() const;
  double mean_size() const;
  // tree_size -> number of trees of that size.
  std::map<std::int64_t, std::int64_t> Histogram() const;
};

// Groups a labeled sequence by tree id. Throws kInvalidArgument on an
// unlabeled sequence.
TreeStats ComputeTreeSizes(const EventSequence& events);

// B^(3/2) sqrt(delta) C1, the high-probability bound on the summed absolute
// deviation of B bin counts from their means. Throws kPreconditionViolated
// unless delta > 10 alpha_upper^2 / (2 (1 - alpha_upper)).
double DiscrepancyBound(const ParamBounds& bounds, double gamma, std::int64_t b,
                        double delta);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_BRANCHING_STATS_H_
