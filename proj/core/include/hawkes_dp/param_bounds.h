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

#ifndef HAWKES_DP_PARAM_BOUNDS_H_
#define HAWKES_DP_PARAM_BOUNDS_H_

namespace hawkes_dp {

// Prior box on the parameters. Feeds the estimator bracket, the privacy
// constants and the sample-complexity constants.
struct ParamBounds {
  double mu_lower = 0.1;
  double mu_upper = 2.0;
  double alpha_lower = 0.01;
  double alpha_upper = 0.75;

  // Throws kInvalidArgument unless 0 < mu_lower <= mu_upper and
  // 0 < alpha_lower <= alpha_upper < 1.
  void Validate() const;

  // mu_upper = 2, alpha_upper = 0.75 with lower bounds 0.1 and 0.01.
  static ParamBounds Defaults() { return ParamBounds{}; }
};

}  // namespace hawkes_dp

#endif  // HAWKES_DP_PARAM_BOUNDS_H_
