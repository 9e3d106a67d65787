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

#ifndef HAWKES_DP_ERROR_H_
#define HAWKES_DP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hawkes_dp {

enum class ErrorCode {
  kInvalidArgument,
  kPreconditionViolated,
  kHorizonTooShort,
  kNonConvergence,
  kDomainError,
  kConfigError,
  kIoError,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. Estimation
// failures that an experiment needs to count (non-convergence) are instead
// carried in EstimateResult::status and never thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_ERROR_H_
