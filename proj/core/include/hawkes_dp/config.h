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

// Experiment configuration: a flat "key = value" text format whose keys can
// also be overridden one by one (the CLI maps identically named flags onto
// ApplyConfigValue).

#ifndef HAWKES_DP_CONFIG_H_
#define HAWKES_DP_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hawkes_dp/hawkes.h"
#include "hawkes_dp/param_bounds.h"

namespace hawkes_dp {

// Name of the one environment variable read by the toolkit: the default
// output directory.
inline constexpr const char* kOutDirEnvVar = "HAWKES_DP_OUT_DIR";

// Bin width choice: a fixed value, or round_to_multiple_of_5(c ln T) with a
// floor of 5. The default c gives Delta = 10 at T = 10^5.
struct DeltaRule {
  static constexpr double kDefaultC = 0.86858896380650365;  // 10 / ln(1e5)

  bool fixed = false;
  double value = 10.0;  // used when fixed
  double c = kDefaultC;

  double Resolve(double horizon) const;
  std::string ToString() const;
  static DeltaRule Parse(std::string_view text);
};

// Maximum tree size of a sweep cell: a known B (relation-aware) or "auto",
// the relation-unaware C2 ln T.
struct BMode {
  bool automatic = false;
  std::int64_t b = 10;

  std::string Label() const;
  static BMode Parse(std::string_view text);
  friend bool operator==(const BMode&, const BMode&) = default;
};

struct ExperimentConfig {
  HawkesParams params;
  bool truth_given = false;  // mu or alpha set explicitly
  ParamBounds bounds;
  double gamma = 0.05;
  // Total budget per release; each of the two statistics gets half.
  std::vector<double> epsilons = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0};
  std::vector<BMode> b_values = {BMode{false, 10}, BMode{false, 25},
                                 BMode{false, 100}, BMode{true, 0}};
  DeltaRule delta_rule;
  double horizon = 100000.0;
  int repetitions = 50;
  std::uint64_t seed = 1;
  std::string out_dir;  // empty: environment variable, then "out"

  // Throws kConfigError describing the first bad field.
  void Validate() const;
  std::string ResolvedOutDir() const;
};

const std::vector<std::string>& ConfigKeys();

// Sets one key from its textual value. Throws kConfigError on an unknown
// key or an unparsable value.
void ApplyConfigValue(ExperimentConfig& config, std::string_view key,
                      std::string_view value);

// Parses "key = value" lines; '#' starts a comment. Does not validate.
ExperimentConfig ParseConfigText(std::string_view text,
                                 ExperimentConfig base = {});
ExperimentConfig LoadConfigFile(const std::string& path,
                                ExperimentConfig base = {});

std::string FormatConfig(const ExperimentConfig& config);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_CONFIG_H_
