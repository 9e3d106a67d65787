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

// Synthetic experiment drivers: the privacy/utility sweep over (epsilon, B)
// and the time-to-threshold search.
//
// Repetition r simulates one sequence (seed MixSeed(base, {r}), or
// MixSeed(base, {r, T}) in the threshold search) and draws one noise stream
// (MixSeed(base, {r, kNoiseStream})) that every (epsilon, B) cell of that
// repetition shares. Results never depend on the thread count.

#ifndef HAWKES_DP_EXPERIMENT_H_
#define HAWKES_DP_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hawkes_dp/config.h"

namespace hawkes_dp {

inline constexpr const char* kSweepHeader =
    "epsilon,b_mode,rep,seed,mu_hat,alpha_hat,err_mu,err_alpha,converged,"
    "wall_ms";

struct SweepRecord {
  double epsilon = 0.0;  // total budget; inf for the non-private baseline
  std::string b_mode;    // "none" for the baseline, else BMode::Label()
  int rep = 0;
  std::uint64_t seed = 0;
  double mu_hat = 0.0;  // nan when not converged
  double alpha_hat = 0.0;
  double err_mu = 0.0;  // |mu_hat - mu| / mu
  double err_alpha = 0.0;
  bool converged = false;
  double wall_ms = 0.0;
  std::string failure;  // error name for failed cells, not persisted

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepSummaryRow {
  double epsilon = 0.0;
  std::string b_mode;
  int n = 0;
  int n_converged = 0;
  // Over converged repetitions; nan if none converged.
  double mean_err_mu = 0.0;
  double lo_err_mu = 0.0;  // 2.5th percentile
  double hi_err_mu = 0.0;  // 97.5th percentile
  double mean_err_alpha = 0.0;
  double lo_err_alpha = 0.0;
  double hi_err_alpha = 0.0;
};

struct RunOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = true;    // false writes wall_ms = 0
};

struct SweepResult {
  std::vector<SweepRecord> records;  // baseline cell first, then epsilon x B
  std::vector<SweepSummaryRow> summary;
  double delta = 0.0;
};

SweepResult RunSweep(const ExperimentConfig& config,
                     const RunOptions& options = {});

std::vector<SweepSummaryRow> SummarizeSweep(
    const std::vector<SweepRecord>& records);

struct ThresholdOptions {
  double error_threshold = 0.1;  // on the normalized alpha error
  double t0 = 1000.0;
  double t_max = 1e6;
};

struct ThresholdRecord {
  double epsilon = 0.0;
  std::string b_mode;
  double required_t = 0.0;  // nan when the cap was reached
  bool cap_reached = false;
  double median_err_alpha = 0.0;  // at required_t, or at t_max
};

// Probes T = t0, 2 t0, 4 t0, ... and finally t_max; a cell passes at the
// first T whose median alpha error over the repetitions is at most the
// threshold. Failed estimates count as infinite error.
std::vector<ThresholdRecord> RunTimeToThreshold(
    const ExperimentConfig& config, const ThresholdOptions& threshold,
    const RunOptions& options = {});

// Linear-interpolation percentile (q in [0, 1]) of unsorted values.
double Percentile(std::vector<double> values, double q);

void WriteSweepCsv(const std::string& path,
                   const std::vector<SweepRecord>& records);
std::vector<SweepRecord> ReadSweepCsv(const std::string& path);
void WriteSweepSummaryCsv(const std::string& path,
                          const std::vector<SweepSummaryRow>& rows);
void WriteThresholdCsv(const std::string& path,
                       const std::vector<ThresholdRecord>& rows);
std::vector<ThresholdRecord> ReadThresholdCsv(const std::string& path);

// Matplotlib scripts that read the CSVs above from their own directory.
std::string SweepPlotScript(const std::string& summary_csv);
std::string ThresholdPlotScript(const std::string& threshold_csv);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_EXPERIMENT_H_
