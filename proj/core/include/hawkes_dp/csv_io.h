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

// CSV readers and writers for every artifact the toolkit persists. Each
// writer has a reader that restores the content fields exactly.
// All functions throw kIoError (naming the path) when a file cannot be
// opened and kParseError (naming the line) on malformed content.

#ifndef HAWKES_DP_CSV_IO_H_
#define HAWKES_DP_CSV_IO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hawkes_dp/complexity.h"
#include "hawkes_dp/count_series.h"
#include "hawkes_dp/estimator.h"
#include "hawkes_dp/hawkes.h"

namespace hawkes_dp {

using Metadata = std::vector<std::pair<std::string, std::string>>;

// Header "timestamp,tree_id,parent_idx"; label fields are empty for an
// unlabeled sequence. The horizon is not part of the table: it is written
// to the "<path>.meta" sidecar and read back from there, falling back to
// the last timestamp.
void WriteEventsCsv(const std::string& path, const EventSequence& events,
                    const Metadata& extra = {});
EventSequence ReadEventsCsv(const std::string& path,
                            std::optional<double> horizon = std::nullopt);

// "# delta=<delta> horizon=<T>" followed by "bin_index,count".
void WriteCountsCsv(const std::string& path, const CountSeries& series);
CountSeries ReadCountsCsv(const std::string& path);

// "tree_size,count".
void WriteTreeHistogramCsv(const std::string& path,
                           const std::map<std::int64_t, std::int64_t>& hist);
std::map<std::int64_t, std::int64_t> ReadTreeHistogramCsv(
    const std::string& path);

// "term_label,value,binding".
void WriteComplexityCsv(const std::string& path, const ComplexityReport& report);
ComplexityReport ReadComplexityCsv(const std::string& path);

// One row per estimate; failures keep their row with status
// "nonconvergence" and nan estimates.
inline constexpr const char* kEstimateHeader =
    "mu_hat,alpha_hat,eta_hat,sigma_sq_hat,delta,status,iterations,residual,"
    "epsilon_total,gamma_total,b_mode";
void WriteEstimateCsv(const std::string& path,
                      const std::vector<EstimateResult>& results);
std::vector<EstimateResult> ReadEstimateCsv(const std::string& path);

// "key=value" lines.
void WriteMetadata(const std::string& path, const Metadata& entries);
Metadata ReadMetadata(const std::string& path);
std::optional<std::string> FindMetadata(const Metadata& entries,
                                        const std::string& key);

// Creates the parent directory of path if needed.
void EnsureParentDir(const std::string& path);
void EnsureDir(const std::string& dir);

// Reads all lines of a file (without trailing newlines).
std::vector<std::string> ReadLines(const std::string& path);
// Writes text atomically enough for our purposes: truncate and write.
void WriteText(const std::string& path, const std::string& text);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_CSV_IO_H_
