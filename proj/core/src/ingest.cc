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

#include "hawkes_dp/ingest.h"

#include <algorithm>
#include <cmath>

#include "hawkes_dp/csv_io.h"
#include "hawkes_dp/error.h"
#include "hawkes_dp/text.h"

namespace hawkes_dp {

IngestResult IngestTimestamps(const std::string& path, double time_unit_scale) {
  if (!(time_unit_scale > 0.0) || !std::isfinite(time_unit_scale)) {
    Fail(ErrorCode::kInvalidArgument, "time unit scale must be positive");
  }
  const auto lines = ReadLines(path);
  std::vector<double> times;
  bool seen_content = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = Trim(lines[i]);
    if (line.empty() || line.starts_with('#')) continue;
    const auto field = Trim(Split(line, ',').front());
    const auto t = ParseDouble(field);
    if (!t || !std::isfinite(*t)) {
      if (!seen_content && !t) {
        seen_content = true;  // header
        continue;
      }
      Fail(ErrorCode::kParseError, path + ":" + std::to_string(i + 1) +
                                       ": not a finite timestamp: '" +
                                       std::string(field) + "'");
    }
    seen_content = true;
    times.push_back(*t);
  }
  if (times.empty()) {
    Fail(ErrorCode::kParseError, path + ": no timestamps found");
  }

  IngestResult result;
  if (!std::is_sorted(times.begin(), times.end())) {
    std::sort(times.begin(), times.end());
    result.warnings.push_back("input timestamps were not sorted; sorted them");
  }
  const auto before = times.size();
  times.erase(std::unique(times.begin(), times.end()), times.end());
  if (times.size() != before) {
    result.warnings.push_back("dropped " + std::to_string(before - times.size()) +
                              " duplicate timestamps");
  }
  const double origin = times.front();
  for (double& t : times) t = (t - origin) * time_unit_scale;
  const double horizon = times.back();
  result.events = EventSequence(std::move(times), horizon);
  return result;
}

}  // namespace hawkes_dp
