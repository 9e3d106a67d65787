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

#ifndef HAWKES_DP_INGEST_H_
#define HAWKES_DP_INGEST_H_

#include <string>
#include <vector>

#include "hawkes_dp/hawkes.h"

namespace hawkes_dp {

struct IngestResult {
  EventSequence events;
  std::vector<std::string> warnings;
};

// Reads one timestamp per line (first comma-separated field; an optional
// non-numeric header line is skipped). The times are sorted, exact
// duplicates dropped, shifted so the first event is at 0 and multiplied by
// time_unit_scale; the horizon is the last timestamp.
// Throws kParseError with the line number for an unparsable row, and for a
// file without timestamps.
IngestResult IngestTimestamps(const std::string& path, double time_unit_scale);

}  // namespace hawkes_dp

#endif  // HAWKES_DP_INGEST_H_
