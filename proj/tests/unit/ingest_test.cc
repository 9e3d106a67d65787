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

#include <gtest/gtest.h>

#include <algorithm>

#include "hawkes_dp/csv_io.h"
#include "hawkes_dp/error.h"
#include "hawkes_dp/hawkes.h"
#include "test_util.h"

namespace hawkes_dp {
namespace {

using ::hawkes_dp::testing::ScopedTempDir;
using ::hawkes_dp::testing::Spit;

TEST(IngestTest, ShiftsAndScales) {
  ScopedTempDir dir;
  const auto path = dir.File("ts.csv");
  Spit(path, "# exported\ntime,user\n100,a\n101.5,b\n104,c\n");
  const auto r = IngestTimestamps(path, 60.0);
  EXPECT_TRUE(r.warnings.empty());
  ASSERT_EQ(r.events.size(), 3u);
  EXPECT_EQ(r.events.timestamps()[0], 0.0);
  EXPECT_EQ(r.events.timestamps()[1], 90.0);
  EXPECT_EQ(r.events.timestamps()[2], 240.0);
  EXPECT_EQ(r.events.horizon(), 240.0);
  EXPECT_FALSE(r.events.labeled());
}

TEST(IngestTest, SortsAndDropsDuplicatesWithWarnings) {
  ScopedTempDir dir;
  const auto path = dir.File("ts.txt");
  Spit(path, "5\n3\n3\n\n7\r\n");
  const auto r = IngestTimestamps(path, 1.0);
  EXPECT_EQ(r.warnings.size(), 2u);
  ASSERT_EQ(r.events.size(), 3u);
  EXPECT_EQ(r.events.timestamps()[1], 2.0);
  EXPECT_EQ(r.events.horizon(), 4.0);
}

TEST(IngestTest, SecondsToMinutes) {
  ScopedTempDir dir;
  const auto path = dir.File("unix.csv");
  Spit(path, "100\n160\n220\n");
  const auto r = IngestTimestamps(path, 1.0 / 60.0);
  ASSERT_EQ(r.events.size(), 3u);
  EXPECT_DOUBLE_EQ(r.events.timestamps()[1], 1.0);
  EXPECT_DOUBLE_EQ(r.events.timestamps()[2], 2.0);
  EXPECT_DOUBLE_EQ(r.events.horizon(), 2.0);
}

TEST(IngestTest, RoundTripThroughEventsCsv) {
  ScopedTempDir dir;
  const auto original = SimulateThinning({1.0, 0.5}, 5000.0, 4);
  WriteEventsCsv(dir.File("events.csv"), original);
  const auto r = IngestTimestamps(dir.File("events.csv"), 1.0);
  EXPECT_TRUE(r.warnings.empty());
  ASSERT_EQ(r.events.size(), original.size());
  const double origin = original.timestamps()[0];
  for (std::size_t i = 0; i < original.size(); ++i) {
    ASSERT_EQ(r.events.timestamps()[i], original.timestamps()[i] - origin);
  }
  WriteEventsCsv(dir.File("again.csv"), r.events);
  const auto back = ReadEventsCsv(dir.File("again.csv"));
  EXPECT_EQ(back.horizon(), r.events.horizon());
  EXPECT_TRUE(std::equal(back.timestamps().begin(), back.timestamps().end(),
                         r.events.timestamps().begin()));
}

TEST(IngestTest, Errors) {
  ScopedTempDir dir;
  const auto path = dir.File("ts.csv");
  auto code = [&](const std::string& text) {
    Spit(path, text);
    try {
      IngestTimestamps(path, 1.0);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code(""), ErrorCode::kParseError);
  EXPECT_EQ(code("time\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("1\n2\nbad\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("1\nnan\n"), ErrorCode::kParseError);
  try {
    Spit(path, "1\n2\nbad\n");
    IngestTimestamps(path, 1.0);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos);
  }
  EXPECT_THROW(IngestTimestamps(path, 0.0), Error);
  try {
    IngestTimestamps(dir.File("missing"), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace hawkes_dp
