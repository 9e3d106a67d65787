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

#include "hawkes_dp/csv_io.h"

#include <gtest/gtest.h>

#include <cmath>

#include "hawkes_dp/error.h"
#include "hawkes_dp/hawkes.h"
#include "test_util.h"

namespace hawkes_dp {
namespace {

using ::hawkes_dp::testing::ScopedTempDir;
using ::hawkes_dp::testing::Slurp;
using ::hawkes_dp::testing::Spit;

ErrorCode CodeOf(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(EventsCsvTest, LabeledRoundTrip) {
  ScopedTempDir dir;
  const auto ev = SimulateBranching({1.0, 0.5}, 2000.0, 3);
  const auto path = dir.File("sub/events.csv");
  WriteEventsCsv(path, ev, {{"seed", "3"}});
  const auto back = ReadEventsCsv(path);
  ASSERT_EQ(back.size(), ev.size());
  EXPECT_EQ(back.horizon(), 2000.0);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    EXPECT_EQ(back.timestamps()[i], ev.timestamps()[i]);
    EXPECT_EQ(back.tree_ids()[i], ev.tree_ids()[i]);
    EXPECT_EQ(back.parent_indices()[i], ev.parent_indices()[i]);
  }
  const auto meta = ReadMetadata(path + ".meta");
  EXPECT_EQ(FindMetadata(meta, "seed"), "3");
  EXPECT_EQ(FindMetadata(meta, "num_events"), std::to_string(ev.size()));
}

TEST(EventsCsvTest, UnlabeledAndHorizonFallback) {
  ScopedTempDir dir;
  const auto path = dir.File("plain.csv");
  Spit(path, "timestamp,tree_id,parent_idx\n0.5,,\n1.25,,\n");
  const auto ev = ReadEventsCsv(path);
  EXPECT_FALSE(ev.labeled());
  EXPECT_EQ(ev.size(), 2u);
  EXPECT_EQ(ev.horizon(), 1.25);
  EXPECT_EQ(ReadEventsCsv(path, 10.0).horizon(), 10.0);
}

TEST(EventsCsvTest, Errors) {
  ScopedTempDir dir;
  const auto path = dir.File("bad.csv");
  EXPECT_EQ(CodeOf([&] { ReadEventsCsv(dir.File("missing.csv")); }),
            ErrorCode::kIoError);
  Spit(path, "time\n1\n");
  EXPECT_EQ(CodeOf([&] { ReadEventsCsv(path); }), ErrorCode::kParseError);
  Spit(path, "timestamp,tree_id,parent_idx\nabc,,\n");
  EXPECT_EQ(CodeOf([&] { ReadEventsCsv(path); }), ErrorCode::kParseError);
  Spit(path, "timestamp,tree_id,parent_idx\n2,,\n1,,\n");
  EXPECT_EQ(CodeOf([&] { ReadEventsCsv(path); }), ErrorCode::kParseError);
  Spit(path, "timestamp,tree_id,parent_idx\n1,0,\n2,,\n");
  EXPECT_EQ(CodeOf([&] { ReadEventsCsv(path); }), ErrorCode::kParseError);
  Spit(path, "timestamp,tree_id,parent_idx\n1,0,1\n");
  EXPECT_EQ(CodeOf([&] { ReadEventsCsv(path); }), ErrorCode::kParseError);
}

TEST(CountsCsvTest, RoundTrip) {
  ScopedTempDir dir;
  const auto series = MakeCountSeries({3, 0, 7, 12}, 2.5);
  const auto path = dir.File("counts.csv");
  WriteCountsCsv(path, series);
  EXPECT_EQ(Slurp(path),
            "# delta=2.5 horizon=10\nbin_index,count\n0,3\n1,0\n2,7\n3,12\n");
  const auto back = ReadCountsCsv(path);
  EXPECT_EQ(back.counts, series.counts);
  EXPECT_EQ(back.delta, 2.5);
  EXPECT_EQ(back.horizon, 10.0);

  Spit(path, "# delta=1 horizon=3\nbin_index,count\n0,1\n2,1\n");
  EXPECT_EQ(CodeOf([&] { ReadCountsCsv(path); }), ErrorCode::kParseError);
  Spit(path, "bin_index,count\n0,1\n");
  EXPECT_EQ(CodeOf([&] { ReadCountsCsv(path); }), ErrorCode::kParseError);
  Spit(path, "# delta=1 horizon=2\nbin_index,count\n0,1\n1,-1\n");
  EXPECT_EQ(CodeOf([&] { ReadCountsCsv(path); }), ErrorCode::kParseError);
}

TEST(TreeHistogramCsvTest, RoundTrip) {
  ScopedTempDir dir;
  const std::map<std::int64_t, std::int64_t> hist = {{1, 50}, {2, 12}, {9, 1}};
  const auto path = dir.File("trees.csv");
  WriteTreeHistogramCsv(path, hist);
  EXPECT_EQ(Slurp(path), "tree_size,count\n1,50\n2,12\n9,1\n");
  EXPECT_EQ(ReadTreeHistogramCsv(path), hist);
}

TEST(ComplexityCsvTest, RoundTrip) {
  ScopedTempDir dir;
  ComplexityReport report;
  report.terms = {{"a", 1.5}, {"b", 1e20}, {"c", 3.0}};
  report.binding_term = "b";
  report.required_t = 1e20;
  const auto path = dir.File("complexity.csv");
  WriteComplexityCsv(path, report);
  EXPECT_EQ(Slurp(path),
            "term_label,value,binding\na,1.5,0\nb,1e+20,1\nc,3,0\n");
  const auto back = ReadComplexityCsv(path);
  EXPECT_EQ(back.binding_term, "b");
  EXPECT_EQ(back.required_t, 1e20);
  ASSERT_EQ(back.terms.size(), 3u);
  EXPECT_EQ(back.terms[2].value, 3.0);
}

TEST(EstimateCsvTest, RoundTrip) {
  ScopedTempDir dir;
  EstimateResult ok;
  ok.mu_hat = 0.98;
  ok.alpha_hat = 0.51;
  ok.eta_hat = 20.1;
  ok.sigma_sq_hat = 67.25;
  ok.delta = 10.0;
  ok.status = EstimateStatus::kConverged;
  ok.iterations = 41;
  ok.residual = 1e-9;
  EstimateResult priv = ok;
  priv.release = ReleaseMetadata{10.0, 0.05, true, 25};
  EstimateResult failed = ok;
  failed.status = EstimateStatus::kNonConvergence;
  failed.release = ReleaseMetadata{2.0, 0.1, false, 0};

  const auto path = dir.File("estimate.csv");
  WriteEstimateCsv(path, {ok, priv, failed});
  const auto lines = ReadLines(path);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], kEstimateHeader);
  EXPECT_EQ(lines[1], "0.98,0.51,20.1,67.25,10,converged,41,1e-09,inf,0,none");
  EXPECT_EQ(lines[3], "nan,nan,20.1,67.25,10,nonconvergence,41,1e-09,2,0.1,auto");

  const auto back = ReadEstimateCsv(path);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[0].mu_hat, 0.98);
  EXPECT_FALSE(back[0].release.has_value());
  ASSERT_TRUE(back[1].release.has_value());
  EXPECT_EQ(back[1].release->b, 25);
  EXPECT_TRUE(back[1].release->relation_aware);
  EXPECT_EQ(back[2].status, EstimateStatus::kNonConvergence);
  EXPECT_TRUE(std::isnan(back[2].alpha_hat));
  EXPECT_FALSE(back[2].release->relation_aware);
}

TEST(MetadataTest, RoundTripAndErrors) {
  ScopedTempDir dir;
  const auto path = dir.File("x.meta");
  WriteMetadata(path, {{"a", "1"}, {"b", "two"}});
  const auto meta = ReadMetadata(path);
  EXPECT_EQ(FindMetadata(meta, "b"), "two");
  EXPECT_FALSE(FindMetadata(meta, "c").has_value());
  Spit(path, "novalue\n");
  EXPECT_EQ(CodeOf([&] { ReadMetadata(path); }), ErrorCode::kParseError);
}

TEST(WriteTest, UnwritablePathIsIoError) {
  EXPECT_EQ(CodeOf([] { WriteText("/proc/hawkes_dp/nope.txt", "x"); }),
            ErrorCode::kIoError);
}

}  // namespace
}  // namespace hawkes_dp
