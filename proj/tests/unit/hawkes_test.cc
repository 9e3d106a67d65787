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

#include "hawkes_dp/hawkes.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "hawkes_dp/count_series.h"
#include "hawkes_dp/error.h"

namespace hawkes_dp {
namespace {

TEST(HawkesParamsTest, RejectsInvalidParameters) {
  EXPECT_THROW((HawkesParams{0.0, 0.5}.Validate()), Error);
  EXPECT_THROW((HawkesParams{-1.0, 0.5}.Validate()), Error);
  EXPECT_THROW((HawkesParams{1.0, 1.0}.Validate()), Error);
  EXPECT_THROW((HawkesParams{1.0, 0.0}.Validate()), Error);
  EXPECT_NO_THROW((HawkesParams{1.0, 0.5}.Validate()));
  EXPECT_DOUBLE_EQ((HawkesParams{1.0, 0.5}.StationaryRate()), 2.0);
}

TEST(EventSequenceTest, ValidatesOrderAndRange) {
  EXPECT_THROW(EventSequence({1.0, 0.5}, 2.0), Error);
  EXPECT_THROW(EventSequence({-0.1}, 2.0), Error);
  EXPECT_THROW(EventSequence({2.5}, 2.0), Error);
  EXPECT_NO_THROW(EventSequence({0.0, 1.0, 1.0, 2.0}, 2.0));
}

TEST(EventSequenceTest, ValidatesLabels) {
  // Parent must be earlier and in the same tree.
  EXPECT_THROW(EventSequence({0.1, 0.2}, {0, 1}, {std::nullopt, 0}, 1.0), Error);
  EXPECT_THROW(EventSequence({0.1, 0.1}, {0, 0}, {std::nullopt, 0}, 1.0), Error);
  EXPECT_THROW(EventSequence({0.1, 0.2}, {0, 0}, {1, std::nullopt}, 1.0), Error);
  EXPECT_THROW(EventSequence({0.1, 0.2}, {0}, {std::nullopt, 0}, 1.0), Error);
  const EventSequence ok({0.1, 0.2}, {0, 0}, {std::nullopt, 0}, 1.0);
  EXPECT_TRUE(ok.labeled());
}

TEST(IntensityTest, EmptyHistoryIsBackgroundRate) {
  const EventSequence none({}, 5.0);
  EXPECT_DOUBLE_EQ(IntensityAt({1.0, 0.5}, none, 3.0), 1.0);
}

TEST(IntensityTest, MatchesHighPrecisionValues) {
  EXPECT_NEAR(IntensityAt({1.0, 0.5}, EventSequence({0.0}, 2.0), 1.0),
              1.1839397205857212, 1e-15);
  EXPECT_NEAR(IntensityAt({2.0, 0.3}, EventSequence({0.0, 1.0}, 3.0), 2.0),
              2.1509644173224165, 1e-15);
}

TEST(IntensityTest, EventAtEvaluationTimeDoesNotCount) {
  const EventSequence events({0.0, 1.0}, 2.0);
  EXPECT_DOUBLE_EQ(IntensityAt({1.0, 0.5}, events, 1.0),
                   1.0 + 0.5 * std::exp(-1.0));
}

TEST(TheoreticalMomentsTest, MatchesHighPrecisionValues) {
  const auto m1 = ComputeTheoreticalMoments({1.0, 0.5}, 10.0);
  EXPECT_DOUBLE_EQ(m1.eta, 20.0);
  EXPECT_NEAR(m1.sigma_sq, 66.10771635212584, 1e-12);
  EXPECT_DOUBLE_EQ(m1.delta, 10.0);
  const auto m2 = ComputeTheoreticalMoments({1.5, 0.3}, 10.0);
  EXPECT_NEAR(m2.eta, 21.428571428571429, 1e-12);
  EXPECT_NEAR(m2.sigma_sq, 40.26789103557189, 1e-12);
  const auto m3 = ComputeTheoreticalMoments({2.0, 0.75}, 5.0);
  EXPECT_DOUBLE_EQ(m3.eta, 40.0);
  EXPECT_NEAR(m3.sigma_sq, 224.21544418678457, 1e-11);
}

TEST(TheoreticalMomentsTest, PoissonLimit) {
  const auto m = ComputeTheoreticalMoments({1.0, 1e-8}, 10.0);
  EXPECT_LT(std::abs(m.sigma_sq - m.eta), 1e-6);
  EXPECT_NEAR(m.sigma_sq - m.eta, 1.8000e-7, 1e-10);
}

TEST(TheoreticalMomentsTest, PositiveAndOverdispersed) {
  for (double mu : {0.1, 1.0, 5.0}) {
    for (double alpha : {0.01, 0.3, 0.6, 0.95}) {
      for (double delta : {0.1, 1.0, 10.0, 100.0}) {
        const auto m = ComputeTheoreticalMoments({mu, alpha}, delta);
        EXPECT_GT(m.eta, 0.0);
        EXPECT_GT(m.sigma_sq, 0.0);
        if (delta >= 10.0) EXPECT_GE(m.sigma_sq, m.eta);
      }
    }
  }
}

TEST(TheoreticalMomentsTest, RejectsBadBinWidth) {
  EXPECT_THROW(ComputeTheoreticalMoments({1.0, 0.5}, 0.0), Error);
}

TEST(TransientMomentsTest, StationaryStartMatchesStationaryMoments) {
  const auto m = ComputeTransientMoments({1.0, 0.5}, 2.0, 10.0);
  EXPECT_NEAR(m.mean, 20.0, 1e-12);
  EXPECT_NEAR(m.variance, 66.10771635212584, 1e-11);
  for (double t : {0.5, 3.0, 40.0}) {
    const auto s = ComputeTransientMoments({0.7, 0.3}, 1.0, t);
    EXPECT_NEAR(s.mean, 1.0 * t, 1e-12 * t);
    EXPECT_NEAR(s.variance, ComputeTheoreticalMoments({0.7, 0.3}, t).sigma_sq,
                1e-10 * t);
  }
}

TEST(TransientMomentsTest, MatchesHighPrecisionValues) {
  const auto m = ComputeTransientMoments({1.0, 0.5}, 3.0, 10.0);
  EXPECT_NEAR(m.mean, 21.986524106001829, 1e-12);
  EXPECT_NEAR(m.variance, 73.797679990308386, 1e-11);
}

TEST(TransientMomentsTest, RejectsBadArguments) {
  EXPECT_THROW(ComputeTransientMoments({1.0, 0.5}, 0.5, 1.0), Error);
  EXPECT_THROW(ComputeTransientMoments({1.0, 0.5}, 2.0, 0.0), Error);
}

TEST(SimulationTest, ThinningIsDeterministic) {
  const auto a = SimulateThinning({1.0, 0.5}, 1000.0, 42);
  const auto b = SimulateThinning({1.0, 0.5}, 1000.0, 42);
  const auto c = SimulateThinning({1.0, 0.5}, 1000.0, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_FALSE(a.labeled());
}

TEST(SimulationTest, BranchingIsDeterministic) {
  const auto a = SimulateBranching({1.0, 0.5}, 1000.0, 42);
  const auto b = SimulateBranching({1.0, 0.5}, 1000.0, 42);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.labeled());
}

TEST(SimulationTest, RejectsInvalidArguments) {
  EXPECT_THROW(SimulateThinning({1.0, 1.0}, 10.0, 1), Error);
  EXPECT_THROW(SimulateThinning({0.0, 0.5}, 10.0, 1), Error);
  EXPECT_THROW(SimulateThinning({1.0, 0.5}, 0.0, 1), Error);
  EXPECT_THROW(SimulateBranching({1.0, 0.5}, 10.0, 1, -1.0), Error);
}

TEST(SimulationTest, ThinningStationaryRate) {
  const auto events = SimulateThinning({1.0, 0.5}, 100000.0, 7);
  const double rate = static_cast<double>(events.size()) / 100000.0;
  // The count over T has standard deviation sqrt(sigma^2(T)) ~ sqrt(8 T).
  EXPECT_NEAR(rate, 2.0, 5.0 * std::sqrt(8.0 * 100000.0) / 100000.0);
  for (double t : events.timestamps()) {
    ASSERT_GE(t, 0.0);
    ASSERT_LE(t, 100000.0);
  }
}

TEST(SimulationTest, NearPoissonRate) {
  const auto events = SimulateThinning({1.0, 1e-9}, 10000.0, 3);
  EXPECT_NEAR(static_cast<double>(events.size()) / 10000.0, 1.0, 0.05);
}

TEST(SimulationTest, WarmupZeroStartsFromEmptyHistory) {
  // Without warmup the early intensity is below stationary, so the count on
  // a short window is biased low on average.
  double cold = 0.0;
  double warm = 0.0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    cold += static_cast<double>(SimulateThinning({1.0, 0.8}, 5.0, s, 0.0).size());
    warm += static_cast<double>(SimulateThinning({1.0, 0.8}, 5.0, s).size());
  }
  EXPECT_LT(cold, warm);
  EXPECT_NEAR(warm / 400.0, 25.0, 2.5);
}

TEST(SimulationTest, BranchingOffspringMeanIsAlpha) {
  const double horizon = 100000.0;
  const auto events = SimulateBranching({1.0, 0.5}, horizon, 11);
  std::vector<int> children(events.size(), 0);
  for (const auto& p : events.parent_indices()) {
    if (p) ++children[*p];
  }
  // Only parents whose offspring window fits before the horizon.
  double total = 0.0;
  double n = 0.0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events.timestamps()[i] < horizon - 40.0) {
      total += children[i];
      n += 1.0;
    }
  }
  const double mean = total / n;
  EXPECT_NEAR(mean, 0.5, 4.0 * std::sqrt(0.5 / n));
}

TEST(SimulationTest, BranchingLabelsAreConsistent) {
  const auto events = SimulateBranching({1.0, 0.6}, 5000.0, 5);
  const auto trees = events.tree_ids();
  // Tree ids are compact and numbered by first appearance.
  std::int64_t next = 0;
  for (std::int64_t id : trees) {
    ASSERT_LE(id, next);
    if (id == next) ++next;
  }
  // Every tree rooted inside the window has exactly one parentless event.
  std::vector<int> roots(static_cast<std::size_t>(next), 0);
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (!events.parent_indices()[i]) ++roots[static_cast<std::size_t>(trees[i])];
  }
  for (int r : roots) EXPECT_GE(r, 1);
}

TEST(SimulationTest, NearZeroAlphaGivesSingletonTrees) {
  const auto events = SimulateBranching({1.0, 1e-12}, 2000.0, 9);
  for (std::size_t i = 0; i < events.size(); ++i) {
    EXPECT_FALSE(events.parent_indices()[i].has_value());
    EXPECT_EQ(events.tree_ids()[i], static_cast<std::int64_t>(i));
  }
}

struct BinMoments {
  double mean;
  double var;
};

BinMoments MomentsOf(const EventSequence& events, double delta) {
  const auto stats = ComputeSampleStats(BinEvents(events, delta));
  return {stats.eta_hat, stats.sigma_sq_hat};
}

TEST(SimulationTest, GeneratorsAgreeInDistribution) {
  // 30 independent series of T = 1e5 from each generator; compare the
  // average sample moments with a two-sample z statistic.
  std::vector<double> m_thin, v_thin, m_branch, v_branch;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto a = MomentsOf(SimulateThinning({1.0, 0.5}, 100000.0, s), 10.0);
    const auto b =
        MomentsOf(SimulateBranching({1.0, 0.5}, 100000.0, 1000 + s), 10.0);
    m_thin.push_back(a.mean);
    v_thin.push_back(a.var);
    m_branch.push_back(b.mean);
    v_branch.push_back(b.var);
  }
  auto mean = [](const std::vector<double>& x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  };
  auto sem = [&](const std::vector<double>& x) {
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    return std::sqrt(ss / (x.size() - 1) / x.size());
  };
  const double z_mean = (mean(m_thin) - mean(m_branch)) /
                        std::hypot(sem(m_thin), sem(m_branch));
  const double z_var = (mean(v_thin) - mean(v_branch)) /
                       std::hypot(sem(v_thin), sem(v_branch));
  EXPECT_LT(std::abs(z_mean), 4.0);
  EXPECT_LT(std::abs(z_var), 4.0);
  EXPECT_NEAR(mean(m_thin), 20.0, 0.1);
  // Unconditional stationary variance (closed form from the covariance
  // density); the fixed-initial-intensity formula gives 66.1077 instead.
  EXPECT_NEAR(mean(v_branch), 68.080855363989, 4.0 * sem(v_branch));
  EXPECT_NEAR(mean(v_thin), 68.080855363989, 4.0 * sem(v_thin));
}

}  // namespace
}  // namespace hawkes_dp
