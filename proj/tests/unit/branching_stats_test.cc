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

#include "hawkes_dp/branching_stats.h"

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <vector>

#include "hawkes_dp/error.h"
#include "hawkes_dp/hawkes.h"

namespace hawkes_dp {
namespace {

TEST(BorelTest, PmfValues) {
  EXPECT_NEAR(BorelPmf(0.5, 1), 0.60653065971263342, 1e-15);
  EXPECT_NEAR(BorelPmf(0.5, 2), 0.18393972058572116, 1e-15);
  EXPECT_NEAR(BorelPmf(0.5, 10), 0.0036265577415643747, 1e-16);
  EXPECT_DOUBLE_EQ(BorelPmf(0.0, 1), 1.0);
  EXPECT_DOUBLE_EQ(BorelPmf(0.0, 3), 0.0);
  EXPECT_THROW(BorelPmf(1.0, 1), Error);
  EXPECT_THROW(BorelPmf(0.5, 0), Error);
}

TEST(BorelTest, SumsToOneWithMeanOneOverOneMinusNu) {
  for (double nu : {0.1, 0.3, 0.5, 0.75}) {
    double total = 0.0, mean = 0.0;
    for (std::int64_t j = 1; j <= 5000; ++j) {
      const double p = BorelPmf(nu, j);
      total += p;
      mean += j * p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10) << nu;
    EXPECT_NEAR(mean, 1.0 / (1.0 - nu), 1e-8) << nu;
  }
}

TEST(TailBoundTest, ValueAndDominatesExactTail) {
  EXPECT_NEAR(ProgenyTailBound(0.5, 20.0), 0.15521506444836037, 1e-14);
  // Exact P(S > 20) for nu = 0.5.
  EXPECT_GT(ProgenyTailBound(0.5, 20.0), 0.00063725987268477);
  for (double nu : {0.2, 0.5, 0.75}) {
    double tail = 1.0;
    for (std::int64_t d = 1; d < 200; ++d) {
      tail -= BorelPmf(nu, d);
      if (d > 1.0 / (1.0 - nu)) {
        EXPECT_GE(ProgenyTailBound(nu, d), tail - 1e-14) << nu << " " << d;
      }
    }
  }
  try {
    ProgenyTailBound(0.5, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

TEST(LargestTreeTest, BoundsAndScale) {
  EXPECT_NEAR(LargestTreeProbBound(1.0, 0.5, 1e5, 80.0),
              0.99606036280499582, 1e-12);
  EXPECT_LT(LargestTreeProbBound(1.0, 0.5, 1e5, 40.0), 1e-20);
  EXPECT_NEAR(LargestTreeScale(1.0, 0.5, 1e5, 0.05), 69.336362501801724,
              1e-11);
  EXPECT_THROW(LargestTreeProbBound(1.0, 0.5, 1e5, 1.0), Error);
}

TEST(DiscrepancyTest, Values) {
  const ParamBounds bounds{0.1, 2.0, 0.01, 0.75};
  EXPECT_NEAR(DiscrepancyBound(bounds, 0.05, 10, 20.0), 7504.6652157174873,
              1e-9);
  try {
    DiscrepancyBound(bounds, 0.05, 10, 10.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
  EXPECT_THROW(DiscrepancyBound(bounds, 0.05, 0, 20.0), Error);
}

TEST(TreeSizesTest, HandBuilt) {
  const EventSequence ev({0.1, 0.2, 0.3, 0.5, 0.9}, {0, 0, 1, 0, 2},
                         {std::nullopt, 0, std::nullopt, 1, std::nullopt},
                         1.0);
  const TreeStats stats = ComputeTreeSizes(ev);
  EXPECT_EQ(stats.sizes, (std::vector<std::int64_t>{3, 1, 1}));
  EXPECT_EQ(stats.num_trees(), 3);
  EXPECT_EQ(stats.total_events(), 5);
  EXPECT_EQ(stats.max_size(), 3);
  EXPECT_NEAR(stats.mean_size(), 5.0 / 3.0, 1e-15);
  const auto hist = stats.Histogram();
  EXPECT_EQ(hist.at(1), 2);
  EXPECT_EQ(hist.at(3), 1);

  // Sparse ids from external files are grouped without a dense table.
  const EventSequence sparse({0.1, 0.2, 0.3}, {1000000000000, 7, 1000000000000},
                             {std::nullopt, std::nullopt, 0}, 1.0);
  EXPECT_EQ(ComputeTreeSizes(sparse).sizes, (std::vector<std::int64_t>{1, 2}));

  EXPECT_THROW(ComputeTreeSizes(EventSequence({0.5}, 1.0)), Error);
  EXPECT_EQ(ComputeTreeSizes(EventSequence({}, 1.0)).num_trees(), 0);
}

// Sizes of trees whose immigrant arrives well before the horizon.
std::vector<std::int64_t> CompleteTreeSizes(const EventSequence& ev,
                                            double cutoff) {
  std::map<std::int64_t, std::int64_t> size;
  std::map<std::int64_t, double> start;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const std::int64_t id = ev.tree_ids()[i];
    ++size[id];
    start.try_emplace(id, ev.timestamps()[i]);
  }
  std::vector<std::int64_t> out;
  for (const auto& [id, s] : size) {
    if (start[id] < cutoff) out.push_back(s);
  }
  return out;
}

TEST(TreeSizesTest, MatchBorelDistribution) {
  const double nu = 0.5;
  const double horizon = 50000.0;
  const auto ev = SimulateBranching({1.0, nu}, horizon, 2024, 0.0);
  const auto sizes = CompleteTreeSizes(ev, horizon - 100.0);
  const double n = static_cast<double>(sizes.size());
  ASSERT_GT(n, 40000);

  constexpr int kCells = 10;  // 1..9 and >= 10
  std::vector<double> observed(kCells, 0.0), expected(kCells, 0.0);
  for (std::int64_t s : sizes) observed[std::min<std::int64_t>(s, kCells) - 1]++;
  double head = 0.0;
  for (int j = 1; j < kCells; ++j) {
    expected[j - 1] = n * BorelPmf(nu, j);
    head += BorelPmf(nu, j);
  }
  expected[kCells - 1] = n * (1.0 - head);
  double chi2 = 0.0;
  for (int c = 0; c < kCells; ++c) {
    chi2 += (observed[c] - expected[c]) * (observed[c] - expected[c]) /
            expected[c];
  }
  const boost::math::chi_squared dist(kCells - 1);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 1e-3)
      << "chi2 = " << chi2;

  double mean = 0.0;
  for (std::int64_t s : sizes) mean += static_cast<double>(s);
  mean /= n;
  // Var S = nu / (1 - nu)^3.
  const double se = std::sqrt(nu / std::pow(1 - nu, 3) / n);
  EXPECT_NEAR(mean, 1.0 / (1.0 - nu), 4.0 * se);
}

TEST(TreeSizesTest, SizesSumToEventCount) {
  const auto ev = SimulateBranching({0.7, 0.6}, 5000.0, 5);
  const auto stats = ComputeTreeSizes(ev);
  EXPECT_EQ(stats.total_events(), static_cast<std::int64_t>(ev.size()));
  for (std::int64_t s : stats.sizes) EXPECT_GE(s, 1);
}

}  // namespace
}  // namespace hawkes_dp
