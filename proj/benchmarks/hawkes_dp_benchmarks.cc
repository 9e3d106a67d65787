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

#include <benchmark/benchmark.h>

#include "hawkes_dp/branching_stats.h"
#include "hawkes_dp/complexity.h"
#include "hawkes_dp/count_series.h"
#include "hawkes_dp/estimator.h"
#include "hawkes_dp/hawkes.h"
#include "hawkes_dp/privacy.h"

namespace hawkes_dp {
namespace {

void BM_SimulateThinning(benchmark::State& state) {
  const double horizon = static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  std::int64_t events = 0;
  for (auto _ : state) {
    const auto ev = SimulateThinning({1.0, 0.5}, horizon, seed++);
    events += static_cast<std::int64_t>(ev.size());
    benchmark::DoNotOptimize(ev.timestamps().data());
  }
  state.SetItemsProcessed(events);
}
BENCHMARK(BM_SimulateThinning)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_SimulateBranching(benchmark::State& state) {
  const double horizon = static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  std::int64_t events = 0;
  for (auto _ : state) {
    const auto ev = SimulateBranching({1.0, 0.5}, horizon, seed++);
    events += static_cast<std::int64_t>(ev.size());
    benchmark::DoNotOptimize(ev.timestamps().data());
  }
  state.SetItemsProcessed(events);
}
BENCHMARK(BM_SimulateBranching)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BinAndEstimate(benchmark::State& state) {
  const auto ev = SimulateThinning({1.0, 0.5}, 100000.0, 1);
  const ParamBounds bounds = ParamBounds::Defaults();
  for (auto _ : state) {
    const auto r = Estimate(BinEvents(ev, 10.0), bounds);
    benchmark::DoNotOptimize(r.alpha_hat);
  }
}
BENCHMARK(BM_BinAndEstimate)->Unit(benchmark::kMicrosecond);

void BM_InvertMoments(benchmark::State& state) {
  const ParamBounds bounds = ParamBounds::Defaults();
  const auto m = ComputeTheoreticalMoments({1.0, 0.5}, 10.0);
  for (auto _ : state) {
    const auto r = InvertMoments(m.eta, m.sigma_sq, 10.0, bounds);
    benchmark::DoNotOptimize(r.alpha_hat);
  }
}
BENCHMARK(BM_InvertMoments);

void BM_PrivateEstimate(benchmark::State& state) {
  const auto series = BinEvents(SimulateThinning({1.0, 0.5}, 100000.0, 1), 10.0);
  const ParamBounds bounds = ParamBounds::Defaults();
  const auto spec = SensitivitySpec::RelationAware(10, bounds, 0.05);
  LaplaceSampler sampler(3);
  for (auto _ : state) {
    const auto r = PrivateEstimate(series, bounds, spec, {1.0, 0.05}, sampler);
    benchmark::DoNotOptimize(r.alpha_hat);
  }
}
BENCHMARK(BM_PrivateEstimate)->Unit(benchmark::kMicrosecond);

void BM_TreeSizes(benchmark::State& state) {
  const auto ev = SimulateBranching({1.0, 0.5}, 100000.0, 1);
  for (auto _ : state) {
    const auto stats = ComputeTreeSizes(ev);
    benchmark::DoNotOptimize(stats.sizes.data());
  }
}
BENCHMARK(BM_TreeSizes)->Unit(benchmark::kMicrosecond);

void BM_InverseNormalCdf(benchmark::State& state) {
  double p = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(InverseNormalCdf(p));
    p = p < 0.98 ? p * 1.01 : 1e-6;
  }
}
BENCHMARK(BM_InverseNormalCdf);

void BM_RequiredTPrivate(benchmark::State& state) {
  ComplexityInputs in;
  in.bounds = ParamBounds{0.5, 2.0, 0.1, 0.75};
  in.xi = 30.0;
  in.delta_prob = 0.05;
  in.delta_bin = 50000.0;
  in.sigma_sq = StationaryBinVariance(1.0, 0.5, 50000.0);
  in.eta4 = 3.0 * in.sigma_sq * in.sigma_sq;
  for (auto _ : state) {
    const auto r = RequiredTPrivate(in, {1.0, 0.05});
    benchmark::DoNotOptimize(r.required_t);
  }
}
BENCHMARK(BM_RequiredTPrivate)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace hawkes_dp

BENCHMARK_MAIN();
