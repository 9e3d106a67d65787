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

#include "hawkes_dp/random.h"

#include <bit>

#include <cmath>

namespace hawkes_dp {

namespace {

constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double Rng::Uniform() {
  // Midpoint of one of 2^53 equal cells; never 0 or 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * kTwoPowMinus53;
}

double Rng::Exponential(double rate) { return -std::log(Uniform()) / rate; }

std::int64_t Rng::Poisson(double mean) {
  if (mean <= 0.0) return 0;
  const double u = Uniform();
  double p = std::exp(-mean);
  double cdf = p;
  std::int64_t k = 0;
  while (u > cdf && p > 0.0) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

std::uint64_t MixSeed(std::uint64_t base,
                      std::initializer_list<std::uint64_t> coordinates) {
  std::uint64_t h = SplitMix64(base);
  // The rotation keeps the fold order-dependent, so (a, {b}) and (b, {a})
  // land on different seeds.
  for (std::uint64_t c : coordinates) {
    h = SplitMix64(std::rotl(h, 23) ^ SplitMix64(c + 1));
  }
  return h;
}

unsigned DefaultThreadCount() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace hawkes_dp
