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

#ifndef HAWKES_DP_RANDOM_H_
#define HAWKES_DP_RANDOM_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <initializer_list>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace hawkes_dp {

// Random stream used by every simulator and noise sampler. Variates are
// produced by explicit inverse transforms of the raw 64-bit engine output,
// so a seed yields the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1), 53 bits of resolution.
  double Uniform();
  double Exponential(double rate);
  // Inversion by sequential search; intended for small means (offspring
  // counts with mean below one).
  std::int64_t Poisson(double mean);

  std::uint64_t NextRaw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Deterministic seed derivation: splitmix64 folded over the coordinates.
std::uint64_t MixSeed(std::uint64_t base,
                      std::initializer_list<std::uint64_t> coordinates);

unsigned DefaultThreadCount();

// Runs fn(i) for i in [0, n) on a small worker pool and returns results in
// index order, whatever the completion order. The first exception thrown by
// any task is rethrown on the caller's thread.
template <typename Fn>
auto ParallelMap(std::size_t n, Fn fn, unsigned threads = 0)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> results(n);
  if (threads == 0) threads = DefaultThreadCount();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace hawkes_dp

#endif  // HAWKES_DP_RANDOM_H_
