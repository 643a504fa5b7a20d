// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef DUKE_BENCH_H_
#define DUKE_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "duke/dataset.h"

namespace duke {

struct BenchOptions {
  std::vector<std::size_t> sizes = {25000, 50000, 100000, 200000};
  std::size_t dim = 64;
  std::size_t k = 100;
  std::uint64_t seed = 7;
  // Best-of-N wall time per measurement, rounds interleaved across sizes.
  std::size_t repeats = 5;
  Metric metric = Metric::kEuclidean;
  // gamma = fraction * greedy k-center radius of the same instance, so the
  // 3*gamma exclusion ball stays smaller than the greedy cover and the ball
  // step runs for most picks.
  double gamma_fraction = 1.0 / 6.0;
  // Second sweep: k and 2k at a fixed n. 0 disables it.
  std::size_t k_sweep_n = 0;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  double gamma = 0.0;
  double greedy_ms = 0.0;
  double pq_ms = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> ladder;
  // ladder[i + 1] / ladder[i] wall-time ratios.
  std::vector<double> pq_ratios;
  std::vector<double> greedy_ratios;
  // Rows at k and 2k when k_sweep_n > 0.
  std::vector<BenchRow> k_sweep;
  double total_ms = 0.0;
};

// Times greedy_kcenter and weighted_kcenter_pq (exact-ball) on uniform-cube
// instances of each size.
BenchResult run_bench(const BenchOptions& options);

}  // namespace duke

#endif  // DUKE_BENCH_H_
