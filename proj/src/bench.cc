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


#include "duke/bench.h"

#include <algorithm>
#include <chrono>
#include <limits>

#include "duke/instances.h"
#include "duke/wkcenter.h"

namespace duke {
namespace {

using Clock = std::chrono::steady_clock;

double Millis(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

struct Subject {
  Instance instance;
  BenchRow row;
  SelectionConfig config;
};

Subject Prepare(Instance inst, std::size_t k, const BenchOptions& options) {
  Subject s{std::move(inst), {}, {}};
  k = std::min(k, s.instance.set.size());
  s.row.n = s.instance.set.size();
  s.row.k = k;
  s.row.greedy_ms = std::numeric_limits<double>::infinity();
  s.row.pq_ms = std::numeric_limits<double>::infinity();
  s.config.k = k;
  s.config.lambda = default_lambda(k);
  s.config.metric = options.metric;
  s.config.gamma =
      options.gamma_fraction *
      greedy_kcenter(s.instance.set, options.metric, k, 0).radius_term;
  s.row.gamma = s.config.gamma;
  return s;
}

void TimeOnce(Subject& s, Metric metric) {
  auto t0 = Clock::now();
  greedy_kcenter(s.instance.set, metric, s.config.k, 0);
  auto t1 = Clock::now();
  s.row.greedy_ms = std::min(s.row.greedy_ms, Millis(t0, t1));
  t0 = Clock::now();
  weighted_kcenter_pq(s.instance.set, metric, s.instance.weights, nullptr,
                      s.config, NeighborhoodMode::kExactBall);
  t1 = Clock::now();
  s.row.pq_ms = std::min(s.row.pq_ms, Millis(t0, t1));
}

// Best-of-N, with the rounds interleaved across subjects so that slow
// phases of a shared machine hit every size alike.
void TimeAll(std::vector<Subject>& subjects, const BenchOptions& options) {
  for (std::size_t r = 0; r < std::max<std::size_t>(1, options.repeats); ++r) {
    for (Subject& s : subjects) TimeOnce(s, options.metric);
  }
}

Instance Cube(std::size_t n, const BenchOptions& options) {
  SyntheticSpec spec;
  spec.kind = InstanceKind::kUniformCube;
  spec.n = n;
  spec.dim = options.dim;
  spec.seed = options.seed;
  spec.weights = WeightScheme::kRandom;
  return gen_clusters(spec);
}

}  // namespace

BenchResult run_bench(const BenchOptions& options) {
  const auto start = Clock::now();
  BenchResult result;
  std::vector<Subject> ladder;
  for (std::size_t n : options.sizes) {
    ladder.push_back(Prepare(Cube(n, options), options.k, options));
  }
  TimeAll(ladder, options);
  for (const Subject& s : ladder) result.ladder.push_back(s.row);
  for (std::size_t i = 1; i < result.ladder.size(); ++i) {
    const BenchRow& a = result.ladder[i - 1];
    const BenchRow& b = result.ladder[i];
    result.pq_ratios.push_back(b.pq_ms / a.pq_ms);
    result.greedy_ratios.push_back(b.greedy_ms / a.greedy_ms);
  }
  if (options.k_sweep_n > 0) {
    std::vector<Subject> sweep;
    sweep.push_back(Prepare(Cube(options.k_sweep_n, options), options.k, options));
    sweep.push_back(
        Prepare(Cube(options.k_sweep_n, options), 2 * options.k, options));
    TimeAll(sweep, options);
    for (const Subject& s : sweep) result.k_sweep.push_back(s.row);
  }
  result.total_ms = Millis(start, Clock::now());
  return result;
}

}  // namespace duke
