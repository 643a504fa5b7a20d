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


#include "duke/parallel.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "duke/error.h"

namespace duke {
namespace {

// weighted_kcenter restricted to `members` (ascending), in global indices.
std::vector<PointIndex> SelectWithin(const EmbeddingSet& set, Metric metric,
                                     const WeightVector& weights,
                                     const SelectionConfig& config,
                                     const std::vector<PointIndex>& members) {
  const EmbeddingSet local_set = set.Subset(members);
  const WeightVector local_weights = weights.Subset(members);
  SelectionConfig local = config;
  local.k = std::min(config.k, members.size());
  const SubsetSolution s =
      weighted_kcenter(local_set, metric, local_weights, local);
  std::vector<PointIndex> out;
  out.reserve(s.indices.size());
  for (PointIndex i : s.indices) out.push_back(members[i]);
  return out;
}

}  // namespace

PartitionStrategy ParsePartitionStrategy(std::string_view name) {
  if (name == "round-robin") return PartitionStrategy::kRoundRobin;
  if (name == "random") return PartitionStrategy::kRandom;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown partition strategy '" + std::string(name) + "'");
}

std::vector<std::vector<PointIndex>> PartitionPlan::Members() const {
  std::vector<std::vector<PointIndex>> members(m);
  for (PointIndex i = 0; i < assignment.size(); ++i) {
    members[assignment[i]].push_back(i);
  }
  return members;
}

PartitionPlan make_partition(std::size_t n, std::size_t m, std::uint64_t seed,
                             PartitionStrategy strategy) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "need >= 1 worker");
  if (m > n) {
    throw Error(ErrorCode::kTooManyWorkers,
                std::to_string(m) + " workers for " + std::to_string(n) +
                    " points",
                m);
  }
  PartitionPlan plan;
  plan.m = m;
  plan.seed = seed;
  plan.assignment.resize(n);
  std::vector<PointIndex> order(n);
  std::iota(order.begin(), order.end(), PointIndex{0});
  if (strategy == PartitionStrategy::kRandom) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  for (std::size_t pos = 0; pos < n; ++pos) plan.assignment[order[pos]] = pos % m;
  return plan;
}

SubsetSolution parallel_weighted_kcenter(const EmbeddingSet& set,
                                         Metric metric,
                                         const WeightVector& weights,
                                         const SelectionConfig& config,
                                         const PartitionPlan& plan,
                                         const ParallelOptions& options) {
  config.Validate(set.size());
  if (weights.size() != set.size() || plan.assignment.size() != set.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "weights and partition plan must cover every point");
  }
  const auto members = plan.Members();
  for (std::size_t w = 0; w < plan.m; ++w) {
    if (members[w].empty()) {
      throw Error(ErrorCode::kInvalidArgument, "worker has no points", w);
    }
  }

  std::vector<std::size_t> order = options.worker_order;
  if (order.empty()) {
    order.resize(plan.m);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::vector<std::vector<PointIndex>> candidates(plan.m);
  auto run_worker = [&](std::size_t w) {
    candidates[w] = SelectWithin(set, metric, weights, config, members[w]);
  };
  if (options.threads <= 1) {
    for (std::size_t w : order) run_worker(w);
  } else {
    const std::size_t lanes = std::min<std::size_t>(options.threads, plan.m);
    std::vector<std::jthread> pool;
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      pool.emplace_back([&, lane] {
        for (std::size_t j = lane; j < order.size(); j += lanes) {
          run_worker(order[j]);
        }
      });
    }
  }

  std::vector<PointIndex> pooled;
  for (const auto& c : candidates) pooled.insert(pooled.end(), c.begin(), c.end());
  std::sort(pooled.begin(), pooled.end());

  std::vector<PointIndex> final_pick =
      SelectWithin(set, metric, weights, config, pooled);
  SubsetSolution s = make_solution(set, metric, weights, config.lambda,
                                   std::move(final_pick), "parallel",
                                   config.gamma);
  s.machines = plan.m;
  s.worker_candidates = std::move(candidates);
  return s;
}

}  // namespace duke
