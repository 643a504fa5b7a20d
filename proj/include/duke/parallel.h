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


#ifndef DUKE_PARALLEL_H_
#define DUKE_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "duke/dataset.h"
#include "duke/wkcenter.h"

namespace duke {

enum class PartitionStrategy { kRoundRobin, kRandom };

PartitionStrategy ParsePartitionStrategy(std::string_view name);

// Assignment of every point to one of m workers. Sizes differ by at most 1.
struct PartitionPlan {
  std::size_t m = 1;
  std::vector<std::size_t> assignment;
  std::uint64_t seed = 0;

  // Point indices per worker, ascending.
  std::vector<std::vector<PointIndex>> Members() const;
};

PartitionPlan make_partition(std::size_t n, std::size_t m, std::uint64_t seed,
                             PartitionStrategy strategy);

struct ParallelOptions {
  // 1 runs the workers in a plain loop; more spawns real threads. The
  // result is the same either way.
  unsigned threads = 1;
  // Execution order of the workers, empty for 0..m-1.
  std::vector<std::size_t> worker_order;
};

// Two-round selection: every worker runs weighted_kcenter on its partition
// with budget min(k, partition size) and the shared gamma, then one more
// weighted_kcenter pass over the union of the worker picks chooses the final
// k. The radius term is measured over the whole ground set.
SubsetSolution parallel_weighted_kcenter(const EmbeddingSet& set,
                                         Metric metric,
                                         const WeightVector& weights,
                                         const SelectionConfig& config,
                                         const PartitionPlan& plan,
                                         const ParallelOptions& options = {});

}  // namespace duke

#endif  // DUKE_PARALLEL_H_
