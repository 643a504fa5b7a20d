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


#ifndef DUKE_ORACLE_H_
#define DUKE_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "duke/dataset.h"

namespace duke {

inline constexpr std::uint64_t kDefaultOracleCap = 2'000'000;

struct OracleResult {
  // Ascending. The lexicographically smallest optimal subset.
  std::vector<PointIndex> best_subset;
  double objective = 0.0;
  double radius_term = 0.0;
  double weight_term = 0.0;
  // Always C(n, k): pruned branches count as examined.
  std::uint64_t enumerated = 0;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Exact minimum of radius + lambda * weight over all size-k subsets.
// Throws kInstanceTooLarge when C(n, k) exceeds `cap`.
OracleResult brute_force_weighted(const EmbeddingSet& set, Metric metric,
                                  const WeightVector& weights, std::size_t k,
                                  double lambda,
                                  std::uint64_t cap = kDefaultOracleCap);

// Exact k-center optimum (lambda = 0, weight_term reported as 0).
OracleResult brute_force_kcenter(const EmbeddingSet& set, Metric metric,
                                 std::size_t k,
                                 std::uint64_t cap = kDefaultOracleCap);

// Radius term of the weighted optimum.
double optimal_gamma(const EmbeddingSet& set, Metric metric,
                     const WeightVector& weights, std::size_t k, double lambda,
                     std::uint64_t cap = kDefaultOracleCap);

}  // namespace duke

#endif  // DUKE_ORACLE_H_
