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


#ifndef DUKE_WKCENTER_H_
#define DUKE_WKCENTER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "duke/dataset.h"
#include "duke/nngraph.h"

namespace duke {

struct SelectionConfig {
  std::size_t k = 1;
  double lambda = 0.0;
  // Ball radius, in the units of the metric.
  double gamma = 0.0;
  Metric metric = Metric::kCosine;
  std::uint64_t seed = 0;

  // Throws unless 1 <= k <= n, lambda >= 0 and gamma >= 0.
  void Validate(std::size_t n) const;
};

struct SubsetSolution {
  // Selection order is preserved.
  std::vector<PointIndex> indices;
  double radius_term = 0.0;
  double weight_term = 0.0;
  double objective = 0.0;
  std::string algorithm;
  double gamma_used = 0.0;
  double lambda = 0.0;
  // Partition-parallel runs only.
  std::size_t machines = 0;
  std::vector<std::vector<PointIndex>> worker_candidates;
};

struct ObjectiveTerms {
  double radius_term = 0.0;
  double weight_term = 0.0;
  double objective = 0.0;
};

// max over all points of the distance to the nearest center.
double kcenter_cost(const EmbeddingSet& set, Metric metric,
                    std::span<const PointIndex> centers);

// kcenter_cost(centers) + lambda * sum of center weights.
ObjectiveTerms weighted_objective(const EmbeddingSet& set, Metric metric,
                                  const WeightVector& weights, double lambda,
                                  std::span<const PointIndex> centers);

// Scores an index list with weighted_objective and wraps it as a solution.
SubsetSolution make_solution(const EmbeddingSet& set, Metric metric,
                             const WeightVector& weights, double lambda,
                             std::vector<PointIndex> indices,
                             std::string algorithm, double gamma_used = 0.0);

// Farthest-point (Gonzalez) k-center from `start`. Weights play no role, so
// weight_term is 0 and objective equals the radius.
SubsetSolution greedy_kcenter(const EmbeddingSet& set, Metric metric,
                              std::size_t k, PointIndex start = 0);

// Reference weighted k-center selection with exact metric balls.
//
// Seeds with the minimum-weight point, then repeats until k points are
// chosen: when some point lies strictly farther than 3*gamma from the
// selection, take the lightest such point c and add the lightest point
// within gamma of c (c itself qualifies); otherwise add the lightest
// unselected point. Ties always go to the lower index.
SubsetSolution weighted_kcenter(const EmbeddingSet& set, Metric metric,
                                const WeightVector& weights,
                                const SelectionConfig& config);

enum class NeighborhoodMode {
  // Removal set of a center is its exact 3*gamma ball; output matches
  // weighted_kcenter index for index.
  kExactBall,
  // Removal set of a center is its kNN adjacency list.
  kKnnGraph,
};

NeighborhoodMode ParseNeighborhoodMode(std::string_view name);

// Priority-queue formulation of weighted_kcenter. `graph` may be null in
// kExactBall mode and is required in kKnnGraph mode.
SubsetSolution weighted_kcenter_pq(const EmbeddingSet& set, Metric metric,
                                   const WeightVector& weights,
                                   const NeighborGraph* graph,
                                   const SelectionConfig& config,
                                   NeighborhoodMode mode =
                                       NeighborhoodMode::kExactBall);

struct GammaBounds {
  double lo = 0.0;
  double hi = 0.0;
};

// hi: k-center cost of the k lightest points (the lambda -> infinity
// solution). lo: a certified lower bound on the optimal k-center radius, half
// the greedy radius (a quarter under cosine distance, which only satisfies
// the triangle inequality up to a factor of 2).
GammaBounds gamma_bounds(const EmbeddingSet& set, Metric metric,
                         const WeightVector& weights, std::size_t k);

// `size` values spaced geometrically over [max(lo, 1e-12), hi]. A single
// value is the midpoint of that range.
std::vector<double> gamma_grid(const GammaBounds& bounds, std::size_t size);

struct GammaTracePoint {
  double gamma = 0.0;
  double objective = 0.0;
};

struct GammaSearchResult {
  SubsetSolution best;
  std::vector<GammaTracePoint> trace;
};

// Runs `select` at every grid value and keeps the lowest objective (the
// earliest grid value on ties).
GammaSearchResult gamma_search(
    std::span<const double> grid,
    const std::function<SubsetSolution(double gamma)>& select);

GammaSearchResult gamma_search(const EmbeddingSet& set, Metric metric,
                               const WeightVector& weights, std::size_t k,
                               double lambda, std::size_t grid_size);

// 0.1 / k.
double default_lambda(std::size_t k);

}  // namespace duke

#endif  // DUKE_WKCENTER_H_
