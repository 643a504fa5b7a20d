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


#include "duke/wkcenter.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "duke/error.h"

namespace duke {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kGammaFloor = 1e-12;

void CheckBudget(std::size_t k, std::size_t n) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "budget k must be >= 1");
  if (k > n) {
    throw Error(ErrorCode::kBudgetExceedsGroundSet,
                "budget k=" + std::to_string(k) + " exceeds ground set of " +
                    std::to_string(n),
                k);
  }
}

void CheckWeights(const EmbeddingSet& set, const WeightVector& weights) {
  if (weights.size() != set.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "weight vector has " + std::to_string(weights.size()) +
                    " entries for " + std::to_string(set.size()) + " points",
                weights.size());
  }
}

// (weight, index) ordering: lighter first, lower index on ties.
bool Lighter(const WeightVector& w, PointIndex a, PointIndex b) {
  return w[a] < w[b] || (w[a] == w[b] && a < b);
}

std::vector<PointIndex> ByWeight(const WeightVector& weights) {
  std::vector<PointIndex> order(weights.size());
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
    return Lighter(weights, a, b);
  });
  return order;
}

// Lightest unselected point within `radius` of `center`.
PointIndex LightestInBall(const MetricSpace& space, const WeightVector& weights,
                          const std::vector<char>& selected, PointIndex center,
                          double radius) {
  PointIndex best = center;
  bool found = false;
  for (PointIndex i = 0; i < space.size(); ++i) {
    if (selected[i] || space(center, i) > radius) continue;
    if (!found || weights[i] < weights[best]) {
      best = i;
      found = true;
    }
  }
  return best;
}

// Binary min-heap on (weight, index) with lazy removal.
class WeightQueue {
 public:
  explicit WeightQueue(const WeightVector& weights)
      : weights_(&weights), removed_(weights.size(), 1) {}

  void Add(PointIndex i) {
    removed_[i] = 0;
    heap_.push({(*weights_)[i], i});
  }
  void Remove(PointIndex i) { removed_[i] = 1; }

  bool Empty() {
    while (!heap_.empty() && removed_[heap_.top().second]) heap_.pop();
    return heap_.empty();
  }

  // Requires !Empty().
  PointIndex Pop() {
    const PointIndex i = heap_.top().second;
    heap_.pop();
    removed_[i] = 1;
    return i;
  }

 private:
  using Entry = std::pair<double, PointIndex>;
  const WeightVector* weights_;
  std::vector<char> removed_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

// Summed in ascending index order so that a set scores the same however its
// members are listed.
double WeightSum(const WeightVector& weights,
                 std::span<const PointIndex> centers) {
  std::vector<PointIndex> sorted(centers.begin(), centers.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (PointIndex c : sorted) sum += weights[c];
  return sum;
}

}  // namespace

void SelectionConfig::Validate(std::size_t n) const {
  CheckBudget(k, n);
  if (!(lambda >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be >= 0");
  }
  if (!(gamma >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "gamma must be >= 0");
  }
}

double kcenter_cost(const EmbeddingSet& set, Metric metric,
                    std::span<const PointIndex> centers) {
  if (centers.empty()) {
    throw Error(ErrorCode::kEmptyCenters, "center set is empty");
  }
  for (PointIndex c : centers) {
    if (c >= set.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "center index out of range", c);
    }
  }
  const MetricSpace space(set, metric);
  std::vector<double> nearest(set.size(), kInfinity);
  for (PointIndex c : centers) {
    for (PointIndex i = 0; i < set.size(); ++i) {
      nearest[i] = std::min(nearest[i], space(c, i));
    }
  }
  return *std::max_element(nearest.begin(), nearest.end());
}

ObjectiveTerms weighted_objective(const EmbeddingSet& set, Metric metric,
                                  const WeightVector& weights, double lambda,
                                  std::span<const PointIndex> centers) {
  CheckWeights(set, weights);
  ObjectiveTerms terms;
  terms.radius_term = kcenter_cost(set, metric, centers);
  terms.weight_term = WeightSum(weights, centers);
  terms.objective = terms.radius_term + lambda * terms.weight_term;
  return terms;
}

SubsetSolution make_solution(const EmbeddingSet& set, Metric metric,
                             const WeightVector& weights, double lambda,
                             std::vector<PointIndex> indices,
                             std::string algorithm, double gamma_used) {
  const ObjectiveTerms terms =
      weighted_objective(set, metric, weights, lambda, indices);
  SubsetSolution s;
  s.indices = std::move(indices);
  s.radius_term = terms.radius_term;
  s.weight_term = terms.weight_term;
  s.objective = terms.objective;
  s.algorithm = std::move(algorithm);
  s.gamma_used = gamma_used;
  s.lambda = lambda;
  return s;
}

SubsetSolution greedy_kcenter(const EmbeddingSet& set, Metric metric,
                              std::size_t k, PointIndex start) {
  CheckBudget(k, set.size());
  if (start >= set.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "start index out of range", start);
  }
  const MetricSpace space(set, metric);
  const std::size_t n = set.size();
  std::vector<double> nearest(n, kInfinity);
  SubsetSolution s;
  s.algorithm = "greedy-kcenter";
  s.indices.reserve(k);

  std::vector<char> selected(n, 0);
  PointIndex next = start;
  while (true) {
    s.indices.push_back(next);
    selected[next] = 1;
    // Farthest unselected point; duplicates of selected points sit at
    // distance 0 and are still eligible.
    PointIndex farthest = n;
    double radius = 0.0;
    for (PointIndex i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], space(next, i));
      radius = std::max(radius, nearest[i]);
      if (!selected[i] && (farthest == n || nearest[i] > nearest[farthest])) {
        farthest = i;
      }
    }
    if (s.indices.size() == k) {
      s.radius_term = radius;
      break;
    }
    next = farthest;
  }
  s.objective = s.radius_term;
  return s;
}

SubsetSolution weighted_kcenter(const EmbeddingSet& set, Metric metric,
                                const WeightVector& weights,
                                const SelectionConfig& config) {
  const std::size_t n = set.size();
  config.Validate(n);
  CheckWeights(set, weights);
  const MetricSpace space(set, metric);
  const double gamma = config.gamma;
  const double far = 3.0 * gamma;

  const std::vector<PointIndex> order = ByWeight(weights);
  std::size_t cursor = 0;
  std::vector<char> selected(n, 0);
  std::vector<double> nearest(n, kInfinity);
  std::vector<PointIndex> chosen;
  chosen.reserve(config.k);

  auto add = [&](PointIndex c) {
    selected[c] = 1;
    chosen.push_back(c);
    for (PointIndex i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], space(c, i));
    }
  };

  add(order[0]);
  while (chosen.size() < config.k) {
    // Lightest point strictly farther than 3*gamma from the selection.
    PointIndex candidate = n;
    for (PointIndex i = 0; i < n; ++i) {
      if (nearest[i] > far &&
          (candidate == n || weights[i] < weights[candidate])) {
        candidate = i;
      }
    }
    if (candidate == n) {
      while (selected[order[cursor]]) ++cursor;
      add(order[cursor]);
    } else {
      add(LightestInBall(space, weights, selected, candidate, gamma));
    }
  }

  SubsetSolution s;
  s.indices = std::move(chosen);
  s.radius_term = *std::max_element(nearest.begin(), nearest.end());
  s.weight_term = WeightSum(weights, s.indices);
  s.objective = s.radius_term + config.lambda * s.weight_term;
  s.algorithm = "duke";
  s.gamma_used = gamma;
  s.lambda = config.lambda;
  return s;
}

NeighborhoodMode ParseNeighborhoodMode(std::string_view name) {
  if (name == "exact-ball") return NeighborhoodMode::kExactBall;
  if (name == "knn-graph") return NeighborhoodMode::kKnnGraph;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown neighborhood mode '" + std::string(name) + "'");
}

SubsetSolution weighted_kcenter_pq(const EmbeddingSet& set, Metric metric,
                                   const WeightVector& weights,
                                   const NeighborGraph* graph,
                                   const SelectionConfig& config,
                                   NeighborhoodMode mode) {
  const std::size_t n = set.size();
  config.Validate(n);
  CheckWeights(set, weights);
  if (graph != nullptr && graph->size() != n) {
    throw Error(ErrorCode::kGraphMismatch,
                "graph has " + std::to_string(graph->size()) +
                    " nodes for a set of " + std::to_string(n),
                graph->size());
  }
  if (mode == NeighborhoodMode::kKnnGraph && graph == nullptr) {
    throw Error(ErrorCode::kGraphMismatch,
                "knn-graph mode needs a neighbor graph");
  }
  const MetricSpace space(set, metric);
  const double gamma = config.gamma;
  const double far = 3.0 * gamma;

  std::vector<char> selected(n, 0);
  std::vector<PointIndex> chosen;
  chosen.reserve(config.k);
  WeightQueue queue(weights);
  for (PointIndex v = 0; v < n; ++v) queue.Add(v);

  auto remove_neighborhood = [&](PointIndex c) {
    if (mode == NeighborhoodMode::kExactBall) {
      for (PointIndex i = 0; i < n; ++i) {
        if (space(c, i) <= far) queue.Remove(i);
      }
    } else {
      for (const Neighbor& nb : graph->neighbors(c)) queue.Remove(nb.index);
    }
  };
  auto add = [&](PointIndex c) {
    selected[c] = 1;
    chosen.push_back(c);
    queue.Remove(c);
    remove_neighborhood(c);
  };

  add(queue.Pop());
  while (chosen.size() < config.k && !queue.Empty()) {
    const PointIndex c = queue.Pop();
    add(LightestInBall(space, weights, selected, c, gamma));
  }
  if (chosen.size() < config.k) {
    WeightQueue refill(weights);
    for (PointIndex v = 0; v < n; ++v) {
      if (!selected[v]) refill.Add(v);
    }
    while (chosen.size() < config.k) {
      const PointIndex c = refill.Pop();
      selected[c] = 1;
      chosen.push_back(c);
    }
  }

  SubsetSolution s = make_solution(set, metric, weights, config.lambda,
                                   std::move(chosen), "duke-pq", gamma);
  return s;
}

GammaBounds gamma_bounds(const EmbeddingSet& set, Metric metric,
                         const WeightVector& weights, std::size_t k) {
  CheckBudget(k, set.size());
  CheckWeights(set, weights);
  std::vector<PointIndex> lightest = ByWeight(weights);
  lightest.resize(k);
  GammaBounds b;
  b.hi = kcenter_cost(set, metric, lightest);
  // Greedy is within 2*rho of the optimal radius when d(a, c) <=
  // rho * (d(a, b) + d(b, c)). rho = 1 for true metrics; cosine distance is
  // half a squared chord length, so rho = 2.
  const double rho = metric == Metric::kCosine ? 2.0 : 1.0;
  b.lo = greedy_kcenter(set, metric, k, 0).radius_term / (2.0 * rho);
  return b;
}

std::vector<double> gamma_grid(const GammaBounds& bounds, std::size_t size) {
  if (size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "gamma grid size must be >= 1");
  }
  const double lo = std::max(bounds.lo, kGammaFloor);
  const double hi = std::max(bounds.hi, lo);
  if (size == 1) return {(lo + hi) / 2.0};
  std::vector<double> grid(size);
  const double ratio = hi / lo;
  for (std::size_t i = 0; i < size; ++i) {
    grid[i] = lo * std::pow(ratio, static_cast<double>(i) / (size - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

GammaSearchResult gamma_search(
    std::span<const double> grid,
    const std::function<SubsetSolution(double gamma)>& select) {
  if (grid.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "gamma grid is empty");
  }
  GammaSearchResult result;
  bool have_best = false;
  for (double gamma : grid) {
    SubsetSolution s = select(gamma);
    result.trace.push_back({gamma, s.objective});
    if (!have_best || s.objective < result.best.objective) {
      result.best = std::move(s);
      have_best = true;
    }
  }
  return result;
}

GammaSearchResult gamma_search(const EmbeddingSet& set, Metric metric,
                               const WeightVector& weights, std::size_t k,
                               double lambda, std::size_t grid_size) {
  const std::vector<double> grid =
      gamma_grid(gamma_bounds(set, metric, weights, k), grid_size);
  SelectionConfig config;
  config.k = k;
  config.lambda = lambda;
  config.metric = metric;
  return gamma_search(grid, [&](double gamma) {
    config.gamma = gamma;
    return weighted_kcenter(set, metric, weights, config);
  });
}

double default_lambda(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  return 0.1 / static_cast<double>(k);
}

}  // namespace duke
