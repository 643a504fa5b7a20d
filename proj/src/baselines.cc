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


#include "duke/baselines.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "duke/error.h"

namespace duke {
namespace {

void CheckBudget(std::size_t k, std::size_t n) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "budget k must be >= 1");
  if (k > n) {
    throw Error(ErrorCode::kBudgetExceedsGroundSet,
                "budget exceeds ground set", k);
  }
}

// Undirected adjacency with the similarity of each edge.
std::vector<std::vector<std::pair<PointIndex, double>>> UndirectedEdges(
    const NeighborGraph& graph, const EdgeSimilarity& similarity) {
  std::vector<std::vector<std::pair<PointIndex, double>>> adj(graph.size());
  for (PointIndex i = 0; i < graph.size(); ++i) {
    for (const Neighbor& nb : graph.neighbors(i)) {
      const auto s = similarity.Get(i, nb.index);
      if (!s) {
        throw Error(ErrorCode::kInvalidArgument,
                    "no similarity for graph edge (" + std::to_string(i) +
                        "," + std::to_string(nb.index) + ")",
                    i);
      }
      adj[i].emplace_back(nb.index, *s);
      adj[nb.index].emplace_back(i, *s);
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end(),
                           [](const auto& a, const auto& b) {
                             return a.first == b.first;
                           }),
               list.end());
  }
  return adj;
}

}  // namespace

std::string_view BaselineName(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kRandom:
      return "random";
    case BaselineKind::kMargin:
      return "margin";
    case BaselineKind::kSubmodular:
      return "submodular";
    case BaselineKind::kGreedyKCenter:
      return "greedy-kcenter";
  }
  return "unknown";
}

std::vector<PointIndex> random_select(std::size_t n, std::size_t k,
                                      std::uint64_t seed) {
  CheckBudget(k, n);
  std::vector<PointIndex> pool(n);
  std::iota(pool.begin(), pool.end(), PointIndex{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

std::vector<PointIndex> margin_select(const WeightVector& weights,
                                      std::size_t k) {
  CheckBudget(k, weights.size());
  std::vector<PointIndex> order(weights.size());
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](PointIndex a, PointIndex b) {
                      return weights[a] < weights[b] ||
                             (weights[a] == weights[b] && a < b);
                    });
  order.resize(k);
  return order;
}

std::uint64_t EdgeSimilarity::Key(PointIndex a, PointIndex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

void EdgeSimilarity::Set(PointIndex a, PointIndex b, double similarity) {
  values_[Key(a, b)] = similarity;
}

std::optional<double> EdgeSimilarity::Get(PointIndex a, PointIndex b) const {
  auto it = values_.find(Key(a, b));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

EdgeSimilarity EdgeSimilarity::FromDistances(const NeighborGraph& graph) {
  EdgeSimilarity sims;
  for (PointIndex i = 0; i < graph.size(); ++i) {
    for (const Neighbor& nb : graph.neighbors(i)) {
      sims.Set(i, nb.index, 1.0 - nb.distance / 2.0);
    }
  }
  return sims;
}

std::vector<double> uncertainty_utilities(const WeightVector& weights) {
  std::vector<double> u(weights.size());
  for (PointIndex i = 0; i < weights.size(); ++i) u[i] = 1.0 - weights[i];
  return u;
}

double submodular_value(const NeighborGraph& graph,
                        std::span<const double> utilities,
                        const EdgeSimilarity& similarity, double lambda_s,
                        std::span<const PointIndex> subset) {
  const auto adj = UndirectedEdges(graph, similarity);
  std::vector<char> in(graph.size(), 0);
  for (PointIndex i : subset) in.at(i) = 1;
  double value = 0.0;
  for (PointIndex i : subset) value += utilities[i];
  double penalty = 0.0;
  for (PointIndex i = 0; i < graph.size(); ++i) {
    if (!in[i]) continue;
    for (const auto& [j, s] : adj[i]) {
      if (j > i && in[j]) penalty += s;
    }
  }
  return value - lambda_s * penalty;
}

SubmodularSelection submodular_greedy(const NeighborGraph& graph,
                                      std::span<const double> utilities,
                                      const EdgeSimilarity& similarity,
                                      double lambda_s, std::size_t k) {
  const std::size_t n = graph.size();
  CheckBudget(k, n);
  if (utilities.size() != n) {
    throw Error(ErrorCode::kSizeMismatch, "utility vector size mismatch",
                utilities.size());
  }
  if (!(lambda_s >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda_s must be >= 0");
  }
  const auto adj = UndirectedEdges(graph, similarity);
  std::vector<double> gain(utilities.begin(), utilities.end());
  std::vector<char> selected(n, 0);
  SubmodularSelection out;
  for (std::size_t step = 0; step < k; ++step) {
    PointIndex best = n;
    for (PointIndex i = 0; i < n; ++i) {
      if (!selected[i] && (best == n || gain[i] > gain[best])) best = i;
    }
    selected[best] = 1;
    out.indices.push_back(best);
    out.gains.push_back(gain[best]);
    out.value += gain[best];
    for (const auto& [j, s] : adj[best]) {
      if (!selected[j]) gain[j] -= lambda_s * s;
    }
  }
  return out;
}

}  // namespace duke
