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


#ifndef DUKE_BASELINES_H_
#define DUKE_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "duke/dataset.h"
#include "duke/nngraph.h"

namespace duke {

enum class BaselineKind { kRandom, kMargin, kSubmodular, kGreedyKCenter };

std::string_view BaselineName(BaselineKind kind);

inline constexpr double kDefaultLambdaS = 0.9;

// k distinct indices drawn uniformly without replacement, in draw order.
std::vector<PointIndex> random_select(std::size_t n, std::size_t k,
                                      std::uint64_t seed);

// The k lightest points, ascending by (weight, index).
std::vector<PointIndex> margin_select(const WeightVector& weights,
                                      std::size_t k);

// Similarity values on undirected graph edges.
class EdgeSimilarity {
 public:
  void Set(PointIndex a, PointIndex b, double similarity);
  std::optional<double> Get(PointIndex a, PointIndex b) const;
  std::size_t size() const { return values_.size(); }

  // s(i, j) = 1 - d(i, j) / 2 on every graph edge; lands in [0, 1] for
  // cosine distance.
  static EdgeSimilarity FromDistances(const NeighborGraph& graph);

 private:
  static std::uint64_t Key(PointIndex a, PointIndex b);
  std::unordered_map<std::uint64_t, double> values_;
};

// utility(i) = 1 - w(i).
std::vector<double> uncertainty_utilities(const WeightVector& weights);

// sum of utilities over S minus lambda_s times the similarity of every
// undirected graph edge with both ends in S.
double submodular_value(const NeighborGraph& graph,
                        std::span<const double> utilities,
                        const EdgeSimilarity& similarity, double lambda_s,
                        std::span<const PointIndex> subset);

struct SubmodularSelection {
  std::vector<PointIndex> indices;
  // Marginal gain of each pick, in selection order.
  std::vector<double> gains;
  double value = 0.0;
};

// Plain greedy on submodular_value: each step adds the point with the
// largest marginal gain, lowest index on ties.
SubmodularSelection submodular_greedy(const NeighborGraph& graph,
                                      std::span<const double> utilities,
                                      const EdgeSimilarity& similarity,
                                      double lambda_s, std::size_t k);

}  // namespace duke

#endif  // DUKE_BASELINES_H_
