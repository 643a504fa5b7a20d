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


#ifndef DUKE_INSTANCES_H_
#define DUKE_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "duke/dataset.h"

namespace duke {

enum class InstanceKind { kFigure1, kClusters, kUniformCube, kLine };
enum class WeightScheme { kUniform, kPerCluster, kCentroidDistance, kRandom };

InstanceKind ParseInstanceKind(std::string_view name);
WeightScheme ParseWeightScheme(std::string_view name);

struct SyntheticSpec {
  InstanceKind kind = InstanceKind::kClusters;
  std::size_t n = 100;
  std::size_t dim = 2;
  std::size_t clusters = 4;
  // Per-coordinate standard deviation of a blob.
  double spread = 1.0;
  std::uint64_t seed = 0;
  WeightScheme weights = WeightScheme::kRandom;
};

struct Instance {
  EmbeddingSet set;
  WeightVector weights;
};

// Fourteen points in the plane, euclidean metric. Two light clusters
// (weight 0.5) of four points each, centered at (0,0) and (20,0): a hub plus
// three points at distance 1 from it. Six heavy points (weight 1), three
// next to each cluster, each exactly 2 from its nearest light point and
// more than 2 from everything else. Indices 0-3 and 4-7 are the clusters
// (hubs at 0 and 4), 8-13 the heavy points.
//
// At k = 8: the best k-center radius is 1 (every heavy point plus both
// hubs, weight 7); at lambda = 1 the best weighted subset is the eight
// light points with radius 2 and weight 4, total 6.
Instance gen_figure1();

// Gaussian blobs (kClusters), the unit cube (kUniformCube) or unit-spaced
// points on a line (kLine, dim forced to 1). Labels hold the cluster id.
Instance gen_clusters(const SyntheticSpec& spec);

// Row-stochastic random class probabilities, for realistic margin weights.
ProbabilityMatrix random_probabilities(std::size_t n, std::size_t classes,
                                       std::uint64_t seed);

}  // namespace duke

#endif  // DUKE_INSTANCES_H_
