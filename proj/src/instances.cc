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


#include "duke/instances.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "duke/error.h"

namespace duke {

InstanceKind ParseInstanceKind(std::string_view name) {
  if (name == "figure1") return InstanceKind::kFigure1;
  if (name == "clusters") return InstanceKind::kClusters;
  if (name == "uniform-cube") return InstanceKind::kUniformCube;
  if (name == "line") return InstanceKind::kLine;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown instance kind '" + std::string(name) + "'");
}

WeightScheme ParseWeightScheme(std::string_view name) {
  if (name == "uniform") return WeightScheme::kUniform;
  if (name == "per-cluster") return WeightScheme::kPerCluster;
  if (name == "centroid-distance") return WeightScheme::kCentroidDistance;
  if (name == "random") return WeightScheme::kRandom;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown weight scheme '" + std::string(name) + "'");
}

Instance gen_figure1() {
  // clang-format off
  std::vector<double> features = {
      // light cluster A
       0,  0,    1,  0,   -1,  0,    0,  1,
      // light cluster B
      20,  0,   21,  0,   19,  0,   20,  1,
      // heavy points near A
       0, -2,   -3,  0,    0,  3,
      // heavy points near B
      20, -2,   23,  0,   20,  3,
  };
  // clang-format on
  std::vector<double> weights(14, 1.0);
  std::fill(weights.begin(), weights.begin() + 8, 0.5);
  std::vector<int> labels = {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
  return {EmbeddingSet(2, std::move(features), std::move(labels)),
          WeightVector(std::move(weights))};
}

Instance gen_clusters(const SyntheticSpec& spec) {
  if (spec.kind == InstanceKind::kFigure1) return gen_figure1();
  if (spec.n == 0 || spec.dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n and dim must be >= 1");
  }
  if (!(spec.spread >= 0.0) || !std::isfinite(spec.spread)) {
    throw Error(ErrorCode::kInvalidArgument, "spread must be finite and >= 0");
  }
  const std::size_t dim = spec.kind == InstanceKind::kLine ? 1 : spec.dim;
  const std::size_t clusters =
      spec.kind == InstanceKind::kClusters ? spec.clusters : 1;
  if (clusters == 0) {
    throw Error(ErrorCode::kInvalidArgument, "cluster count must be >= 1");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> centroids(clusters * dim, 0.5);
  if (spec.kind == InstanceKind::kClusters) {
    std::uniform_real_distribution<double> box(-10.0, 10.0);
    for (double& c : centroids) c = box(rng);
  } else if (spec.kind == InstanceKind::kLine) {
    centroids[0] = (static_cast<double>(spec.n) - 1.0) / 2.0;
  }

  std::vector<double> features(spec.n * dim);
  std::vector<int> labels(spec.n);
  std::vector<double> offset(spec.n, 0.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const std::size_t c = i % clusters;
    labels[i] = static_cast<int>(c);
    double sq = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      double v = 0.0;
      switch (spec.kind) {
        case InstanceKind::kClusters:
          v = centroids[c * dim + d] + spec.spread * noise(rng);
          break;
        case InstanceKind::kUniformCube:
          v = unit(rng);
          break;
        case InstanceKind::kLine:
          v = static_cast<double>(i);
          break;
        case InstanceKind::kFigure1:
          break;
      }
      features[i * dim + d] = v;
      const double t = v - centroids[c * dim + d];
      sq += t * t;
    }
    offset[i] = std::sqrt(sq);
  }

  std::vector<double> weights(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    switch (spec.weights) {
      case WeightScheme::kUniform:
        weights[i] = 0.5;
        break;
      case WeightScheme::kPerCluster:
        weights[i] = static_cast<double>(labels[i] + 1) /
                     static_cast<double>(clusters + 1);
        break;
      case WeightScheme::kCentroidDistance: {
        // Points near their centroid are the confident ones.
        const double scale = spec.spread > 0.0 ? spec.spread : 1.0;
        weights[i] = 1.0 / (1.0 + offset[i] / scale);
        break;
      }
      case WeightScheme::kRandom:
        weights[i] = unit(rng);
        break;
    }
  }
  return {EmbeddingSet(dim, std::move(features), std::move(labels)),
          WeightVector(std::move(weights))};
}

ProbabilityMatrix random_probabilities(std::size_t n, std::size_t classes,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> values(n * classes);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t c = 0; c < classes; ++c) {
      values[i * classes + c] = draw(rng);
      sum += values[i * classes + c];
    }
    for (std::size_t c = 0; c < classes; ++c) values[i * classes + c] /= sum;
  }
  return ProbabilityMatrix(classes, std::move(values));
}

}  // namespace duke
