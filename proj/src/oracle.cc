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


#include "duke/oracle.h"

#include <algorithm>
#include <limits>

#include "duke/error.h"

namespace duke {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Lexicographic depth-first enumeration. nearest_[d] holds each point's
// distance to the first d chosen centers.
class Enumerator {
 public:
  Enumerator(const EmbeddingSet& set, Metric metric,
             const WeightVector& weights, std::size_t k, double lambda)
      : space_(set, metric),
        weights_(weights),
        n_(set.size()),
        k_(k),
        lambda_(lambda),
        nearest_(k + 1, std::vector<double>(set.size(), kInfinity)),
        current_(k) {
    if (n_ <= kMatrixLimit) {
      matrix_.resize(n_ * n_);
      for (PointIndex i = 0; i < n_; ++i) {
        for (PointIndex j = 0; j < n_; ++j) matrix_[i * n_ + j] = space_(i, j);
      }
    }
  }

  OracleResult Run() {
    Visit(0, 0, 0.0);
    return best_;
  }

 private:
  static constexpr std::size_t kMatrixLimit = 2048;

  double Dist(PointIndex a, PointIndex b) const {
    return matrix_.empty() ? space_(a, b) : matrix_[a * n_ + b];
  }

  void Visit(std::size_t depth, PointIndex start, double weight) {
    if (depth == k_) {
      const auto& nearest = nearest_[k_];
      const double radius = *std::max_element(nearest.begin(), nearest.end());
      const double objective = radius + lambda_ * weight;
      ++best_.enumerated;
      if (!have_best_ || objective < best_.objective) {
        have_best_ = true;
        best_.objective = objective;
        best_.radius_term = radius;
        best_.weight_term = weight;
        best_.best_subset = current_;
      }
      return;
    }
    const std::size_t slots = k_ - depth;
    for (PointIndex c = start; c + slots <= n_; ++c) {
      const double w = weight + weights_[c];
      // Radius is nonnegative, so this branch cannot beat the incumbent.
      if (have_best_ && lambda_ * w >= best_.objective) {
        best_.enumerated += binomial(n_ - c - 1, slots - 1);
        continue;
      }
      current_[depth] = c;
      const auto& prev = nearest_[depth];
      auto& next = nearest_[depth + 1];
      for (PointIndex i = 0; i < n_; ++i) {
        next[i] = std::min(prev[i], Dist(c, i));
      }
      Visit(depth + 1, c + 1, w);
    }
  }

  MetricSpace space_;
  const WeightVector& weights_;
  std::size_t n_;
  std::size_t k_;
  double lambda_;
  std::vector<double> matrix_;
  std::vector<std::vector<double>> nearest_;
  std::vector<PointIndex> current_;
  OracleResult best_;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

OracleResult brute_force_weighted(const EmbeddingSet& set, Metric metric,
                                  const WeightVector& weights, std::size_t k,
                                  double lambda, std::uint64_t cap) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "budget k must be >= 1");
  if (k > set.size()) {
    throw Error(ErrorCode::kBudgetExceedsGroundSet,
                "budget exceeds ground set", k);
  }
  if (weights.size() != set.size()) {
    throw Error(ErrorCode::kSizeMismatch, "weight vector size mismatch",
                weights.size());
  }
  if (!(lambda >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be >= 0");
  }
  const std::uint64_t subsets = binomial(set.size(), k);
  if (subsets > cap) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "C(" + std::to_string(set.size()) + "," + std::to_string(k) +
                    ") = " + std::to_string(subsets) + " exceeds cap " +
                    std::to_string(cap),
                subsets);
  }
  return Enumerator(set, metric, weights, k, lambda).Run();
}

OracleResult brute_force_kcenter(const EmbeddingSet& set, Metric metric,
                                 std::size_t k, std::uint64_t cap) {
  const WeightVector zeros(std::vector<double>(set.size(), 0.0));
  return brute_force_weighted(set, metric, zeros, k, 0.0, cap);
}

double optimal_gamma(const EmbeddingSet& set, Metric metric,
                     const WeightVector& weights, std::size_t k, double lambda,
                     std::uint64_t cap) {
  return brute_force_weighted(set, metric, weights, k, lambda, cap)
      .radius_term;
}

}  // namespace duke
