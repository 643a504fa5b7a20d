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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "duke/baselines.h"
#include "duke/error.h"
#include "duke/nngraph.h"
#include "test_support.h"

namespace duke {
namespace {

TEST_CASE("random selection") {
  std::vector<PointIndex> all = random_select(6, 6, 3);
  std::sort(all.begin(), all.end());
  CHECK(all == std::vector<PointIndex>{0, 1, 2, 3, 4, 5});
  CHECK(random_select(100, 10, 9) == random_select(100, 10, 9));
  CHECK(random_select(100, 10, 9) != random_select(100, 10, 10));
  const std::vector<PointIndex> some = random_select(50, 20, 1);
  CHECK(std::set<PointIndex>(some.begin(), some.end()).size() == 20);
  try {
    random_select(3, 4, 0);
    FAIL("expected BudgetExceedsGroundSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceedsGroundSet);
  }
}

TEST_CASE("random selection is uniform") {
  std::vector<int> hits(10, 0);
  constexpr int kTrials = 10000;
  for (int t = 0; t < kTrials; ++t) ++hits[random_select(10, 1, t)[0]];
  for (int h : hits) {
    CHECK(static_cast<double>(h) / kTrials == doctest::Approx(0.1).epsilon(0.1));
  }
}

TEST_CASE("margin selection") {
  const WeightVector w({0.9, 0.1, 0.5});
  CHECK(margin_select(w, 1) == std::vector<PointIndex>{1});
  CHECK(margin_select(w, 2) == std::vector<PointIndex>{1, 2});
  CHECK(margin_select(WeightVector({0.4, 0.4, 0.4}), 2) ==
        std::vector<PointIndex>{0, 1});
  CHECK_THROWS_AS(margin_select(w, 4), Error);
}

TEST_CASE("margin selection minimizes the weight sum") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t k = 1 + rng() % n;
    std::vector<double> raw(n);
    for (double& v : raw) v = static_cast<double>(rng() % 4) / 4.0;
    const WeightVector w(raw);
    const std::vector<PointIndex> picked = margin_select(w, k);
    double sum = 0.0;
    for (PointIndex i : picked) sum += w[i];
    std::vector<char> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    double best = 1e300;
    do {
      double s = 0.0;
      for (PointIndex i = 0; i < n; ++i) {
        if (mask[i]) s += w[i];
      }
      best = std::min(best, s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    CHECK(sum == doctest::Approx(best));
  }
}

TEST_CASE("edge similarity") {
  EdgeSimilarity s;
  s.Set(3, 1, 0.25);
  CHECK(s.Get(1, 3) == 0.25);
  CHECK(s.Get(3, 1) == 0.25);
  CHECK_FALSE(s.Get(1, 2).has_value());
  const NeighborGraph g = build_knn_graph(testing::Line({0, 1, 5}), 1, Metric::kEuclidean);
  const EdgeSimilarity d = EdgeSimilarity::FromDistances(g);
  CHECK(d.size() == 2);
  CHECK(d.Get(0, 1) == 0.5);
  CHECK(d.Get(2, 1) == -1.0);
  const std::vector<double> u = uncertainty_utilities(WeightVector({0.25, 1.0}));
  CHECK(u == std::vector<double>{0.75, 0.0});
}

TEST_CASE("submodular greedy without penalty picks top utilities") {
  const NeighborGraph g = build_knn_graph(testing::Line({0, 1, 2, 3}), 2,
                                          Metric::kEuclidean);
  const EdgeSimilarity s = EdgeSimilarity::FromDistances(g);
  const std::vector<double> u = {0.2, 0.9, 0.5, 0.9};
  const SubmodularSelection r = submodular_greedy(g, u, s, 0.0, 3);
  CHECK(r.indices == std::vector<PointIndex>{1, 3, 2});
  CHECK(r.value == doctest::Approx(2.3));
  CHECK_THROWS_AS(submodular_greedy(g, u, s, 0.0, 5), Error);
  CHECK_THROWS_AS(submodular_greedy(g, u, s, -1.0, 2), Error);
}

TEST_CASE("redundant copies are penalized") {
  // Points 0 and 1 coincide; point 2 is far away and less useful.
  const EmbeddingSet set(2, {1, 0, 1, 0, 0, 1});
  const NeighborGraph g = build_knn_graph(set, 2, Metric::kCosine);
  const EdgeSimilarity s = EdgeSimilarity::FromDistances(g);
  CHECK(s.Get(0, 1) == 1.0);
  const std::vector<double> u = {0.9, 0.9, 0.5};
  const SubmodularSelection r = submodular_greedy(g, u, s, 5.0, 2);
  CHECK(r.indices == std::vector<PointIndex>{0, 2});
}

double Value(const NeighborGraph& g, const std::vector<double>& u,
             const EdgeSimilarity& s, double lambda_s,
             const std::vector<PointIndex>& subset) {
  return submodular_value(g, u, s, lambda_s, subset);
}

TEST_CASE("greedy against enumeration on random instances") {
  std::mt19937_64 rng(67);
  int monotone = 0;
  int gap = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 10;
    const std::size_t k = 3;
    const EmbeddingSet set = testing::RandomSet(rng, n, 4);
    const NeighborGraph g = build_knn_graph(set, 4, Metric::kCosine);
    const EdgeSimilarity s = EdgeSimilarity::FromDistances(g);
    std::vector<double> u = uncertainty_utilities(testing::RandomWeights(rng, n));
    double lambda_s = trial % 2 ? kDefaultLambdaS : 0.3;
    if (trial % 4 == 0) {
      // Utilities >= 0.5 against a penalty of at most 0.2 per added point:
      // monotone by construction.
      for (double& v : u) v = 0.5 + v / 2;
      lambda_s = 0.1;
    }
    const SubmodularSelection r = submodular_greedy(g, u, s, lambda_s, k);
    CHECK(r.value == doctest::Approx(Value(g, u, s, lambda_s, r.indices)));

    // Gains are non-increasing: the penalty has non-negative pairwise terms,
    // so the objective is submodular here.
    for (std::size_t i = 1; i < r.gains.size(); ++i) {
      CHECK(r.gains[i] <= r.gains[i - 1] + 1e-12);
    }

    std::vector<char> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    double best = -1e300;
    std::size_t subsets = 0;
    do {
      std::vector<PointIndex> subset;
      for (PointIndex i = 0; i < n; ++i) {
        if (mask[i]) subset.push_back(i);
      }
      best = std::max(best, Value(g, u, s, lambda_s, subset));
      ++subsets;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    CHECK(subsets == 120);
    CHECK(r.value <= best + 1e-12);

    // Monotone on this instance when adding any point to any set of size
    // < k never lowers the value.
    bool is_monotone = true;
    for (PointIndex a = 0; a < n && is_monotone; ++a) {
      for (PointIndex b = 0; b < n && is_monotone; ++b) {
        for (PointIndex c = 0; c < n; ++c) {
          std::vector<PointIndex> base = {a, b};
          if (a == b || c == a || c == b) continue;
          std::vector<PointIndex> more = {a, b, c};
          if (Value(g, u, s, lambda_s, more) < Value(g, u, s, lambda_s, base) - 1e-12) {
            is_monotone = false;
            break;
          }
        }
      }
    }
    if (is_monotone && best > 0) {
      ++monotone;
      CHECK(r.value >= (1.0 - 1.0 / std::exp(1.0)) * best - 1e-12);
    } else if (r.value < best) {
      ++gap;
    }
  }
  MESSAGE(monotone << " of 40 instances monotone; greedy below the optimum on "
                   << gap << " non-monotone instances");
  CHECK(monotone >= 10);
}

}  // namespace
}  // namespace duke
