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


#ifndef DUKE_VERIFY_H_
#define DUKE_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "duke/dataset.h"
#include "duke/instances.h"

namespace duke {

// A small random instance for oracle comparisons.
struct TrialInstance {
  Instance instance;
  Metric metric = Metric::kEuclidean;
  std::size_t k = 1;
  double lambda = 0.0;
};

// Trial `trial` of a seeded stream: 2 <= n <= n_max, 1 <= k <= min(k_max, n),
// lambda cycling through {0, 0.1, 1} and the metric alternating between
// euclidean and cosine. Half the trials take margin weights from random
// class probabilities, the rest uniform random weights.
TrialInstance random_trial_instance(std::uint64_t seed, std::size_t trial,
                                    std::size_t n_max, std::size_t k_max);

struct VerifyOptions {
  std::size_t trials = 200;
  std::size_t n_max = 14;
  std::size_t k_max = 6;
  std::uint64_t seed = 1;
  std::vector<std::size_t> machines = {1, 2, 3};
  std::vector<double> alphas = {1.5, 2.0};
};

struct MetricTally {
  Metric metric = Metric::kEuclidean;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;
};

struct CheckSummary {
  std::string name;
  // Ratio bound the check enforces, 0 for pass/fail checks.
  double bound = 0.0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;
  // The same counts split by metric, in first-seen order.
  std::vector<MetricTally> by_metric;

  const MetricTally* ForMetric(Metric metric) const;
};

struct Violation {
  std::string check;
  TrialInstance trial;
  double gamma = 0.0;
  std::string detail;
};

struct VerifyResult {
  std::vector<CheckSummary> checks;
  // The first few of each check, for replay.
  std::vector<Violation> violations;

  bool ok() const;
};

// Relative slack for floating-point comparisons against ratio bounds.
inline constexpr double kRatioSlack = 1e-9;

VerifyResult run_verification(const VerifyOptions& options);

}  // namespace duke

#endif  // DUKE_VERIFY_H_
