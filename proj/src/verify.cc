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


#include "duke/verify.h"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "duke/oracle.h"
#include "duke/parallel.h"
#include "duke/report.h"
#include "duke/wkcenter.h"

namespace duke {
namespace {

constexpr std::size_t kRecordedPerCheck = 2;

double Ratio(double value, double optimum) {
  if (optimum > 0.0) return value / optimum;
  return value > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

bool WithinFactor(double value, double factor, double optimum) {
  return value <= factor * optimum * (1.0 + kRatioSlack) + 1e-12;
}

class Ledger {
 public:
  explicit Ledger(VerifyResult& result) : result_(result) {}

  void Declare(const std::string& name, double bound) {
    index_[name] = result_.checks.size();
    result_.checks.push_back({name, bound, 0, 0, 0.0, {}});
  }

  void Record(const std::string& name, bool pass, double ratio,
              const TrialInstance& trial, double gamma,
              const std::string& detail) {
    CheckSummary& c = result_.checks[index_.at(name)];
    auto it = std::find_if(c.by_metric.begin(), c.by_metric.end(),
                           [&](const MetricTally& m) { return m.metric == trial.metric; });
    if (it == c.by_metric.end()) {
      c.by_metric.push_back({trial.metric, 0, 0, 0.0});
      it = c.by_metric.end() - 1;
    }
    ++c.checked;
    ++it->checked;
    c.worst_ratio = std::max(c.worst_ratio, ratio);
    it->worst_ratio = std::max(it->worst_ratio, ratio);
    if (pass) return;
    ++c.violations;
    ++it->violations;
    if (c.violations <= kRecordedPerCheck) {
      result_.violations.push_back({name, trial, gamma, detail});
    }
  }

 private:
  VerifyResult& result_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

TrialInstance random_trial_instance(std::uint64_t seed, std::size_t trial,
                                    std::size_t n_max, std::size_t k_max) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(trial)};
  std::mt19937_64 rng(seq);
  n_max = std::max<std::size_t>(n_max, 2);
  k_max = std::max<std::size_t>(k_max, 1);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, n_max)(rng);
  const std::size_t k =
      std::uniform_int_distribution<std::size_t>(1, std::min(k_max, n))(rng);
  const std::size_t dim = std::uniform_int_distribution<std::size_t>(2, 3)(rng);

  SyntheticSpec spec;
  spec.n = n;
  spec.dim = dim;
  spec.seed = rng();
  if (trial % 2 == 0) {
    spec.kind = InstanceKind::kUniformCube;
  } else {
    spec.kind = InstanceKind::kClusters;
    spec.clusters = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    spec.spread = 1.5;
  }
  spec.weights = WeightScheme::kRandom;
  Instance inst = gen_clusters(spec);

  if ((trial / 2) % 2 == 0) {
    const std::size_t classes =
        std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    inst.weights = margin_weights(random_probabilities(n, classes, rng()));
  }
  // Center the cube so cosine sees directions in every quadrant.
  if (spec.kind == InstanceKind::kUniformCube) {
    std::vector<double> shifted(inst.set.features().begin(),
                                inst.set.features().end());
    for (double& v : shifted) v = 2.0 * v - 1.0;
    inst.set = EmbeddingSet(dim, std::move(shifted));
  }

  static constexpr double kLambdas[] = {0.0, 0.1, 1.0};
  TrialInstance t{std::move(inst), trial % 4 < 2 ? Metric::kEuclidean
                                                 : Metric::kCosine,
                  k, kLambdas[trial % 3]};
  return t;
}

const MetricTally* CheckSummary::ForMetric(Metric metric) const {
  for (const MetricTally& m : by_metric) {
    if (m.metric == metric) return &m;
  }
  return nullptr;
}

bool VerifyResult::ok() const {
  for (const auto& c : checks) {
    if (c.violations) return false;
  }
  return true;
}

VerifyResult run_verification(const VerifyOptions& options) {
  VerifyResult result;
  Ledger ledger(result);
  ledger.Declare("theorem1-ratio", 3.0);
  ledger.Declare("theorem1-weight", 1.0);
  ledger.Declare("theorem1-radius", 3.0);
  for (double a : options.alphas) {
    ledger.Declare("overestimate-" + FormatNumber(a), 3.0 * a);
  }
  ledger.Declare("gamma-range", 0.0);
  ledger.Declare("gamma-lo", 0.0);
  for (std::size_t m : options.machines) {
    ledger.Declare("theorem2-m" + std::to_string(m), 14.0);
  }
  ledger.Declare("parallel-m1-identity", 0.0);
  ledger.Declare("gonzalez", 2.0);
  ledger.Declare("pq-equivalence", 0.0);
  ledger.Declare("determinism", 0.0);
  ledger.Declare("lambda0-reduction", 0.0);

  for (std::size_t t = 0; t < options.trials; ++t) {
    const TrialInstance trial =
        random_trial_instance(options.seed, t, options.n_max, options.k_max);
    const EmbeddingSet& set = trial.instance.set;
    const WeightVector& w = trial.instance.weights;
    const Metric metric = trial.metric;
    const std::size_t k = trial.k;

    const OracleResult opt = brute_force_weighted(set, metric, w, k, trial.lambda);
    const double gamma_star = opt.radius_term;
    const OracleResult kc = brute_force_kcenter(set, metric, k);

    SelectionConfig config;
    config.k = k;
    config.lambda = trial.lambda;
    config.metric = metric;
    config.gamma = gamma_star;
    const SubsetSolution s = weighted_kcenter(set, metric, w, config);
    ledger.Record("theorem1-ratio", WithinFactor(s.objective, 3.0, opt.objective),
                  Ratio(s.objective, opt.objective), trial, gamma_star,
                  "objective " + FormatNumber(s.objective) + " vs optimum " +
                      FormatNumber(opt.objective));
    ledger.Record("theorem1-weight",
                  WithinFactor(s.weight_term, 1.0, opt.weight_term),
                  Ratio(s.weight_term, opt.weight_term), trial, gamma_star,
                  "weight " + FormatNumber(s.weight_term) + " vs optimum " +
                      FormatNumber(opt.weight_term));
    ledger.Record("theorem1-radius",
                  WithinFactor(s.radius_term, 3.0, gamma_star),
                  Ratio(s.radius_term, gamma_star), trial, gamma_star,
                  "radius " + FormatNumber(s.radius_term) + " vs gamma* " +
                      FormatNumber(gamma_star));

    for (double a : options.alphas) {
      SelectionConfig over = config;
      over.gamma = a * gamma_star;
      const SubsetSolution so = weighted_kcenter(set, metric, w, over);
      ledger.Record("overestimate-" + FormatNumber(a),
                    WithinFactor(so.objective, 3.0 * a, opt.objective),
                    Ratio(so.objective, opt.objective), trial, over.gamma,
                    "objective " + FormatNumber(so.objective));
    }

    const GammaBounds bounds = gamma_bounds(set, metric, w, k);
    const bool in_range = kc.radius_term <= gamma_star * (1.0 + kRatioSlack) &&
                          WithinFactor(gamma_star, 1.0, bounds.hi);
    ledger.Record("gamma-range", in_range, 0.0, trial, gamma_star,
                  "gamma1 " + FormatNumber(kc.radius_term) + " gamma* " +
                      FormatNumber(gamma_star) + " gamma2 " +
                      FormatNumber(bounds.hi));
    // Half the greedy radius lower-bounds gamma1 whenever greedy is a
    // 2-approximation, which needs the triangle inequality.
    ledger.Record("gamma-lo",
                  bounds.lo <= kc.radius_term * (1.0 + kRatioSlack) + 1e-12,
                  0.0, trial, gamma_star,
                  "gamma_lo " + FormatNumber(bounds.lo) + " gamma1 " +
                      FormatNumber(kc.radius_term));

    for (std::size_t m : options.machines) {
      if (m > set.size()) continue;
      const PartitionPlan plan = make_partition(
          set.size(), m, options.seed + t, PartitionStrategy::kRandom);
      const SubsetSolution p =
          parallel_weighted_kcenter(set, metric, w, config, plan);
      ledger.Record("theorem2-m" + std::to_string(m),
                    WithinFactor(p.objective, 14.0, opt.objective),
                    Ratio(p.objective, opt.objective), trial, gamma_star,
                    "objective " + FormatNumber(p.objective));
      if (m == 1) {
        std::vector<PointIndex> a = p.indices, b = s.indices;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        ledger.Record("parallel-m1-identity", a == b, 0.0, trial, gamma_star,
                      "parallel " + FormatIndices(p.indices) + " sequential " +
                          FormatIndices(s.indices));
      }
    }

    const SubsetSolution g = greedy_kcenter(set, metric, k, 0);
    ledger.Record("gonzalez", WithinFactor(g.radius_term, 2.0, kc.radius_term),
                  Ratio(g.radius_term, kc.radius_term), trial, 0.0,
                  "greedy radius " + FormatNumber(g.radius_term) +
                      " vs optimum " + FormatNumber(kc.radius_term));

    const SubsetSolution pq = weighted_kcenter_pq(set, metric, w, nullptr, config,
                                                  NeighborhoodMode::kExactBall);
    ledger.Record("pq-equivalence", pq.indices == s.indices, 0.0, trial,
                  gamma_star,
                  "pq " + FormatIndices(pq.indices) + " reference " +
                      FormatIndices(s.indices));

    const SubsetSolution again = weighted_kcenter(set, metric, w, config);
    ledger.Record("determinism",
                  again.indices == s.indices && again.objective == s.objective,
                  0.0, trial, gamma_star, "repeat run differs");

    const ObjectiveTerms zero =
        weighted_objective(set, metric, w, 0.0, opt.best_subset);
    ledger.Record("lambda0-reduction",
                  zero.objective ==
                      kcenter_cost(set, metric, opt.best_subset),
                  0.0, trial, 0.0, "lambda=0 objective differs from radius");
  }
  return result;
}

}  // namespace duke
