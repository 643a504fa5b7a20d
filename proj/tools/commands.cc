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


#include "commands.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "duke/dataset.h"
#include "duke/error.h"
#include "duke/nngraph.h"
#include "duke/parallel.h"
#include "duke/wkcenter.h"

namespace duke::cli {
namespace {

using Clock = std::chrono::steady_clock;

double Millis(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

struct LoadedData {
  EmbeddingSet set;
  WeightVector weights;
};

LoadedData Load(const DataArgs& args) {
  if (args.embeddings.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--embeddings is required");
  }
  if (args.probs.empty() == args.weights.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "exactly one of --probs or --weights is required");
  }
  LoadOptions options;
  options.format = ParseFileFormat(args.format);
  options.dim = args.dim;
  options.header = args.header;
  EmbeddingSet set = load_embeddings(args.embeddings, options);
  WeightVector weights;
  if (!args.probs.empty()) {
    LoadOptions prob_options = options;
    prob_options.dim = 0;
    if (options.format == FileFormat::kRawFloat32) {
      throw Error(ErrorCode::kInvalidArgument,
                  "raw-float32 probabilities need their own class count; use "
                  "CSV probabilities");
    }
    weights = margin_weights(load_probabilities(args.probs, prob_options));
  } else {
    weights = load_weights(args.weights, options);
  }
  if (weights.size() != set.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "weight source has " + std::to_string(weights.size()) +
                    " rows for " + std::to_string(set.size()) + " points",
                weights.size());
  }
  return {std::move(set), std::move(weights)};
}

void EchoData(Report::Section& config, const DataArgs& args,
              const EmbeddingSet& set) {
  config.Add("embeddings", args.embeddings);
  if (!args.probs.empty()) config.Add("probs", args.probs);
  if (!args.weights.empty()) config.Add("weights", args.weights);
  config.Add("format", args.format);
  config.Add("n", std::to_string(set.size()));
  config.Add("dim", std::to_string(set.dim()));
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

Report cmd_select(const SelectArgs& args) {
  const auto load_start = Clock::now();
  const LoadedData data = Load(args.data);
  const double load_ms = Millis(load_start);
  const EmbeddingSet& set = data.set;
  const WeightVector& weights = data.weights;

  const Metric metric = ParseMetric(args.metric);
  if (args.k == 0) throw Error(ErrorCode::kInvalidArgument, "--k is required");
  const double lambda = args.lambda ? *args.lambda : default_lambda(args.k);
  const NeighborhoodMode mode = ParseNeighborhoodMode(args.neighborhood);

  Report report;
  auto& config = report.AddSection("config");
  config.Add("command", "select");
  config.Add("method", args.method);
  EchoData(config, args.data, set);
  config.Add("k", std::to_string(args.k));
  config.AddNumber("lambda", lambda);
  config.Add("gamma", args.gamma ? FormatNumber(*args.gamma) : "search");
  config.Add("gamma_grid", std::to_string(args.gamma_grid));
  config.Add("metric", std::string(MetricName(metric)));
  config.Add("machines", std::to_string(args.machines));
  config.Add("partition", args.partition);
  config.Add("seed", std::to_string(args.seed));
  config.Add("k_nn", std::to_string(args.k_nn));
  config.Add("neighborhood", args.neighborhood);
  config.AddNumber("lambda_s", args.lambda_s);

  SelectionConfig base;
  base.k = args.k;
  base.lambda = lambda;
  base.metric = metric;
  base.seed = args.seed;
  base.Validate(set.size());

  const auto select_start = Clock::now();
  double graph_ms = 0.0;
  std::optional<NeighborGraph> graph;
  auto need_graph = [&] {
    if (!graph) {
      const auto t0 = Clock::now();
      graph = build_knn_graph(set, args.k_nn, metric, args.threads);
      graph_ms = Millis(t0);
    }
    return &*graph;
  };

  SubsetSolution solution;
  std::vector<GammaTracePoint> trace;
  auto with_gamma = [&](auto&& run) {
    if (args.gamma) {
      solution = run(*args.gamma);
      return;
    }
    const std::vector<double> grid = gamma_grid(
        gamma_bounds(set, metric, weights, args.k), args.gamma_grid);
    GammaSearchResult r = gamma_search(grid, run);
    solution = std::move(r.best);
    trace = std::move(r.trace);
  };

  const std::string& method = args.method;
  if (method == "duke") {
    with_gamma([&](double gamma) {
      SelectionConfig c = base;
      c.gamma = gamma;
      return weighted_kcenter(set, metric, weights, c);
    });
  } else if (method == "duke-pq") {
    const NeighborGraph* g =
        mode == NeighborhoodMode::kKnnGraph ? need_graph() : nullptr;
    with_gamma([&](double gamma) {
      SelectionConfig c = base;
      c.gamma = gamma;
      return weighted_kcenter_pq(set, metric, weights, g, c, mode);
    });
  } else if (method == "parallel") {
    const PartitionPlan plan =
        make_partition(set.size(), args.machines, args.seed,
                       ParsePartitionStrategy(args.partition));
    ParallelOptions options;
    options.threads = args.threads;
    with_gamma([&](double gamma) {
      SelectionConfig c = base;
      c.gamma = gamma;
      return parallel_weighted_kcenter(set, metric, weights, c, plan, options);
    });
  } else if (method == "random") {
    solution = make_solution(set, metric, weights, lambda,
                             random_select(set.size(), args.k, args.seed),
                             "random");
  } else if (method == "margin") {
    solution = make_solution(set, metric, weights, lambda,
                             margin_select(weights, args.k), "margin");
  } else if (method == "greedy-kcenter") {
    solution = make_solution(set, metric, weights, lambda,
                             greedy_kcenter(set, metric, args.k, 0).indices,
                             "greedy-kcenter");
  } else if (method == "submodular") {
    const NeighborGraph* g = need_graph();
    const SubmodularSelection pick = submodular_greedy(
        *g, uncertainty_utilities(weights), EdgeSimilarity::FromDistances(*g),
        args.lambda_s, args.k);
    solution = make_solution(set, metric, weights, lambda, pick.indices,
                             "submodular");
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown method '" + method + "'");
  }
  const double select_ms = Millis(select_start);

  AddSolution(report, solution);
  if (!trace.empty()) AddTrace(report, trace);
  auto& timing = report.AddSection("timing");
  timing.AddNumber("load_ms", load_ms);
  if (graph) timing.AddNumber("graph_ms", graph_ms);
  timing.AddNumber("select_ms", select_ms);
  return report;
}

Report cmd_oracle(const OracleArgs& args) {
  const LoadedData data = Load(args.data);
  const Metric metric = ParseMetric(args.metric);
  if (args.k == 0) throw Error(ErrorCode::kInvalidArgument, "--k is required");
  const double lambda = args.lambda ? *args.lambda : default_lambda(args.k);

  Report report;
  auto& config = report.AddSection("config");
  config.Add("command", "oracle");
  EchoData(config, args.data, data.set);
  config.Add("k", std::to_string(args.k));
  config.AddNumber("lambda", lambda);
  config.Add("metric", std::string(MetricName(metric)));
  config.Add("cap", std::to_string(args.cap));

  const auto t0 = Clock::now();
  const OracleResult r =
      brute_force_weighted(data.set, metric, data.weights, args.k, lambda,
                           args.cap);
  AddOracle(report, r, r.radius_term);
  report.AddSection("timing").AddNumber("oracle_ms", Millis(t0));
  return report;
}

CommandResult cmd_verify(const VerifyOptions& options) {
  CommandResult result;
  Report& report = result.report;
  auto& config = report.AddSection("config");
  config.Add("command", "verify");
  config.Add("trials", std::to_string(options.trials));
  config.Add("n_max", std::to_string(options.n_max));
  config.Add("k_max", std::to_string(options.k_max));
  config.Add("seed", std::to_string(options.seed));
  config.Add("machines", FormatIndices(options.machines));

  const auto t0 = Clock::now();
  const VerifyResult v = run_verification(options);
  auto& summary = report.AddSection("verify");
  if (options.trials > 0) {
    for (const CheckSummary& c : v.checks) {
      std::string line = c.name + " checked=" + std::to_string(c.checked) +
                         " violations=" + std::to_string(c.violations) +
                         " worst_ratio=" + FormatNumber(c.worst_ratio) +
                         " bound=" + FormatNumber(c.bound) + " status=" +
                         (c.violations ? "fail" : "pass");
      // Per-metric violations over checks, e.g. cosine=2/100.
      for (const MetricTally& m : c.by_metric) {
        line += ' ' + std::string(MetricName(m.metric)) + '=' +
                std::to_string(m.violations) + '/' + std::to_string(m.checked);
      }
      summary.Add("check", line);
    }
  }
  summary.Add("result", v.ok() ? "pass" : "fail");

  char buf[40];
  for (const Violation& bad : v.violations) {
    auto& s = report.AddSection("violation");
    s.Add("check", bad.check);
    s.Add("detail", bad.detail);
    s.Add("metric", std::string(MetricName(bad.trial.metric)));
    s.Add("k", std::to_string(bad.trial.k));
    s.AddNumber("lambda", bad.trial.lambda);
    std::snprintf(buf, sizeof(buf), "%.17g", bad.gamma);
    s.Add("gamma", buf);
    const EmbeddingSet& set = bad.trial.instance.set;
    for (PointIndex i = 0; i < set.size(); ++i) {
      std::string row;
      for (double x : set.row(i)) {
        std::snprintf(buf, sizeof(buf), "%.9g", x);
        if (!row.empty()) row += ',';
        row += buf;
      }
      std::snprintf(buf, sizeof(buf), "%.17g", bad.trial.instance.weights[i]);
      s.Add("point", row + " weight=" + buf);
    }
  }
  report.AddSection("timing").AddNumber("verify_ms", Millis(t0));
  result.exit_code = v.ok() ? kExitOk : kExitInvariant;
  return result;
}

Report cmd_bench(const BenchOptions& options) {
  Report report;
  auto& config = report.AddSection("config");
  config.Add("command", "bench");
  config.Add("sizes", FormatIndices(options.sizes));
  config.Add("dim", std::to_string(options.dim));
  config.Add("k", std::to_string(options.k));
  config.Add("seed", std::to_string(options.seed));
  config.Add("repeats", std::to_string(options.repeats));
  config.Add("metric", std::string(MetricName(options.metric)));
  config.AddNumber("gamma_fraction", options.gamma_fraction);

  const BenchResult r = run_bench(options);
  auto& bench = report.AddSection("bench");
  bench.Add("columns", "n k gamma greedy_ms pq_ms");
  auto row_text = [](const BenchRow& row) {
    return std::to_string(row.n) + ' ' + std::to_string(row.k) + ' ' +
           FormatNumber(row.gamma) + ' ' + FormatNumber(row.greedy_ms) + ' ' +
           FormatNumber(row.pq_ms);
  };
  for (const BenchRow& row : r.ladder) bench.Add("row", row_text(row));
  for (double x : r.pq_ratios) bench.AddNumber("pq_ratio", x);
  for (double x : r.greedy_ratios) bench.AddNumber("greedy_ratio", x);
  if (!r.k_sweep.empty()) {
    auto& sweep = report.AddSection("bench-k");
    for (const BenchRow& row : r.k_sweep) sweep.Add("row", row_text(row));
    sweep.AddNumber("pq_ratio", r.k_sweep[1].pq_ms / r.k_sweep[0].pq_ms);
  }
  report.AddSection("timing").AddNumber("total_ms", r.total_ms);
  return report;
}

Report cmd_gen(const GenArgs& args) {
  if (args.out.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--out is required");
  }
  SyntheticSpec spec;
  spec.kind = ParseInstanceKind(args.kind);
  spec.n = args.n;
  spec.dim = args.dim;
  spec.clusters = args.clusters;
  spec.spread = args.spread;
  spec.seed = args.seed;
  spec.weights = ParseWeightScheme(args.weight_scheme);
  const Instance inst = gen_clusters(spec);

  std::ostringstream points;
  write_csv(points, inst.set);
  WriteFile(args.out, points.str());
  const std::string weights_path =
      args.weights_out.empty() ? args.out + ".weights" : args.weights_out;
  std::ostringstream weights;
  write_weights(weights, inst.weights);
  WriteFile(weights_path, weights.str());

  Report report;
  auto& s = report.AddSection("gen");
  s.Add("kind", args.kind);
  s.Add("n", std::to_string(inst.set.size()));
  s.Add("dim", std::to_string(inst.set.dim()));
  s.Add("seed", std::to_string(args.seed));
  s.Add("weight_scheme", spec.kind == InstanceKind::kFigure1
                             ? "figure1"
                             : args.weight_scheme);
  s.Add("embeddings", args.out);
  s.Add("weights", weights_path);
  return report;
}

std::string cmd_graph(const GraphArgs& args) {
  LoadOptions options;
  options.format = ParseFileFormat(args.format);
  options.dim = args.dim;
  options.header = args.header;
  const EmbeddingSet set = load_embeddings(args.embeddings, options);
  const NeighborGraph graph =
      build_knn_graph(set, args.k_nn, ParseMetric(args.metric), args.threads);
  std::ostringstream out;
  write_graph(out, graph);
  return out.str();
}

}  // namespace duke::cli
