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


// duke: weighted k-center subset selection from the command line.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "duke/error.h"

namespace {

using duke::cli::ExitCode;

void AddDataOptions(CLI::App* app, duke::cli::DataArgs& data) {
  app->add_option("--embeddings", data.embeddings, "Embedding file")
      ->required();
  app->add_option("--probs", data.probs, "Class-probability CSV");
  app->add_option("--weights", data.weights, "Per-point weight file");
  app->add_option("--format", data.format, "csv or raw-float32");
  app->add_option("--dim", data.dim, "Dimension for raw-float32 input");
  app->add_flag("--header", data.header, "Skip the first CSV line");
}

int Emit(const duke::Report& report, const std::string& out) {
  const std::string text = report.Serialize();
  if (out.empty()) {
    std::cout << text;
    return std::cout ? ExitCode::kExitOk : ExitCode::kExitData;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << duke::Error(duke::ErrorCode::kIo, "cannot write '" + out + "'")
                     .OneLine()
              << '\n';
    return ExitCode::kExitData;
  }
  file << text;
  return ExitCode::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted k-center subset selection"};
  app.require_subcommand(1);

  std::string out;
  std::string metric = "cosine";

  duke::cli::SelectArgs select;
  double select_lambda = 0.0, select_gamma = 0.0;
  CLI::App* select_cmd = app.add_subcommand("select", "Select a subset");
  AddDataOptions(select_cmd, select.data);
  select_cmd->add_option("--k", select.k, "Budget")->required();
  select_cmd
      ->add_option("--method", select.method,
                   "random, margin, submodular, greedy-kcenter, duke, "
                   "duke-pq or parallel")
      ->check(CLI::IsMember({"random", "margin", "submodular",
                             "greedy-kcenter", "duke", "duke-pq",
                             "parallel"}));
  CLI::Option* lambda_opt =
      select_cmd->add_option("--lambda", select_lambda, "Default 0.1 / k");
  CLI::Option* gamma_opt =
      select_cmd->add_option("--gamma", select_gamma, "Fixed ball radius");
  select_cmd->add_option("--gamma-grid", select.gamma_grid,
                         "Grid size when searching gamma");
  select_cmd->add_option("--metric", select.metric,
                         "cosine, euclidean or manhattan");
  select_cmd->add_option("--machines", select.machines, "Partitions");
  select_cmd->add_option("--partition", select.partition,
                         "round-robin or random");
  select_cmd->add_option("--seed", select.seed);
  select_cmd->add_option("--k-nn", select.k_nn, "Neighbors per node");
  select_cmd->add_option("--neighborhood", select.neighborhood,
                         "exact-ball or knn-graph (duke-pq)");
  select_cmd->add_option("--lambda-s", select.lambda_s,
                         "Redundancy weight for submodular");
  select_cmd->add_option("--threads", select.threads);
  select_cmd->add_option("--out", out, "Report path (default stdout)");

  duke::cli::OracleArgs oracle;
  double oracle_lambda = 0.0;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Exact optimum by enumeration");
  AddDataOptions(oracle_cmd, oracle.data);
  oracle_cmd->add_option("--k", oracle.k)->required();
  CLI::Option* oracle_lambda_opt =
      oracle_cmd->add_option("--lambda", oracle_lambda, "Default 0.1 / k");
  oracle_cmd->add_option("--metric", oracle.metric);
  oracle_cmd->add_option("--cap", oracle.cap, "Max subsets to enumerate");
  oracle_cmd->add_option("--out", out);

  duke::VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Randomized guarantee checks");
  verify_cmd->add_option("--trials", verify.trials);
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_option("--k-max", verify.k_max);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--machines", verify.machines, "Worker counts");
  verify_cmd->add_option("--out", out);

  duke::BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Scaling benchmark");
  bench_cmd->add_option("--sizes", bench.sizes, "Size ladder");
  bench_cmd->add_option("--dim", bench.dim);
  bench_cmd->add_option("--k", bench.k);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--repeats", bench.repeats);
  bench_cmd->add_option("--gamma-fraction", bench.gamma_fraction);
  bench_cmd->add_option("--k-sweep-n", bench.k_sweep_n,
                        "Also time k and 2k at this n");
  bench_cmd->add_option("--metric", metric);
  bench_cmd->add_option("--out", out);

  duke::cli::GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic set");
  gen_cmd->add_option("--kind", gen.kind,
                      "figure1, clusters, uniform-cube or line");
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--dim", gen.dim);
  gen_cmd->add_option("--clusters", gen.clusters);
  gen_cmd->add_option("--spread", gen.spread);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--weight-scheme", gen.weight_scheme,
                      "uniform, per-cluster, centroid-distance or random");
  gen_cmd->add_option("--out", gen.out, "Embeddings CSV")->required();
  gen_cmd->add_option("--weights-out", gen.weights_out,
                      "Weights CSV (default <out>.weights)");

  duke::cli::GraphArgs graph;
  CLI::App* graph_cmd = app.add_subcommand("graph", "Export the kNN graph");
  graph_cmd->add_option("--embeddings", graph.embeddings)->required();
  graph_cmd->add_option("--format", graph.format);
  graph_cmd->add_option("--dim", graph.dim);
  graph_cmd->add_flag("--header", graph.header);
  graph_cmd->add_option("--k-nn", graph.k_nn);
  graph_cmd->add_option("--metric", graph.metric);
  graph_cmd->add_option("--threads", graph.threads);
  graph_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error code=Usage message=\"" << e.what() << "\"\n";
    return ExitCode::kExitUsage;
  }

  try {
    if (select_cmd->parsed()) {
      if (*lambda_opt) select.lambda = select_lambda;
      if (*gamma_opt) select.gamma = select_gamma;
      return Emit(duke::cli::cmd_select(select), out);
    }
    if (oracle_cmd->parsed()) {
      if (*oracle_lambda_opt) oracle.lambda = oracle_lambda;
      return Emit(duke::cli::cmd_oracle(oracle), out);
    }
    if (verify_cmd->parsed()) {
      const duke::cli::CommandResult r = duke::cli::cmd_verify(verify);
      const int emitted = Emit(r.report, out);
      if (r.exit_code != ExitCode::kExitOk) {
        std::cerr << "error code=InvariantViolation message=\"verification "
                     "failed; see [violation] sections\"\n";
        return r.exit_code;
      }
      return emitted;
    }
    if (bench_cmd->parsed()) {
      bench.metric = duke::ParseMetric(metric);
      return Emit(duke::cli::cmd_bench(bench), out);
    }
    if (gen_cmd->parsed()) {
      return Emit(duke::cli::cmd_gen(gen), "");
    }
    if (graph_cmd->parsed()) {
      const std::string text = duke::cli::cmd_graph(graph);
      if (out.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out, std::ios::binary) << text;
      }
      return ExitCode::kExitOk;
    }
  } catch (const duke::Error& e) {
    std::cerr << e.OneLine() << '\n';
    return e.code() == duke::ErrorCode::kInvalidArgument ? ExitCode::kExitUsage
                                                         : ExitCode::kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error code=Internal message=\"" << e.what() << "\"\n";
    return ExitCode::kExitData;
  }
  return ExitCode::kExitUsage;
}
