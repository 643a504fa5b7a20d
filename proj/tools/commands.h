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


#ifndef DUKE_TOOLS_COMMANDS_H_
#define DUKE_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "duke/baselines.h"
#include "duke/bench.h"
#include "duke/instances.h"
#include "duke/oracle.h"
#include "duke/report.h"
#include "duke/verify.h"

namespace duke::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitInvariant = 3,
};

struct DataArgs {
  std::string embeddings;
  // Exactly one of the two weight sources.
  std::string probs;
  std::string weights;
  std::string format = "csv";
  std::size_t dim = 0;
  bool header = false;
};

struct SelectArgs {
  DataArgs data;
  std::size_t k = 0;
  std::string method = "duke";
  std::optional<double> lambda;
  // A fixed gamma skips the grid search.
  std::optional<double> gamma;
  std::size_t gamma_grid = 8;
  std::string metric = "cosine";
  std::size_t machines = 1;
  std::string partition = "round-robin";
  std::uint64_t seed = 0;
  std::size_t k_nn = 10;
  std::string neighborhood = "exact-ball";
  double lambda_s = kDefaultLambdaS;
  unsigned threads = 1;
};

struct OracleArgs {
  DataArgs data;
  std::size_t k = 0;
  std::optional<double> lambda;
  std::string metric = "cosine";
  std::uint64_t cap = kDefaultOracleCap;
};

struct GenArgs {
  std::string kind = "clusters";
  std::size_t n = 100;
  std::size_t dim = 2;
  std::size_t clusters = 4;
  double spread = 1.0;
  std::uint64_t seed = 0;
  std::string weight_scheme = "random";
  std::string out;
  std::string weights_out;
};

struct GraphArgs {
  std::string embeddings;
  std::string format = "csv";
  std::size_t dim = 0;
  bool header = false;
  std::size_t k_nn = 10;
  std::string metric = "cosine";
  unsigned threads = 1;
};

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

Report cmd_select(const SelectArgs& args);
Report cmd_oracle(const OracleArgs& args);
// exit_code is kExitInvariant when any check fails.
CommandResult cmd_verify(const VerifyOptions& options);
Report cmd_bench(const BenchOptions& options);
// Writes the embeddings (and weights) CSV files.
Report cmd_gen(const GenArgs& args);
// Returns the graph export text.
std::string cmd_graph(const GraphArgs& args);

}  // namespace duke::cli

#endif  // DUKE_TOOLS_COMMANDS_H_
