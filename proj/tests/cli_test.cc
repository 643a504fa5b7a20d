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


#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.h"
#include "doctest.h"
#include "duke/error.h"

namespace duke::cli {
namespace {

namespace fs = std::filesystem;

// A scratch directory removed at scope exit.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("duke_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void Write(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SelectArgs FigureOneArgs(const TempDir& dir) {
  GenArgs gen;
  gen.kind = "figure1";
  gen.out = dir.File("fig1.csv");
  cmd_gen(gen);
  SelectArgs args;
  args.data.embeddings = gen.out;
  args.data.weights = gen.out + ".weights";
  args.metric = "euclidean";
  args.k = 8;
  args.lambda = 1.0;
  return args;
}

TEST_CASE("select on figure one") {
  TempDir dir;
  SelectArgs args = FigureOneArgs(dir);
  args.gamma = 2.0;
  const Report r = cmd_select(args);
  const SubsetSolution s = ReadSolution(r);
  CHECK(s.objective == 6.0);
  CHECK(s.algorithm == "duke");
  CHECK(r.Find("config")->Get("gamma") == "2");
  CHECK(r.Find("trace") == nullptr);
  CHECK(r.Find("timing") != nullptr);

  args.gamma.reset();
  const Report searched = cmd_select(args);
  CHECK(searched.Find("trace")->GetAll("point").size() == 8);
  CHECK(ReadSolution(searched).objective == 6.0);
}

TEST_CASE("every method runs and echoes its config") {
  TempDir dir;
  SelectArgs args = FigureOneArgs(dir);
  args.gamma = 2.0;
  for (const char* method : {"duke", "duke-pq", "parallel", "random", "margin",
                             "greedy-kcenter", "submodular"}) {
    args.method = method;
    args.machines = 2;
    const Report r = cmd_select(args);
    const SubsetSolution s = ReadSolution(r);
    CHECK(s.indices.size() == 8);
    CHECK(r.Find("config")->Get("method") == method);
    // Re-running the same config reproduces the solution block exactly.
    CHECK(*cmd_select(args).Find("solution") == *r.Find("solution"));
  }
  args.method = "duke-pq";
  args.neighborhood = "knn-graph";
  CHECK(cmd_select(args).Find("timing")->Get("graph_ms").size() > 0);
  args.method = "kmeans";
  CHECK_THROWS_AS(cmd_select(args), Error);
}

TEST_CASE("margin method on explicit weights") {
  TempDir dir;
  Write(dir.File("x.csv"), "0,1\n1,0\n1,1\n");
  Write(dir.File("w.csv"), "0.9\n0.1\n0.5\n");
  SelectArgs args;
  args.data.embeddings = dir.File("x.csv");
  args.data.weights = dir.File("w.csv");
  args.method = "margin";
  args.k = 2;
  const SubsetSolution s = ReadSolution(cmd_select(args));
  CHECK(s.indices == std::vector<PointIndex>{1, 2});
  CHECK(s.lambda == doctest::Approx(0.05));
}

TEST_CASE("probabilities become margin weights") {
  TempDir dir;
  Write(dir.File("x.csv"), "0,1\n1,0\n1,1\n");
  Write(dir.File("p.csv"), "0.6,0.3,0.1\n1,0,0\n0.5,0.5,0\n");
  SelectArgs args;
  args.data.embeddings = dir.File("x.csv");
  args.data.probs = dir.File("p.csv");
  args.method = "margin";
  args.k = 2;
  CHECK(ReadSolution(cmd_select(args)).indices == std::vector<PointIndex>{2, 0});
}

TEST_CASE("gamma search stays within three times the oracle") {
  TempDir dir;
  GenArgs gen;
  gen.kind = "clusters";
  gen.n = 12;
  gen.seed = 5;
  gen.out = dir.File("r.csv");
  cmd_gen(gen);
  SelectArgs args;
  args.data.embeddings = gen.out;
  args.data.weights = gen.out + ".weights";
  args.metric = "euclidean";
  args.k = 4;
  args.lambda = 1.0;
  const Report r = cmd_select(args);
  CHECK(r.Find("trace")->GetAll("point").size() == 8);
  OracleArgs oa;
  oa.data = args.data;
  oa.k = 4;
  oa.lambda = 1.0;
  oa.metric = "euclidean";
  const Report o = cmd_oracle(oa);
  const double best = std::stod(std::string(o.Find("oracle")->Get("objective")));
  CHECK(o.Find("oracle")->Get("enumerated") == "495");
  CHECK(ReadSolution(r).objective <= 3.0 * best * (1 + 1e-9));
}

TEST_CASE("oracle on figure one") {
  TempDir dir;
  const SelectArgs s = FigureOneArgs(dir);
  OracleArgs args;
  args.data = s.data;
  args.k = 8;
  args.lambda = 1.0;
  args.metric = "euclidean";
  const Report r = cmd_oracle(args);
  CHECK(r.Find("oracle")->Get("objective") == "6");
  CHECK(r.Find("oracle")->Get("optimal_gamma") == "2");
  args.cap = 100;
  CHECK_THROWS_AS(cmd_oracle(args), Error);
}

TEST_CASE("verify") {
  VerifyOptions none;
  none.trials = 0;
  const CommandResult empty = cmd_verify(none);
  CHECK(empty.exit_code == kExitOk);
  CHECK(empty.report.Find("verify")->Get("result") == "pass");
  CHECK(empty.report.Find("verify")->GetAll("check").empty());

  VerifyOptions few;
  few.trials = 12;
  const CommandResult r = cmd_verify(few);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.Find("verify")->Get("result") == "pass");
  CHECK(r.report.Find("violation") == nullptr);
  CHECK_FALSE(r.report.Find("verify")->GetAll("check").empty());
}

TEST_CASE("small bench completes quickly") {
  BenchOptions options;
  options.sizes = {100, 200};
  options.dim = 8;
  options.k = 10;
  options.repeats = 1;
  const Report r = cmd_bench(options);
  CHECK(r.Find("bench")->GetAll("row").size() == 2);
}

TEST_CASE("gen and graph") {
  TempDir dir;
  GenArgs gen;
  gen.kind = "line";
  gen.n = 3;
  gen.weight_scheme = "uniform";
  gen.out = dir.File("l.csv");
  const Report r = cmd_gen(gen);
  CHECK(r.Find("gen")->Get("weights") == gen.out + ".weights");
  CHECK(Slurp(gen.out) == "0\n1\n2\n");
  CHECK(Slurp(gen.out + ".weights") == "0.5\n0.5\n0.5\n");
  GraphArgs g;
  g.embeddings = gen.out;
  g.metric = "euclidean";
  g.k_nn = 1;
  CHECK(cmd_graph(g) == "0: (1,1)\n1: (0,1)\n2: (1,1)\n");
  gen.out.clear();
  CHECK_THROWS_AS(cmd_gen(gen), Error);
}

TEST_CASE("data errors surface as module errors") {
  TempDir dir;
  Write(dir.File("x.csv"), "0,1\n1\n");
  Write(dir.File("w.csv"), "0.5\n0.5\n");
  SelectArgs args;
  args.data.embeddings = dir.File("x.csv");
  args.data.weights = dir.File("w.csv");
  args.k = 1;
  try {
    cmd_select(args);
    FAIL("expected RaggedRow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRaggedRow);
  }
  args.data.embeddings = dir.File("missing.csv");
  CHECK_THROWS_AS(cmd_select(args), Error);
}

// End-to-end runs of the installed binary: exit codes and stream hygiene.
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Exec(const TempDir& dir, const std::string& args) {
  const std::string out = dir.File("stdout.txt");
  const std::string err = dir.File("stderr.txt");
  const std::string cmd =
      std::string(DUKE_BINARY) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), Slurp(out), Slurp(err)};
}

TEST_CASE("binary exit codes") {
  TempDir dir;
  const std::string fig = dir.File("f.csv");
  Run gen = Exec(dir, "gen --kind figure1 --out " + fig);
  REQUIRE(gen.code == 0);

  Run ok = Exec(dir, "select --embeddings " + fig + " --weights " + fig +
                         ".weights --k 8 --lambda 1 --gamma 2 --metric euclidean");
  CHECK(ok.code == 0);
  CHECK(ok.err.empty());
  CHECK(ReadSolution(Report::Parse(ok.out)).objective == 6.0);

  Run usage = Exec(dir, "select --k 8");
  Run bad_lambda = Exec(dir, "select --embeddings " + fig + " --weights " + fig +
                                 ".weights --k 2 --lambda -1 --gamma 1");
  CHECK(bad_lambda.code == 1);
  CHECK(usage.code == 1);
  CHECK(usage.out.empty());

  Run bad_k = Exec(dir, "select --embeddings " + fig + " --weights " + fig +
                            ".weights --k 99 --metric euclidean --gamma 1");
  CHECK(bad_k.code == 2);
  CHECK(bad_k.err.find("error code=BudgetExceedsGroundSet") == 0);

  Run missing = Exec(dir, "select --embeddings " + dir.File("nope.csv") +
                              " --weights " + fig + ".weights --k 2");
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());
  CHECK(missing.err.rfind("error code=", 0) == 0);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);

  Run verify = Exec(dir, "verify --trials 0");
  CHECK(verify.code == 0);

  const std::string report = dir.File("report.txt");
  Run to_file = Exec(dir, "oracle --embeddings " + fig + " --weights " + fig +
                              ".weights --k 8 --lambda 1 --metric euclidean --out " +
                              report);
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(Report::Parse(Slurp(report)).Find("oracle")->Get("objective") == "6");
}

}  // namespace
}  // namespace duke::cli
