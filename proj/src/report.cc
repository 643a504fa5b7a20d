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


#include "duke/report.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "duke/error.h"

namespace duke {
namespace {

constexpr std::string_view kHeader = "# duke report v1";

double ParseNumber(std::string_view text) {
  const std::string copy(text);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw Error(ErrorCode::kBadFormat, "bad number '" + copy + "' in report");
  }
  return v;
}

}  // namespace

void Report::Section::Add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
}

void Report::Section::AddNumber(std::string key, double value) {
  Add(std::move(key), FormatNumber(value));
}

std::string_view Report::Section::Get(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return {};
}

std::vector<std::string_view> Report::Section::GetAll(
    std::string_view key) const {
  std::vector<std::string_view> out;
  for (const auto& [k, v] : fields) {
    if (k == key) out.push_back(v);
  }
  return out;
}

Report::Section& Report::AddSection(std::string name) {
  sections_.push_back({std::move(name), {}});
  return sections_.back();
}

const Report::Section* Report::Find(std::string_view name) const {
  for (const auto& s : sections_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string Report::Serialize() const {
  std::string out(kHeader);
  out += '\n';
  for (const auto& s : sections_) {
    out += '[' + s.name + "]\n";
    for (const auto& [k, v] : s.fields) out += k + " = " + v + '\n';
  }
  return out;
}

Report Report::Parse(std::string_view text) {
  Report report;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!header_seen) {
      if (line != kHeader) {
        throw Error(ErrorCode::kBadFormat, "missing report header", line_no);
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      report.AddSection(std::string(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto sep = line.find(" = ");
    if (sep == std::string_view::npos || report.sections_.empty()) {
      throw Error(ErrorCode::kBadFormat,
                  "malformed report line " + std::to_string(line_no), line_no);
    }
    report.sections_.back().Add(std::string(line.substr(0, sep)),
                                std::string(line.substr(sep + 3)));
  }
  if (!header_seen) throw Error(ErrorCode::kBadFormat, "empty report");
  return report;
}

std::string FormatNumber(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string FormatIndices(std::span<const PointIndex> indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(indices[i]);
  }
  return out;
}

std::vector<PointIndex> ParseIndices(std::string_view text) {
  std::vector<PointIndex> out;
  while (!text.empty()) {
    const auto sp = text.find(' ');
    std::string_view tok = text.substr(0, sp);
    text.remove_prefix(sp == std::string_view::npos ? text.size() : sp + 1);
    if (tok.empty()) continue;
    PointIndex v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::kBadFormat,
                  "bad index '" + std::string(tok) + "' in report");
    }
    out.push_back(v);
  }
  return out;
}

void AddSolution(Report& report, const SubsetSolution& solution,
                 std::string name) {
  auto& s = report.AddSection(std::move(name));
  s.Add("algorithm", solution.algorithm);
  s.Add("k", std::to_string(solution.indices.size()));
  s.Add("indices", FormatIndices(solution.indices));
  s.AddNumber("radius_term", solution.radius_term);
  s.AddNumber("weight_term", solution.weight_term);
  s.AddNumber("objective", solution.objective);
  s.AddNumber("lambda", solution.lambda);
  s.AddNumber("gamma_used", solution.gamma_used);
  if (solution.machines > 0) {
    s.Add("machines", std::to_string(solution.machines));
    for (const auto& c : solution.worker_candidates) {
      s.Add("worker", FormatIndices(c));
    }
  }
}

SubsetSolution ReadSolution(const Report& report, std::string_view name) {
  const Report::Section* s = report.Find(name);
  if (s == nullptr) {
    throw Error(ErrorCode::kBadFormat,
                "report has no [" + std::string(name) + "] section");
  }
  SubsetSolution out;
  out.algorithm = std::string(s->Get("algorithm"));
  out.indices = ParseIndices(s->Get("indices"));
  out.radius_term = ParseNumber(s->Get("radius_term"));
  out.weight_term = ParseNumber(s->Get("weight_term"));
  out.objective = ParseNumber(s->Get("objective"));
  out.lambda = ParseNumber(s->Get("lambda"));
  out.gamma_used = ParseNumber(s->Get("gamma_used"));
  if (!s->Get("machines").empty()) {
    out.machines = ParseIndices(s->Get("machines")).at(0);
    for (auto w : s->GetAll("worker")) {
      out.worker_candidates.push_back(ParseIndices(w));
    }
  }
  return out;
}

void AddTrace(Report& report, std::span<const GammaTracePoint> trace) {
  auto& s = report.AddSection("trace");
  for (const auto& p : trace) {
    s.Add("point", FormatNumber(p.gamma) + ' ' + FormatNumber(p.objective));
  }
}

void AddOracle(Report& report, const OracleResult& oracle, double gamma_star) {
  auto& s = report.AddSection("oracle");
  s.Add("best_subset", FormatIndices(oracle.best_subset));
  s.AddNumber("radius_term", oracle.radius_term);
  s.AddNumber("weight_term", oracle.weight_term);
  s.AddNumber("objective", oracle.objective);
  s.AddNumber("optimal_gamma", gamma_star);
  s.Add("enumerated", std::to_string(oracle.enumerated));
}

}  // namespace duke
