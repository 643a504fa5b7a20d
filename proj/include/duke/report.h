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


#ifndef DUKE_REPORT_H_
#define DUKE_REPORT_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duke/dataset.h"
#include "duke/oracle.h"
#include "duke/wkcenter.h"

namespace duke {

// Plain-text run report: a header line followed by `[section]` blocks of
// `key = value` lines. Field order is insertion order and keys may repeat,
// so two reports built the same way serialize byte-identically.
class Report {
 public:
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> fields;

    void Add(std::string key, std::string value);
    void AddNumber(std::string key, double value);
    // First value for `key`, or empty.
    std::string_view Get(std::string_view key) const;
    std::vector<std::string_view> GetAll(std::string_view key) const;

    friend bool operator==(const Section&, const Section&) = default;
  };

  Section& AddSection(std::string name);
  const Section* Find(std::string_view name) const;
  const std::vector<Section>& sections() const { return sections_; }

  std::string Serialize() const;
  // Throws kBadFormat on malformed input.
  static Report Parse(std::string_view text);

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::vector<Section> sections_;
};

// %.9g
std::string FormatNumber(double value);
std::string FormatIndices(std::span<const PointIndex> indices);
std::vector<PointIndex> ParseIndices(std::string_view text);

void AddSolution(Report& report, const SubsetSolution& solution,
                 std::string name = "solution");
// Reads back the fields AddSolution wrote (numbers at report precision).
SubsetSolution ReadSolution(const Report& report,
                            std::string_view name = "solution");
void AddTrace(Report& report, std::span<const GammaTracePoint> trace);
void AddOracle(Report& report, const OracleResult& oracle, double gamma_star);

}  // namespace duke

#endif  // DUKE_REPORT_H_
