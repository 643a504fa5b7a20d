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


#include "duke/dataset.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "duke/error.h"

namespace duke {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Four independent partial sums, so the compiler can keep several
// additions in flight; the combining order is fixed, so results stay
// deterministic and symmetric in (a, b).
template <typename Term>
double SumTerms(std::span<const float> a, std::span<const float> b,
                Term term) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    s0 += term(double{a[i]}, double{b[i]});
    s1 += term(double{a[i + 1]}, double{b[i + 1]});
    s2 += term(double{a[i + 2]}, double{b[i + 2]});
    s3 += term(double{a[i + 3]}, double{b[i + 3]});
  }
  for (; i < a.size(); ++i) s0 += term(double{a[i]}, double{b[i]});
  return (s0 + s1) + (s2 + s3);
}

double Dot(std::span<const float> a, std::span<const float> b) {
  return SumTerms(a, b, [](double x, double y) { return x * y; });
}

double Euclidean(std::span<const float> a, std::span<const float> b) {
  return std::sqrt(SumTerms(a, b, [](double x, double y) {
    const double t = x - y;
    return t * t;
  }));
}

double Manhattan(std::span<const float> a, std::span<const float> b) {
  return SumTerms(a, b, [](double x, double y) { return std::abs(x - y); });
}

double Cosine(std::span<const float> a, std::span<const float> b,
              double norm_a, double norm_b) {
  const double d = 1.0 - Dot(a, b) / (norm_a * norm_b);
  return std::clamp(d, 0.0, 2.0);
}

double Distance(const EmbeddingSet& set, Metric metric, PointIndex a,
                PointIndex b) {
  if (a == b) return 0.0;
  switch (metric) {
    case Metric::kCosine:
      return Cosine(set.row(a), set.row(b), set.norm(a), set.norm(b));
    case Metric::kEuclidean:
      return Euclidean(set.row(a), set.row(b));
    case Metric::kManhattan:
      return Manhattan(set.row(a), set.row(b));
  }
  return 0.0;
}

void CheckCosineRow(const EmbeddingSet& set, PointIndex i) {
  if (set.norm(i) == 0.0) {
    throw Error(ErrorCode::kZeroVectorCosine,
                "cosine distance undefined for zero vector at row " +
                    std::to_string(i),
                i);
  }
}

}  // namespace

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kCosine:
      return "cosine";
    case Metric::kEuclidean:
      return "euclidean";
    case Metric::kManhattan:
      return "manhattan";
  }
  return "unknown";
}

Metric ParseMetric(std::string_view name) {
  if (name == "cosine" || name == "cosine-distance") return Metric::kCosine;
  if (name == "euclidean" || name == "l2") return Metric::kEuclidean;
  if (name == "manhattan" || name == "l1") return Metric::kManhattan;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown metric '" + std::string(name) + "'");
}

EmbeddingSet::EmbeddingSet(std::size_t dim, std::vector<double> features,
                           std::vector<int> labels)
    : dim_(dim), labels_(std::move(labels)) {
  features_.resize(features.size());
  for (std::size_t j = 0; j < features.size(); ++j) {
    const float v = static_cast<float>(features[j]);
    if (!std::isfinite(features[j]) || !std::isfinite(v)) {
      const std::size_t i = dim_ ? j / dim_ : 0;
      throw Error(ErrorCode::kNonFinite,
                  "non-finite feature value at row " + std::to_string(i), i);
    }
    features_[j] = v;
  }
  Init();
}

EmbeddingSet EmbeddingSet::FromFloats(std::size_t dim,
                                      std::vector<float> features,
                                      std::vector<int> labels) {
  EmbeddingSet set;
  set.dim_ = dim;
  set.features_ = std::move(features);
  set.labels_ = std::move(labels);
  set.Init();
  return set;
}

void EmbeddingSet::Init() {
  if (dim_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be >= 1");
  }
  if (features_.empty()) {
    throw Error(ErrorCode::kEmptyFile, "embedding set has no points");
  }
  if (features_.size() % dim_ != 0) {
    throw Error(ErrorCode::kRaggedRow,
                "feature count is not a multiple of the dimension",
                features_.size() / dim_);
  }
  n_ = features_.size() / dim_;
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error(ErrorCode::kSizeMismatch, "label count does not match points",
                labels_.size());
  }
  norms_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (float v : row(i)) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFinite,
                    "non-finite feature value at row " + std::to_string(i), i);
      }
    }
    norms_[i] = std::sqrt(Dot(row(i), row(i)));
  }
}

EmbeddingSet EmbeddingSet::Subset(std::span<const PointIndex> indices) const {
  std::vector<float> features;
  features.reserve(indices.size() * dim_);
  std::vector<int> labels;
  for (PointIndex i : indices) {
    if (i >= n_) {
      throw Error(ErrorCode::kIndexOutOfRange, "subset index out of range", i);
    }
    auto r = row(i);
    features.insert(features.end(), r.begin(), r.end());
    if (has_labels()) labels.push_back(labels_[i]);
  }
  return FromFloats(dim_, std::move(features), std::move(labels));
}

ProbabilityMatrix::ProbabilityMatrix(std::size_t classes,
                                     std::vector<double> values,
                                     double tolerance)
    : classes_(classes), values_(std::move(values)) {
  if (classes_ < 2) {
    throw Error(ErrorCode::kTooFewClasses,
                "margin weights need at least 2 classes", classes_);
  }
  if (values_.empty() || values_.size() % classes_ != 0) {
    throw Error(ErrorCode::kRaggedRow,
                "probability values do not form complete rows");
  }
  rows_ = values_.size() / classes_;
  for (std::size_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (double p : row(i)) {
      if (!std::isfinite(p)) {
        throw Error(ErrorCode::kNonFinite,
                    "non-finite probability at row " + std::to_string(i), i);
      }
      if (p < 0.0 || p > 1.0) {
        throw Error(ErrorCode::kInvalidProbabilities,
                    "probability outside [0,1] at row " + std::to_string(i), i);
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tolerance) {
      throw Error(ErrorCode::kInvalidProbabilities,
                  "probability row " + std::to_string(i) + " sums to " +
                      std::to_string(sum),
                  i);
    }
  }
}

WeightVector::WeightVector(std::vector<double> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw Error(ErrorCode::kNonFinite,
                  "weight must be finite and nonnegative at row " +
                      std::to_string(i),
                  i);
    }
  }
}

WeightVector WeightVector::Subset(std::span<const PointIndex> indices) const {
  std::vector<double> values;
  values.reserve(indices.size());
  for (PointIndex i : indices) values.push_back(values_.at(i));
  return WeightVector(std::move(values));
}

WeightVector margin_weights(const ProbabilityMatrix& probs) {
  if (probs.classes() < 2) {
    throw Error(ErrorCode::kTooFewClasses,
                "margin weights need at least 2 classes", probs.classes());
  }
  std::vector<double> weights(probs.rows());
  for (std::size_t i = 0; i < probs.rows(); ++i) {
    auto row = probs.row(i);
    std::size_t best = 0;
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c] > row[best]) best = c;
    }
    double second = -1.0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != best && row[c] > second) second = row[c];
    }
    weights[i] = std::max(0.0, row[best] - second);
  }
  return WeightVector(std::move(weights));
}

double pairwise_distance(PointIndex a, PointIndex b, const EmbeddingSet& set,
                         Metric metric) {
  if (a >= set.size() || b >= set.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "point index out of range",
                std::max(a, b));
  }
  if (metric == Metric::kCosine) {
    CheckCosineRow(set, a);
    CheckCosineRow(set, b);
  }
  return Distance(set, metric, a, b);
}

MetricSpace::MetricSpace(const EmbeddingSet& set, Metric metric)
    : set_(&set), metric_(metric) {
  if (metric_ == Metric::kCosine) {
    for (PointIndex i = 0; i < set.size(); ++i) CheckCosineRow(set, i);
  }
}

double MetricSpace::operator()(PointIndex a, PointIndex b) const {
  return Distance(*set_, metric_, a, b);
}

FileFormat ParseFileFormat(std::string_view name) {
  if (name == "csv") return FileFormat::kCsv;
  if (name == "raw-float32" || name == "f32") return FileFormat::kRawFloat32;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown file format '" + std::string(name) + "'");
}

RawMatrix parse_csv(std::istream& in, bool header) {
  RawMatrix m;
  std::string line;
  if (header) std::getline(in, line);
  while (std::getline(in, line)) {
    std::string_view view = Trim(line);
    if (view.empty()) continue;
    const std::size_t row = m.rows;
    std::size_t cols = 0;
    while (true) {
      const auto comma = view.find(',');
      std::string_view field = Trim(view.substr(0, comma));
      double value = 0.0;
      if (!field.empty() && field.front() == '+') field.remove_prefix(1);
      auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw Error(ErrorCode::kBadFormat,
                    "unparseable value '" + std::string(field) + "' at row " +
                        std::to_string(row),
                    row);
      }
      if (!std::isfinite(value)) {
        throw Error(ErrorCode::kNonFinite,
                    "non-finite value at row " + std::to_string(row), row);
      }
      m.values.push_back(value);
      ++cols;
      if (comma == std::string_view::npos) break;
      view.remove_prefix(comma + 1);
    }
    if (m.rows == 0) {
      m.cols = cols;
    } else if (cols != m.cols) {
      throw Error(ErrorCode::kRaggedRow,
                  "row " + std::to_string(row) + " has " +
                      std::to_string(cols) + " values, expected " +
                      std::to_string(m.cols),
                  row);
    }
    ++m.rows;
  }
  if (m.rows == 0) throw Error(ErrorCode::kEmptyFile, "no data rows");
  return m;
}

RawMatrix read_matrix(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  if (options.format == FileFormat::kCsv) {
    try {
      return parse_csv(in, options.header);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what(), e.detail());
    }
  }
  if (options.dim == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "raw-float32 input needs a dimension (--dim)");
  }
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.empty()) throw Error(ErrorCode::kEmptyFile, path + ": empty file");
  const std::size_t row_bytes = 4 * options.dim;
  if (bytes.size() % row_bytes != 0) {
    throw Error(ErrorCode::kRaggedRow,
                path + ": file length is not a multiple of 4*dim bytes",
                bytes.size() / row_bytes);
  }
  RawMatrix m;
  m.cols = options.dim;
  m.rows = bytes.size() / row_bytes;
  m.values.resize(bytes.size() / 4);
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    const unsigned char* p = bytes.data() + 4 * i;
    const std::uint32_t bits = std::uint32_t{p[0]} |
                               (std::uint32_t{p[1]} << 8) |
                               (std::uint32_t{p[2]} << 16) |
                               (std::uint32_t{p[3]} << 24);
    const float value = std::bit_cast<float>(bits);
    if (!std::isfinite(value)) {
      const std::size_t row = i / m.cols;
      throw Error(ErrorCode::kNonFinite,
                  path + ": non-finite value at row " + std::to_string(row),
                  row);
    }
    m.values[i] = value;
  }
  return m;
}

EmbeddingSet load_embeddings(const std::string& path,
                             const LoadOptions& options) {
  RawMatrix m = read_matrix(path, options);
  return EmbeddingSet(m.cols, std::move(m.values));
}

ProbabilityMatrix load_probabilities(const std::string& path,
                                     const LoadOptions& options,
                                     double tolerance) {
  RawMatrix m = read_matrix(path, options);
  return ProbabilityMatrix(m.cols, std::move(m.values), tolerance);
}

WeightVector load_weights(const std::string& path, const LoadOptions& options) {
  LoadOptions one = options;
  if (one.format == FileFormat::kRawFloat32) one.dim = 1;
  RawMatrix m = read_matrix(path, one);
  if (m.cols != 1) {
    throw Error(ErrorCode::kRaggedRow, path + ": weights file needs 1 column",
                0);
  }
  return WeightVector(std::move(m.values));
}

void write_csv(std::ostream& out, const EmbeddingSet& set) {
  char buf[32];
  for (PointIndex i = 0; i < set.size(); ++i) {
    auto r = set.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      // Nine digits round-trip any float32.
      std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(r[j]));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

void write_weights(std::ostream& out, const WeightVector& weights) {
  char buf[32];
  for (double w : weights.values()) {
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    out << buf << '\n';
  }
}

}  // namespace duke
