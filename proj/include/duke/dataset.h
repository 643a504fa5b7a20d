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


#ifndef DUKE_DATASET_H_
#define DUKE_DATASET_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace duke {

using PointIndex = std::size_t;

enum class Metric { kCosine, kEuclidean, kManhattan };

std::string_view MetricName(Metric metric);
// Accepts "cosine", "cosine-distance", "euclidean", "l2", "manhattan", "l1".
Metric ParseMetric(std::string_view name);

// The ground set: n points with `dim` finite coordinates each, stored
// row-major as float32 (the native precision of model embeddings; half the
// memory traffic of doubles). Distances accumulate in double. Immutable once
// built. Labels are carried for reports only.
class EmbeddingSet {
 public:
  // Values are rounded to float32; a value outside float range is rejected
  // as non-finite.
  EmbeddingSet(std::size_t dim, std::vector<double> features,
               std::vector<int> labels = {});
  static EmbeddingSet FromFloats(std::size_t dim, std::vector<float> features,
                                 std::vector<int> labels = {});

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }
  std::span<const float> row(PointIndex i) const {
    return {features_.data() + i * dim_, dim_};
  }
  std::span<const float> features() const { return features_; }
  // Euclidean norm of row i, precomputed for the cosine metric.
  double norm(PointIndex i) const { return norms_[i]; }
  bool has_labels() const { return !labels_.empty(); }
  std::span<const int> labels() const { return labels_; }

  // Rows `indices` in the given order, as a new set.
  EmbeddingSet Subset(std::span<const PointIndex> indices) const;

 private:
  EmbeddingSet() = default;
  void Init();

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<float> features_;
  std::vector<double> norms_;
  std::vector<int> labels_;
};

// Per-class predicted probabilities, one row per point. Rows are validated
// (entries in [0, 1], sums within `tolerance` of 1) but never renormalized.
class ProbabilityMatrix {
 public:
  ProbabilityMatrix(std::size_t classes, std::vector<double> values,
                    double tolerance = 1e-6);

  std::size_t rows() const { return rows_; }
  std::size_t classes() const { return classes_; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * classes_, classes_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t classes_ = 0;
  std::vector<double> values_;
};

// Per-point margin weights. Entries are finite and nonnegative.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](PointIndex i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  WeightVector Subset(std::span<const PointIndex> indices) const;

 private:
  std::vector<double> values_;
};

// w(i) = p(best class) - p(second-best class). Ties pick the lower class
// index as "best"; the margin is 0 exactly when the top two tie.
WeightVector margin_weights(const ProbabilityMatrix& probs);

// Checked distance between two rows. Throws kIndexOutOfRange, or
// kZeroVectorCosine when either row is the zero vector under cosine.
double pairwise_distance(PointIndex a, PointIndex b, const EmbeddingSet& set,
                         Metric metric);

// Unchecked distance evaluator bound to one set and metric. Construction
// validates the whole set once (zero rows under cosine), so the hot loops in
// the selection algorithms can call operator() without per-pair checks.
// Every code path that needs d(i, j) goes through here, which keeps stored
// and recomputed distances bit-identical.
class MetricSpace {
 public:
  MetricSpace(const EmbeddingSet& set, Metric metric);

  std::size_t size() const { return set_->size(); }
  Metric metric() const { return metric_; }
  const EmbeddingSet& set() const { return *set_; }

  double operator()(PointIndex a, PointIndex b) const;

 private:
  const EmbeddingSet* set_;
  Metric metric_;
};

enum class FileFormat { kCsv, kRawFloat32 };

FileFormat ParseFileFormat(std::string_view name);

struct LoadOptions {
  FileFormat format = FileFormat::kCsv;
  // Required for raw-float32, ignored for CSV.
  std::size_t dim = 0;
  // CSV only: skip the first line.
  bool header = false;
};

// A dense row-major matrix as read from disk, before domain validation.
struct RawMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
};

RawMatrix read_matrix(const std::string& path, const LoadOptions& options);
RawMatrix parse_csv(std::istream& in, bool header);

EmbeddingSet load_embeddings(const std::string& path,
                             const LoadOptions& options);
ProbabilityMatrix load_probabilities(const std::string& path,
                                     const LoadOptions& options,
                                     double tolerance = 1e-6);
// One weight per row (single column).
WeightVector load_weights(const std::string& path, const LoadOptions& options);

void write_csv(std::ostream& out, const EmbeddingSet& set);
void write_weights(std::ostream& out, const WeightVector& weights);

}  // namespace duke

#endif  // DUKE_DATASET_H_
