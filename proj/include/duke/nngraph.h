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


#ifndef DUKE_NNGRAPH_H_
#define DUKE_NNGRAPH_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "duke/dataset.h"

namespace duke {

struct Neighbor {
  PointIndex index = 0;
  double distance = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Exact k-nearest-neighbor graph. Each node holds min(k_nn, n - 1)
// neighbors, no self loops, sorted by (distance, index).
class NeighborGraph {
 public:
  NeighborGraph(std::size_t k_nn, std::vector<std::vector<Neighbor>> adjacency)
      : k_nn_(k_nn), adjacency_(std::move(adjacency)) {}

  std::size_t size() const { return adjacency_.size(); }
  std::size_t k_nn() const { return k_nn_; }
  std::span<const Neighbor> neighbors(PointIndex i) const {
    return adjacency_[i];
  }

 private:
  std::size_t k_nn_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// O(n^2 dim) scan. Rows may be split across `threads` workers; the result is
// identical to the sequential scan.
NeighborGraph build_knn_graph(const EmbeddingSet& set, std::size_t k_nn,
                              Metric metric, unsigned threads = 1);

// All i not in `exclude` with d(center, i) <= radius, ascending by index.
std::vector<PointIndex> radius_query(const EmbeddingSet& set, Metric metric,
                                     PointIndex center, double radius,
                                     std::span<const PointIndex> exclude = {});

// `node: (nbr,dist) (nbr,dist) ...`, distances at 9 significant digits.
void write_graph(std::ostream& out, const NeighborGraph& graph);

}  // namespace duke

#endif  // DUKE_NNGRAPH_H_
