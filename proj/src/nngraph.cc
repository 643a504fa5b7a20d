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


#include "duke/nngraph.h"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <thread>

#include "duke/error.h"

namespace duke {
namespace {

bool Closer(const Neighbor& a, const Neighbor& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  return a.index < b.index;
}

void BuildRows(const MetricSpace& space, std::size_t keep, PointIndex begin,
               PointIndex end, std::vector<std::vector<Neighbor>>& adjacency) {
  const std::size_t n = space.size();
  std::vector<Neighbor> scratch;
  scratch.reserve(n);
  for (PointIndex i = begin; i < end; ++i) {
    scratch.clear();
    for (PointIndex j = 0; j < n; ++j) {
      if (j != i) scratch.push_back({j, space(i, j)});
    }
    std::partial_sort(scratch.begin(), scratch.begin() + keep, scratch.end(),
                      Closer);
    adjacency[i].assign(scratch.begin(), scratch.begin() + keep);
  }
}

}  // namespace

NeighborGraph build_knn_graph(const EmbeddingSet& set, std::size_t k_nn,
                              Metric metric, unsigned threads) {
  if (k_nn == 0) {
    throw Error(ErrorCode::kInvalidArgument, "k_nn must be >= 1");
  }
  const MetricSpace space(set, metric);
  const std::size_t n = set.size();
  const std::size_t keep = std::min(k_nn, n - 1);
  std::vector<std::vector<Neighbor>> adjacency(n);

  threads = std::max(1u, std::min<unsigned>(threads, n));
  if (threads == 1) {
    BuildRows(space, keep, 0, n, adjacency);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const PointIndex begin = std::min(n, t * chunk);
      const PointIndex end = std::min(n, begin + chunk);
      workers.emplace_back([&, begin, end] {
        BuildRows(space, keep, begin, end, adjacency);
      });
    }
  }
  return NeighborGraph(k_nn, std::move(adjacency));
}

std::vector<PointIndex> radius_query(const EmbeddingSet& set, Metric metric,
                                     PointIndex center, double radius,
                                     std::span<const PointIndex> exclude) {
  if (center >= set.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "center out of range", center);
  }
  if (!(radius >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "radius must be >= 0");
  }
  const MetricSpace space(set, metric);
  std::vector<char> skip(set.size(), 0);
  for (PointIndex e : exclude) {
    if (e < skip.size()) skip[e] = 1;
  }
  std::vector<PointIndex> out;
  for (PointIndex i = 0; i < set.size(); ++i) {
    if (!skip[i] && space(center, i) <= radius) out.push_back(i);
  }
  return out;
}

void write_graph(std::ostream& out, const NeighborGraph& graph) {
  char buf[64];
  for (PointIndex i = 0; i < graph.size(); ++i) {
    out << i << ':';
    for (const Neighbor& nb : graph.neighbors(i)) {
      std::snprintf(buf, sizeof(buf), " (%zu,%.9g)", nb.index, nb.distance);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace duke
