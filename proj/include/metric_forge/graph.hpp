// Copyright 2026 The metric-forge Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metric_forge/linalg.hpp"

namespace mforge {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double length = 1.0;
  double capacity = 1.0;
};

/// Undirected graph with nonnegative edge lengths and capacities.
///
/// Construction rejects self-loops, duplicate unordered pairs, out-of-range
/// endpoints and negative or non-finite weights (MalformedInput).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbours of v as (vertex, edge index) pairs.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbours(
      std::size_t v) const {
    return adjacency_[v];
  }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  bool is_connected() const;
  bool has_unit_lengths() const;
  /// Common degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;

  Matrix adjacency_matrix() const;
  /// Hop distances (BFS, ignoring lengths); unreachable entries are -1.
  std::vector<std::vector<int>> hop_distances() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

}  // namespace mforge
