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

// Data-parallel inner loops shared by the solvers. Every kernel has an
// OpenMP implementation in mforge::kernels and a plain serial twin in
// mforge::kernels::reference; the two must agree bit for bit, which the
// kernel tests check and bench_kernels times.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "metric_forge/graph.hpp"
#include "metric_forge/linalg.hpp"
#include "metric_forge/metric.hpp"

namespace mforge::kernels {

struct RatioExtremes {
  double expansion = 0.0;    // max target/source over pairs
  double contraction = 0.0;  // max source/target over pairs
  /// First pair (row-major) whose target distance is zero, if any.
  std::optional<std::pair<std::size_t, std::size_t>> coincident;
};

/// Best subset found by an exhaustive bitmask scan.
struct MaskScan {
  double value = 0.0;
  std::uint64_t mask = 0;
  bool found = false;
};

struct Commodity {
  std::size_t source = 0;
  std::size_t sink = 0;
  double demand = 1.0;
};

/// Dijkstra from every source; unreachable pairs are +inf.
Matrix all_pairs_shortest_paths(const WeightedGraph& g);
Matrix pairwise_distances(const Matrix& coords, Norm norm);
RatioExtremes ratio_extremes(const Matrix& source, const Matrix& target);
/// Entry (x, s) is min over y in sets[s] of dist(x, y).
Matrix distances_to_sets(const Matrix& dist,
                         const std::vector<std::vector<std::size_t>>& sets);
/// min over nonempty S, |S| <= n/2 of (edges leaving S) / |S|. Requires n<=63.
MaskScan edge_expansion_scan(const WeightedGraph& g);
/// min over S not containing vertex n-1 of cap(S)/dem(S), taken over cuts
/// with dem(S) > 0. Ties go to the smallest mask.
MaskScan sparsest_cut_scan(const WeightedGraph& g,
                           const std::vector<Commodity>& commodities);

namespace reference {
Matrix all_pairs_shortest_paths(const WeightedGraph& g);
Matrix pairwise_distances(const Matrix& coords, Norm norm);
RatioExtremes ratio_extremes(const Matrix& source, const Matrix& target);
Matrix distances_to_sets(const Matrix& dist,
                         const std::vector<std::vector<std::size_t>>& sets);
MaskScan edge_expansion_scan(const WeightedGraph& g);
MaskScan sparsest_cut_scan(const WeightedGraph& g,
                           const std::vector<Commodity>& commodities);
}  // namespace reference

}  // namespace mforge::kernels
