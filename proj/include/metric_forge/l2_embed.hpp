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

#include <cstdint>
#include <optional>
#include <vector>

#include "metric_forge/metric.hpp"

namespace mforge {

struct BourgainParams {
  /// Defaults to 8 * ceil(log2 n).
  std::optional<std::size_t> sets_per_scale;
  std::uint64_t seed = 0;
  /// L2 divides coordinates by sqrt(count), L1 by count, so the map is
  /// non-expanding under the chosen norm.
  Norm norm = Norm::L2;
};

struct BourgainEmbedding {
  PointSet points;
  std::vector<std::vector<std::size_t>> sets;
  Norm norm = Norm::L2;
};

/// Set sizes 1, 2, 4, ..., up to the largest power of two <= n/2.
std::vector<std::size_t> bourgain_scales(std::size_t n);
std::size_t default_sets_per_scale(std::size_t n);

/// Distance-to-random-subsets embedding: coordinate S of x is d(x, S).
BourgainEmbedding bourgain_embed(const MetricSpace& x, const BourgainParams& params);
/// Same map on a semimetric (zero off-diagonal distances allowed).
BourgainEmbedding bourgain_embed(const Matrix& semimetric, const BourgainParams& params);

struct JlParams {
  double epsilon = 0.5;
  std::optional<std::size_t> target_dim_override;
  std::uint64_t seed = 0;
};

/// ceil(9 ln n / eps^2).
std::size_t jl_target_dim(std::size_t n, double epsilon);

/// Gaussian random projection scaled by 1/sqrt(k).
PointSet jl_project(const PointSet& p, const JlParams& params);

}  // namespace mforge
