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
#include <vector>

#include "metric_forge/graph.hpp"
#include "metric_forge/l2_embed.hpp"

namespace mforge {

/// A bijection from vertices to positions; label(v) = position(v) + 1.
class Labeling {
 public:
  /// `position[v]` in [0, n); throws InvalidLabeling unless a permutation.
  explicit Labeling(std::vector<std::size_t> position);
  /// Builds the labeling that lists `order` first to last.
  static Labeling from_order(const std::vector<std::size_t>& order);

  std::size_t size() const noexcept { return position_.size(); }
  std::size_t position(std::size_t v) const { return position_[v]; }
  std::size_t label(std::size_t v) const { return position_[v] + 1; }
  const std::vector<std::size_t>& positions() const noexcept { return position_; }
  std::vector<std::size_t> order() const;

 private:
  std::vector<std::size_t> position_;
};

std::size_t bandwidth_of(const WeightedGraph& g, const Labeling& lab);

/// max over x and integer r >= 1 of |B_r(x)| / r in hop distance.
double beta_lower_bound(const WeightedGraph& g);

struct FeigeResult {
  Labeling labeling;
  std::size_t achieved_bw = 0;
};

/// Bourgain embedding of the graph metric, projected on a uniformly random
/// direction; vertices are labeled in projection order (ties by index).
FeigeResult feige_label(const WeightedGraph& g, const BourgainParams& params);

struct BandwidthOptimum {
  std::size_t bw = 0;
  Labeling labeling;
};

/// Exact bandwidth by branch and bound over labelings; n <= 10.
BandwidthOptimum bandwidth_bruteforce(const WeightedGraph& g);

}  // namespace mforge
