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
#include <string>
#include <vector>

#include "metric_forge/metric.hpp"

namespace mforge {

/// Hierarchically well-separated tree whose leaves are the points of a
/// metric space. A node at level l represents a cluster of source diameter
/// at most level_diameter[l]; the edge to each child has length
/// level_diameter[l] * edge_scale.
class HstTree {
 public:
  struct Node {
    std::optional<std::size_t> parent;
    std::size_t level = 0;
    std::vector<std::size_t> children;
    std::optional<std::size_t> point;  // set on leaves
    std::vector<std::size_t> cluster;  // source points below this node
  };

  HstTree(std::vector<Node> nodes, std::vector<double> level_diameter, double edge_scale = 1.0);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& level_diameter() const noexcept { return level_diameter_; }
  double edge_scale() const noexcept { return edge_scale_; }
  std::size_t leaf_count() const noexcept { return leaf_of_point_.size(); }
  std::size_t leaf_of_point(std::size_t p) const { return leaf_of_point_[p]; }
  std::size_t depth() const noexcept { return level_diameter_.size(); }

  double edge_length(std::size_t level) const { return level_diameter_[level] * edge_scale_; }
  /// Path length between the leaves of source points a and b.
  double distance(std::size_t a, std::size_t b) const;

  void scale_edges(double factor) { edge_scale_ *= factor; }

 private:
  std::vector<Node> nodes_;
  std::vector<double> level_diameter_;
  double edge_scale_;
  std::vector<std::size_t> leaf_of_point_;
};

/// Random hierarchical decomposition at scales diam, diam/2, ...: each cluster
/// is split by a random center order with one random radius in
/// [scale/4, scale/2] per center. Throws nothing for valid inputs.
HstTree sample_hst(const MetricSpace& x, std::uint64_t seed);

/// Leaf-to-leaf metric in source point order.
MetricSpace tree_metric(const HstTree& t);

struct TreeDistribution {
  std::vector<HstTree> trees;
  std::vector<double> weights;
};

/// `trials` independent samples with uniform weights.
TreeDistribution sample_distribution(const MetricSpace& x, std::size_t trials, std::uint64_t seed);

struct StretchEstimate {
  double max_pair_expected_stretch = 1.0;
  Matrix per_pair;  // mean tree distance / d, zero diagonal
};

StretchEstimate estimate_stretch(const MetricSpace& x, std::size_t trials, std::uint64_t seed);

/// Parenthesized text: "(L<level>:<edge length> child ...)" for internal
/// nodes and "<point>" (1-indexed) for leaves, followed by a line
/// "leaves: p1 p2 ..." listing leaf points in traversal order.
std::string serialize_hst(const HstTree& t);
HstTree parse_hst(const std::string& text);

}  // namespace mforge
