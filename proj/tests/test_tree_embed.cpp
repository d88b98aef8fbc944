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

#include <doctest.h>

#include "metric_forge/error.hpp"
#include "metric_forge/tree_embed.hpp"
#include "support.hpp"

using namespace mforge;

namespace {

std::vector<MetricSpace> corpus() {
  std::mt19937_64 rng(50);
  std::vector<MetricSpace> out{testing::graph_metric(families::Hypercube{2}),
                               testing::graph_metric(families::Hypercube{3}),
                               testing::equilateral(8), testing::star_metric(),
                               testing::graph_metric(families::Path{9}),
                               testing::graph_metric(families::CompleteBinaryTree{3})};
  for (int i = 0; i < 3; ++i) out.push_back(testing::random_metric(10, rng, 1.0, 10.0));
  return out;
}

double cluster_diameter(const MetricSpace& x, const std::vector<std::size_t>& c) {
  double d = 0.0;
  for (std::size_t a : c)
    for (std::size_t b : c) d = std::max(d, x(a, b));
  return d;
}

}  // namespace

TEST_CASE("single point gives a single leaf") {
  const HstTree t = sample_hst(MetricSpace(Matrix::Zero(1, 1)), 3);
  CHECK(t.nodes().size() == 1);
  CHECK(t.nodes()[0].point == std::optional<std::size_t>(0));
  CHECK(t.distance(0, 0) == 0.0);
}

TEST_CASE("two points sit under one root") {
  Matrix d(2, 2);
  d << 0, 1, 1, 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const HstTree t = sample_hst(MetricSpace(d), seed);
    CHECK(t.nodes().size() == 3);
    CHECK(t.distance(0, 1) >= 1.0);
  }
}

TEST_CASE("tree_metric on a star-shaped HST") {
  std::vector<HstTree::Node> nodes(4);
  for (std::size_t leaf = 1; leaf < 4; ++leaf) {
    nodes[leaf].parent = 0;
    nodes[leaf].level = 1;
    nodes[leaf].point = leaf - 1;
    nodes[0].children.push_back(leaf);
  }
  const HstTree t(nodes, {1.0, 0.5});
  const auto m = tree_metric(t);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) CHECK(m(a, b) == 2.0);

  const HstTree scaled(nodes, {2.5, 1.0});
  CHECK(tree_metric(scaled)(0, 2) == 5.0);
}

TEST_CASE("HST structure invariants across the corpus") {
  for (const auto& x : corpus()) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const HstTree t = sample_hst(x, seed);
      CHECK(t.leaf_count() == x.size());
      for (std::size_t l = 1; l < t.depth(); ++l)
        CHECK(t.level_diameter()[l] * 2.0 == t.level_diameter()[l - 1]);
      CHECK(t.level_diameter()[0] == x.diameter());
      for (const auto& node : t.nodes()) {
        CHECK(cluster_diameter(x, node.cluster) <= t.level_diameter()[node.level]);
        if (node.parent) CHECK(t.nodes()[*node.parent].level + 1 == node.level);
      }
      for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b) CHECK(t.distance(a, b) >= x(a, b));
      CHECK_NOTHROW(validate_metric(tree_metric(t).matrix()));
    }
  }
}

TEST_CASE("hypercube(2) domination on every pair for every seed") {
  const auto x = testing::graph_metric(families::Hypercube{2});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const HstTree t = sample_hst(x, seed);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) CHECK(t.distance(a, b) >= x(a, b));
  }
}

TEST_CASE("sample_hst is seed deterministic") {
  const auto x = testing::graph_metric(families::Hypercube{3});
  CHECK(serialize_hst(sample_hst(x, 4)) == serialize_hst(sample_hst(x, 4)));
}

TEST_CASE("serialization round trip") {
  for (const auto& x : corpus()) {
    const HstTree t = sample_hst(x, 11);
    const HstTree back = parse_hst(serialize_hst(t));
    CHECK(serialize_hst(back) == serialize_hst(t));
    CHECK(tree_metric(back).matrix() == tree_metric(t).matrix());
  }
  CHECK_THROWS_AS(parse_hst("(L0:1 1 2)"), Error);
  CHECK_THROWS_AS(parse_hst("levels: 1\n(L1:1 1 2)"), Error);
}

TEST_CASE("HstTree constructor rejects bad trees") {
  std::vector<HstTree::Node> nodes(3);
  nodes[1].parent = 0;
  nodes[1].level = 1;
  nodes[1].point = 0;
  nodes[2].parent = 0;
  nodes[2].level = 1;
  nodes[2].point = 0;
  nodes[0].children = {1, 2};
  CHECK_THROWS_AS(HstTree(nodes, {1.0, 0.5}), Error);
  nodes[2].point = 1;
  CHECK_NOTHROW(HstTree(nodes, {1.0, 0.5}));
  CHECK_THROWS_AS(HstTree(nodes, {1.0, 0.6}), Error);
}

TEST_CASE("distribution weights sum to one") {
  const auto dist = sample_distribution(testing::equilateral(5), 37, 2);
  CHECK(dist.trees.size() == 37);
  double total = 0.0;
  for (double w : dist.weights) {
    CHECK(w > 0.0);
    total += w;
  }
  CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("estimate_stretch agrees with the sampled distribution") {
  const auto x = testing::star_metric();
  const auto est = estimate_stretch(x, 50, 9);
  const auto dist = sample_distribution(x, 50, 9);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      if (a == b) continue;
      double mean = 0.0;
      for (std::size_t t = 0; t < dist.trees.size(); ++t) mean += dist.weights[t] * dist.trees[t].distance(a, b);
      CHECK(est.per_pair(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) ==
            doctest::Approx(mean / x(a, b)).epsilon(1e-12));
      CHECK(est.per_pair(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) >= 1.0);
    }
}

TEST_CASE("stretch envelopes") {
  Matrix d(2, 2);
  d << 0, 1, 1, 0;
  CHECK(estimate_stretch(MetricSpace(d), 20, 1).max_pair_expected_stretch >= 1.0);
  CHECK(estimate_stretch(testing::equilateral(4), 200, 1).max_pair_expected_stretch <= 16.0);
  CHECK(estimate_stretch(testing::graph_metric(families::Hypercube{3}), 500, 1).max_pair_expected_stretch <=
        12.0 * 3.0);
  CHECK_THROWS_AS(estimate_stretch(testing::equilateral(4), 0, 1), Error);
}
