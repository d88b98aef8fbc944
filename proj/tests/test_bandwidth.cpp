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

#include "metric_forge/bandwidth.hpp"
#include "metric_forge/error.hpp"
#include "support.hpp"

using namespace mforge;
using namespace mforge::families;

TEST_CASE("Labeling validation") {
  CHECK_NOTHROW(Labeling({2, 0, 1}));
  CHECK_THROWS_AS(Labeling({0, 0, 1}), Error);
  CHECK_THROWS_AS(Labeling({0, 3, 1}), Error);
  const auto lab = Labeling::from_order({2, 0, 1});
  CHECK(lab.position(2) == 0);
  CHECK(lab.label(1) == 3);
  CHECK(lab.order() == std::vector<std::size_t>{2, 0, 1});
}

TEST_CASE("bandwidth_of examples") {
  CHECK(bandwidth_of(generate(Path{5}), Labeling::from_order({0, 1, 2, 3, 4})) == 1);
  const auto k5 = generate(Complete{5});
  CHECK(bandwidth_of(k5, Labeling::from_order({3, 1, 4, 0, 2})) == 4);
  // Cycle vertices 0..5 in order carry labels 1,2,3,6,5,4.
  CHECK(bandwidth_of(generate(Cycle{6}), Labeling({0, 1, 2, 5, 4, 3})) == 3);
}

TEST_CASE("beta examples") {
  CHECK(beta_lower_bound(generate(Path{7})) == doctest::Approx(3.0));
  CHECK(beta_lower_bound(generate(Star{5})) == doctest::Approx(6.0));
  CHECK(beta_lower_bound(generate(Hypercube{3})) == doctest::Approx(4.0));
}

TEST_CASE("bandwidth_bruteforce hand values") {
  CHECK(bandwidth_bruteforce(generate(Path{6})).bw == 1);
  CHECK(bandwidth_bruteforce(generate(Cycle{6})).bw == 2);
  CHECK(bandwidth_bruteforce(generate(Complete{4})).bw == 3);
  CHECK(bandwidth_bruteforce(generate(Star{3})).bw == 2);
  CHECK_THROWS_AS(bandwidth_bruteforce(generate(Path{11})), Error);
}

TEST_CASE("bandwidth_bruteforce matches all-permutation enumeration") {
  std::mt19937_64 rng(70);
  std::vector<WeightedGraph> graphs{generate(Hypercube{3}), generate(CompleteBinaryTree{2}),
                                    generate(Star{6}), generate(Cycle{8})};
  for (int i = 0; i < 10; ++i) graphs.push_back(testing::random_connected_graph(5 + i % 4, 0.35, 1, rng));
  for (const auto& g : graphs) {
    const auto opt = bandwidth_bruteforce(g);
    CHECK(opt.bw == testing::bandwidth_by_permutation(g));
    CHECK(bandwidth_of(g, opt.labeling) == opt.bw);
    CHECK(opt.bw >= static_cast<std::size_t>(std::ceil((beta_lower_bound(g) - 1.0) / 2.0)));
  }
}

TEST_CASE("feige_label consistency") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 8; ++i) {
    const auto g = testing::random_connected_graph(8, 0.3, 1, rng);
    const auto oracle = bandwidth_bruteforce(g).bw;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      BourgainParams bp;
      bp.seed = seed;
      const auto res = feige_label(g, bp);
      CHECK(bandwidth_of(g, res.labeling) == res.achieved_bw);
      CHECK(res.achieved_bw >= oracle);
      const auto again = feige_label(g, bp);
      CHECK(again.labeling.positions() == res.labeling.positions());
    }
  }
}

TEST_CASE("feige_label on path(8) and K13") {
  std::size_t best = 100;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    BourgainParams bp;
    bp.seed = seed;
    best = std::min(best, feige_label(generate(Path{8}), bp).achieved_bw);
    const auto star = feige_label(generate(Star{3}), bp);
    CHECK(star.achieved_bw >= 2);
    CHECK(star.achieved_bw <= 3);
  }
  CHECK(best <= 3);
}
