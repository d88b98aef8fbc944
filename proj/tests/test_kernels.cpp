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
#include <omp.h>

#include "metric_forge/flowcut.hpp"
#include "metric_forge/kernels.hpp"
#include "metric_forge/l2_embed.hpp"
#include "metric_forge/rng.hpp"
#include "support.hpp"

using namespace mforge;

// Parallel kernels must agree bit for bit with the serial references,
// whatever the thread count.

namespace {

template <typename Fn>
void for_thread_counts(Fn fn) {
  const int saved = omp_get_max_threads();
  for (int t : {1, 2, 4, 7}) {
    omp_set_num_threads(t);
    fn();
  }
  omp_set_num_threads(saved);
}

}  // namespace

TEST_CASE("all pairs shortest paths") {
  std::mt19937_64 rng(80);
  std::uniform_real_distribution<double> len(0.1, 4.0);
  auto g0 = testing::random_connected_graph(40, 0.1, 1, rng);
  auto edges = g0.edges();
  for (auto& e : edges) e.length = len(rng);
  const WeightedGraph g(40, edges);
  const Matrix ref = kernels::reference::all_pairs_shortest_paths(g);
  for_thread_counts([&] { CHECK(kernels::all_pairs_shortest_paths(g) == ref); });
}

TEST_CASE("pairwise distances") {
  std::mt19937_64 rng(81);
  const Matrix pts = testing::random_points(60, 5, rng);
  for (Norm norm : {Norm::L1, Norm::L2, Norm::Linf}) {
    const Matrix ref = kernels::reference::pairwise_distances(pts, norm);
    for_thread_counts([&] { CHECK(kernels::pairwise_distances(pts, norm) == ref); });
  }
}

TEST_CASE("ratio extremes") {
  std::mt19937_64 rng(82);
  const auto x = testing::random_metric(30, rng);
  const Matrix t = PointSet(testing::random_points(30, 3, rng)).distances(Norm::L2);
  const auto ref = kernels::reference::ratio_extremes(x.matrix(), t);
  for_thread_counts([&] {
    const auto par = kernels::ratio_extremes(x.matrix(), t);
    CHECK(par.expansion == ref.expansion);
    CHECK(par.contraction == ref.contraction);
  });
  Matrix coincident = t;
  coincident(3, 7) = coincident(7, 3) = 0.0;
  coincident(2, 9) = coincident(9, 2) = 0.0;
  const auto rc = kernels::reference::ratio_extremes(x.matrix(), coincident);
  REQUIRE(rc.coincident);
  CHECK(rc.coincident->first == 2);
  for_thread_counts([&] { CHECK(kernels::ratio_extremes(x.matrix(), coincident).coincident == rc.coincident); });
}

TEST_CASE("distances to sets") {
  std::mt19937_64 rng(83);
  const auto x = testing::random_metric(25, rng);
  Rng r = make_rng(1, "test");
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t s = 1; s <= 12; ++s) sets.push_back(sample_subset(25, s, r));
  const Matrix ref = kernels::reference::distances_to_sets(x.matrix(), sets);
  for_thread_counts([&] { CHECK(kernels::distances_to_sets(x.matrix(), sets) == ref); });
}

TEST_CASE("edge expansion scan") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = families::generate(families::RandomRegular{16, 3, seed});
    const auto ref = kernels::reference::edge_expansion_scan(g);
    for_thread_counts([&] {
      const auto par = kernels::edge_expansion_scan(g);
      CHECK(par.value == ref.value);
      CHECK(par.mask == ref.mask);
    });
  }
}

TEST_CASE("sparsest cut scan") {
  std::mt19937_64 rng(84);
  for (int trial = 0; trial < 4; ++trial) {
    const auto g = testing::random_connected_graph(14, 0.25, 4, rng);
    const auto commodities = all_pairs_commodities(14);
    const auto ref = kernels::reference::sparsest_cut_scan(g, commodities);
    REQUIRE(ref.found);
    for_thread_counts([&] {
      const auto par = kernels::sparsest_cut_scan(g, commodities);
      CHECK(par.value == ref.value);
      CHECK(par.mask == ref.mask);
    });
  }
}

TEST_CASE("Bourgain embedding is identical across thread counts") {
  std::mt19937_64 rng(85);
  const auto x = testing::random_metric(40, rng);
  BourgainParams bp;
  bp.seed = 3;
  omp_set_num_threads(1);
  const Matrix ref = bourgain_embed(x, bp).points.coords();
  for_thread_counts([&] { CHECK(bourgain_embed(x, bp).points.coords() == ref); });
}
