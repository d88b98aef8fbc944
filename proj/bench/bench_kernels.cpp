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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "metric_forge/flowcut.hpp"
#include "metric_forge/graph_families.hpp"
#include "metric_forge/kernels.hpp"
#include "metric_forge/rng.hpp"

namespace {

using namespace mforge;

WeightedGraph regular_graph(std::size_t n) {
  return families::generate(families::RandomRegular{n, 3, 7});
}

mforge::Matrix random_coords(std::size_t n, std::size_t d) {
  Rng rng = make_rng(11, "bench.coords");
  std::normal_distribution<double> gauss;
  mforge::Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = gauss(rng);
  return m;
}

template <bool Parallel>
void BM_Apsp(benchmark::State& state) {
  const auto g = regular_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::all_pairs_shortest_paths(g));
    else
      benchmark::DoNotOptimize(kernels::reference::all_pairs_shortest_paths(g));
  }
}

template <bool Parallel>
void BM_PairwiseL2(benchmark::State& state) {
  const auto x = random_coords(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::pairwise_distances(x, Norm::L2));
    else
      benchmark::DoNotOptimize(kernels::reference::pairwise_distances(x, Norm::L2));
  }
}

template <bool Parallel>
void BM_EdgeExpansion(benchmark::State& state) {
  const auto g = regular_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::edge_expansion_scan(g));
    else
      benchmark::DoNotOptimize(kernels::reference::edge_expansion_scan(g));
  }
}

template <bool Parallel>
void BM_SparsestCut(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto g = regular_graph(n);
  const auto commodities = all_pairs_commodities(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::sparsest_cut_scan(g, commodities));
    else
      benchmark::DoNotOptimize(kernels::reference::sparsest_cut_scan(g, commodities));
  }
}

}  // namespace

BENCHMARK(BM_Apsp<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_Apsp<true>)->Arg(64)->Arg(256);
BENCHMARK(BM_PairwiseL2<false>)->Arg(256)->Arg(1024);
BENCHMARK(BM_PairwiseL2<true>)->Arg(256)->Arg(1024);
BENCHMARK(BM_EdgeExpansion<false>)->Arg(16)->Arg(20);
BENCHMARK(BM_EdgeExpansion<true>)->Arg(16)->Arg(20);
BENCHMARK(BM_SparsestCut<false>)->Arg(14)->Arg(18);
BENCHMARK(BM_SparsestCut<true>)->Arg(14)->Arg(18);

BENCHMARK_MAIN();
