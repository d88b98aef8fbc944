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

// Shared fixtures and independent oracles for the test binaries. Nothing in
// here calls into the library routine it is used to check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "metric_forge/flowcut.hpp"
#include "metric_forge/graph.hpp"
#include "metric_forge/graph_families.hpp"
#include "metric_forge/metric.hpp"

namespace testing {

using mforge::Matrix;
using mforge::MetricSpace;
using mforge::WeightedGraph;

inline WeightedGraph graph_of(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<mforge::Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1.0, 1.0});
  return WeightedGraph(n, std::move(edges));
}

/// Floyd-Warshall closure, used as an oracle against the Dijkstra kernel.
inline Matrix floyd_warshall(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Matrix d = Matrix::Constant(n, n, std::numeric_limits<double>::infinity());
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = 0.0;
  for (const auto& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    d(u, v) = d(v, u) = std::min(d(u, v), e.length);
  }
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return d;
}

/// A random metric: shortest-path closure of a complete graph with lengths
/// drawn from [lo, hi].
inline MetricSpace random_metric(std::size_t n, std::mt19937_64& rng, double lo = 1.0, double hi = 2.0) {
  std::uniform_real_distribution<double> len(lo, hi);
  std::vector<mforge::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, len(rng), 1.0});
  return MetricSpace(floyd_warshall(WeightedGraph(n, std::move(edges))));
}

/// Like random_metric with integer lengths, so every triangle inequality
/// holds exactly in floating point.
inline MetricSpace random_integer_metric(std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> len(lo, hi);
  std::vector<mforge::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, static_cast<double>(len(rng)), 1.0});
  return MetricSpace(floyd_warshall(WeightedGraph(n, std::move(edges))));
}

inline Matrix random_points(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix p(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) p(i, j) = g(rng);
  return p;
}

inline MetricSpace equilateral(std::size_t n) {
  Matrix d = Matrix::Ones(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  d.diagonal().setZero();
  return MetricSpace(d);
}

inline MetricSpace star_metric() {
  return MetricSpace(floyd_warshall(mforge::families::generate(mforge::families::Star{3})));
}

inline MetricSpace graph_metric(const mforge::families::FamilySpec& spec) {
  return MetricSpace(floyd_warshall(mforge::families::generate(spec)));
}

/// Distortion of a planar configuration of K_{1,3}: root at the origin and
/// leaves at the given points.
inline double star_planar_distortion(const std::vector<Eigen::Vector2d>& pts) {
  const double src[4][4] = {{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}};
  double expansion = 0.0;
  double contraction = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double t = (pts[i] - pts[j]).norm();
      if (t == 0.0) return std::numeric_limits<double>::infinity();
      expansion = std::max(expansion, t / src[i][j]);
      contraction = std::max(contraction, src[i][j] / t);
    }
  return expansion * contraction;
}

/// Grid search over the three leaf directions and radii, followed by
/// coordinate-wise pattern refinement. Returns the least distortion found.
inline double star_planar_oracle() {
  constexpr double kPi = 3.14159265358979323846;
  auto config = [](const std::vector<double>& p) {
    std::vector<Eigen::Vector2d> pts(4);
    pts[0] = {0, 0};
    for (int i = 0; i < 3; ++i) pts[i + 1] = p[3 + i] * Eigen::Vector2d(std::cos(p[i]), std::sin(p[i]));
    return pts;
  };
  std::vector<double> best{0, 0, 0, 1, 1, 1};
  double best_val = std::numeric_limits<double>::infinity();
  const int steps = 24;
  for (int a = 0; a < steps; ++a)
    for (int b = a + 1; b < steps; ++b)
      for (double r = 0.8; r <= 1.21; r += 0.1) {
        std::vector<double> p{0.0, 2 * kPi * a / steps, 2 * kPi * b / steps, 1.0, r, r};
        const double v = star_planar_distortion(config(p));
        if (v < best_val) {
          best_val = v;
          best = p;
        }
      }
  for (double step = 0.1; step > 1e-10; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t k = 1; k < best.size(); ++k)
        for (double sgn : {-1.0, 1.0}) {
          auto p = best;
          p[k] += sgn * step;
          const double v = star_planar_distortion(config(p));
          if (v < best_val) {
            best_val = v;
            best = p;
            improved = true;
          }
        }
    }
  }
  return best_val;
}

struct CutOracle {
  double gamma = std::numeric_limits<double>::infinity();
  std::uint64_t mask = 0;
};

/// Direct enumeration of every vertex subset, independent of the scan kernel.
inline CutOracle enumerate_cuts(const mforge::FlowInstance& inst) {
  const std::size_t n = inst.graph.order();
  CutOracle best;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    double cap = 0.0;
    double dem = 0.0;
    for (const auto& e : inst.graph.edges())
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) cap += e.capacity;
    for (const auto& c : inst.commodities)
      if (((mask >> c.source) & 1) != ((mask >> c.sink) & 1)) dem += c.demand;
    if (dem > 0 && cap / dem < best.gamma) {
      best.gamma = cap / dem;
      best.mask = mask;
    }
  }
  return best;
}

/// Minimum s-t cut capacity by enumeration.
inline double min_st_cut(const WeightedGraph& g, std::size_t s, std::size_t t) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    if (!((mask >> s) & 1) || ((mask >> t) & 1)) continue;
    double cap = 0.0;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) cap += e.capacity;
    best = std::min(best, cap);
  }
  return best;
}

/// Exact bandwidth by trying all n! orderings.
inline std::size_t bandwidth_by_permutation(const WeightedGraph& g) {
  std::vector<std::size_t> pos(g.order());
  std::iota(pos.begin(), pos.end(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  do {
    std::size_t w = 0;
    for (const auto& e : g.edges())
      w = std::max(w, pos[e.u] > pos[e.v] ? pos[e.u] - pos[e.v] : pos[e.v] - pos[e.u]);
    best = std::min(best, w);
  } while (std::next_permutation(pos.begin(), pos.end()));
  return best;
}

/// Connected random graph on n vertices: a random spanning tree plus extra
/// edges with integer capacities in [1, max_cap].
inline WeightedGraph random_connected_graph(std::size_t n, double extra_prob, int max_cap,
                                            std::mt19937_64& rng) {
  std::vector<mforge::Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::uniform_int_distribution<int> cap(1, max_cap);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    const std::size_t u = parent(rng);
    used[u][v] = used[v][u] = true;
    edges.push_back({u, v, 1.0, static_cast<double>(cap(rng))});
  }
  std::bernoulli_distribution extra(extra_prob);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!used[u][v] && extra(rng)) edges.push_back({u, v, 1.0, static_cast<double>(cap(rng))});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace testing
