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

#include "metric_forge/kernels.hpp"

#include <omp.h>

#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "metric_forge/error.hpp"

namespace mforge::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void dijkstra_row(const WeightedGraph& g, std::size_t src, Matrix& out) {
  using Item = std::pair<double, std::size_t>;
  const auto row = static_cast<Eigen::Index>(src);
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  out(row, row) = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (du > out(row, static_cast<Eigen::Index>(u))) continue;
    for (auto [v, e] : g.neighbours(u)) {
      const double nd = du + g.edges()[e].length;
      auto& cur = out(row, static_cast<Eigen::Index>(v));
      if (nd < cur) {
        cur = nd;
        heap.emplace(nd, v);
      }
    }
  }
}

double norm_distance(const Matrix& coords, Eigen::Index i, Eigen::Index j,
                     Norm norm) {
  const auto diff = coords.row(i) - coords.row(j);
  switch (norm) {
    case Norm::L1: return diff.cwiseAbs().sum();
    case Norm::L2: return std::sqrt(diff.squaredNorm());
    case Norm::Linf:
      return diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
  }
  return 0.0;
}

struct RowExtremes {
  double expansion = 0.0;
  double contraction = 0.0;
  std::optional<std::size_t> coincident;
};

RowExtremes row_extremes(const Matrix& source, const Matrix& target,
                         Eigen::Index i) {
  RowExtremes r;
  for (Eigen::Index j = i + 1; j < source.cols(); ++j) {
    const double s = source(i, j);
    const double t = target(i, j);
    if (t == 0.0) {
      if (!r.coincident) r.coincident = static_cast<std::size_t>(j);
      continue;
    }
    r.expansion = std::max(r.expansion, t / s);
    r.contraction = std::max(r.contraction, s / t);
  }
  return r;
}

RatioExtremes combine_rows(const std::vector<RowExtremes>& rows) {
  RatioExtremes out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.expansion = std::max(out.expansion, rows[i].expansion);
    out.contraction = std::max(out.contraction, rows[i].contraction);
    if (!out.coincident && rows[i].coincident)
      out.coincident = std::make_pair(i, *rows[i].coincident);
  }
  return out;
}

double set_distance(const Matrix& dist, Eigen::Index x,
                    const std::vector<std::size_t>& set) {
  double best = kInf;
  for (std::size_t y : set)
    best = std::min(best, dist(x, static_cast<Eigen::Index>(y)));
  return best;
}

std::vector<std::uint64_t> neighbour_masks(const WeightedGraph& g) {
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

// Candidate value for mask, or NaN when the mask is not admissible.
double expansion_value(const std::vector<std::uint64_t>& adj, std::size_t n,
                       std::uint64_t mask) {
  const int size = std::popcount(mask);
  if (2 * static_cast<std::size_t>(size) > n) return std::nan("");
  std::uint64_t rest = mask;
  int cut = 0;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    cut += std::popcount(adj[static_cast<std::size_t>(v)] & ~mask);
  }
  return static_cast<double>(cut) / size;
}

struct CutTerms {
  std::vector<std::size_t> eu, ev, cs, ct;
  std::vector<double> cap, dem;
};

CutTerms cut_terms(const WeightedGraph& g, const std::vector<Commodity>& cs) {
  CutTerms t;
  for (const auto& e : g.edges()) {
    t.eu.push_back(e.u);
    t.ev.push_back(e.v);
    t.cap.push_back(e.capacity);
  }
  for (const auto& c : cs) {
    t.cs.push_back(c.source);
    t.ct.push_back(c.sink);
    t.dem.push_back(c.demand);
  }
  return t;
}

double gamma_value(const CutTerms& t, std::uint64_t mask) {
  auto side = [mask](std::size_t v) { return (mask >> v) & 1U; };
  double dem = 0.0;
  for (std::size_t i = 0; i < t.dem.size(); ++i)
    if (side(t.cs[i]) != side(t.ct[i])) dem += t.dem[i];
  if (dem <= 0.0) return std::nan("");
  double cap = 0.0;
  for (std::size_t i = 0; i < t.cap.size(); ++i)
    if (side(t.eu[i]) != side(t.ev[i])) cap += t.cap[i];
  return cap / dem;
}

void offer(MaskScan& best, double value, std::uint64_t mask) {
  if (std::isnan(value)) return;
  if (!best.found || value < best.value ||
      (value == best.value && mask < best.mask)) {
    best.value = value;
    best.mask = mask;
    best.found = true;
  }
}

template <class Eval>
MaskScan parallel_scan(std::uint64_t begin, std::uint64_t end, Eval eval) {
  MaskScan best;
#pragma omp parallel
  {
    MaskScan local;
#pragma omp for schedule(static) nowait
    for (std::int64_t m = static_cast<std::int64_t>(begin);
         m < static_cast<std::int64_t>(end); ++m) {
      const auto mask = static_cast<std::uint64_t>(m);
      offer(local, eval(mask), mask);
    }
#pragma omp critical(mforge_mask_scan)
    if (local.found) offer(best, local.value, local.mask);
  }
  return best;
}

void require_mask_width(std::size_t n) {
  if (n > 63) throw Error(ErrorCode::TooLarge, "bitmask scans need n <= 63");
}

}  // namespace

Matrix all_pairs_shortest_paths(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Matrix out = Matrix::Constant(n, n, kInf);
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index s = 0; s < n; ++s)
    dijkstra_row(g, static_cast<std::size_t>(s), out);
  return out;
}

Matrix pairwise_distances(const Matrix& coords, Norm norm) {
  const Eigen::Index n = coords.rows();
  Matrix out = Matrix::Zero(n, n);
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      out(i, j) = out(j, i) = norm_distance(coords, i, j, norm);
  return out;
}

RatioExtremes ratio_extremes(const Matrix& source, const Matrix& target) {
  const Eigen::Index n = source.rows();
  std::vector<RowExtremes> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] = row_extremes(source, target, i);
  return combine_rows(rows);
}

Matrix distances_to_sets(const Matrix& dist,
                         const std::vector<std::vector<std::size_t>>& sets) {
  const Eigen::Index n = dist.rows();
  const auto m = static_cast<Eigen::Index>(sets.size());
  Matrix out(n, m);
#pragma omp parallel for schedule(static)
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index x = 0; x < n; ++x)
      out(x, s) = set_distance(dist, x, sets[static_cast<std::size_t>(s)]);
  return out;
}

MaskScan edge_expansion_scan(const WeightedGraph& g) {
  const std::size_t n = g.order();
  require_mask_width(n);
  const auto adj = neighbour_masks(g);
  return parallel_scan(1, std::uint64_t{1} << n, [&](std::uint64_t mask) {
    return expansion_value(adj, n, mask);
  });
}

MaskScan sparsest_cut_scan(const WeightedGraph& g,
                           const std::vector<Commodity>& commodities) {
  const std::size_t n = g.order();
  require_mask_width(n);
  if (n < 2) return {};
  const auto terms = cut_terms(g, commodities);
  return parallel_scan(1, std::uint64_t{1} << (n - 1),
                       [&](std::uint64_t mask) { return gamma_value(terms, mask); });
}

namespace reference {

Matrix all_pairs_shortest_paths(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Matrix out = Matrix::Constant(n, n, kInf);
  for (Eigen::Index s = 0; s < n; ++s)
    dijkstra_row(g, static_cast<std::size_t>(s), out);
  return out;
}

Matrix pairwise_distances(const Matrix& coords, Norm norm) {
  const Eigen::Index n = coords.rows();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      out(i, j) = out(j, i) = norm_distance(coords, i, j, norm);
  return out;
}

RatioExtremes ratio_extremes(const Matrix& source, const Matrix& target) {
  const Eigen::Index n = source.rows();
  std::vector<RowExtremes> rows;
  for (Eigen::Index i = 0; i < n; ++i)
    rows.push_back(row_extremes(source, target, i));
  return combine_rows(rows);
}

Matrix distances_to_sets(const Matrix& dist,
                         const std::vector<std::vector<std::size_t>>& sets) {
  const Eigen::Index n = dist.rows();
  Matrix out(n, static_cast<Eigen::Index>(sets.size()));
  for (Eigen::Index x = 0; x < n; ++x)
    for (std::size_t s = 0; s < sets.size(); ++s)
      out(x, static_cast<Eigen::Index>(s)) = set_distance(dist, x, sets[s]);
  return out;
}

MaskScan edge_expansion_scan(const WeightedGraph& g) {
  const std::size_t n = g.order();
  require_mask_width(n);
  const auto adj = neighbour_masks(g);
  MaskScan best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    offer(best, expansion_value(adj, n, mask), mask);
  return best;
}

MaskScan sparsest_cut_scan(const WeightedGraph& g,
                           const std::vector<Commodity>& commodities) {
  const std::size_t n = g.order();
  require_mask_width(n);
  MaskScan best;
  if (n < 2) return best;
  const auto terms = cut_terms(g, commodities);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask)
    offer(best, gamma_value(terms, mask), mask);
  return best;
}

}  // namespace reference

}  // namespace mforge::kernels
