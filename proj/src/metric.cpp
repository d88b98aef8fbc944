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

#include "metric_forge/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "metric_forge/error.hpp"
#include "metric_forge/kernels.hpp"

namespace mforge {

namespace {

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

void require_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorCode::MalformedInput, "distance matrix must be square, n >= 1");
  if (!m.allFinite())
    throw Error(ErrorCode::MalformedInput, "distance matrix has non-finite entries");
}

// Shared checks for metrics and semimetrics; returns the symmetrized matrix.
Matrix check_distances(const Matrix& m, bool allow_zero) {
  require_square(m);
  const Eigen::Index n = m.rows();
  const double scale = std::max(max_abs(m), 1e-300);
  const double tol = kMetricRelTol * scale;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, i) != 0.0)
      throw Error(ErrorCode::MalformedInput,
                  "nonzero diagonal at point " + one_based(static_cast<std::size_t>(i)));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      if (std::abs(m(i, j) - m(j, i)) > tol)
        throw Error(ErrorCode::AsymmetricMatrix,
                    "d(" + one_based(ui) + "," + one_based(uj) + ") != d(" +
                        one_based(uj) + "," + one_based(ui) + ")",
                    {ui, uj});
      if (m(i, j) < 0.0 || m(j, i) < 0.0)
        throw Error(ErrorCode::NegativeDistance,
                    "negative distance between " + one_based(ui) + " and " + one_based(uj),
                    {ui, uj});
      if (!allow_zero && (m(i, j) == 0.0 || m(j, i) == 0.0))
        throw Error(ErrorCode::ZeroOffDiagonal,
                    "distinct points " + one_based(ui) + " and " + one_based(uj) +
                        " at distance 0",
                    {ui, uj});
    }
  }
  Matrix sym = 0.5 * (m + m.transpose());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == i) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double via = sym(i, j) + sym(j, k);
        if (sym(i, k) > via + kMetricRelTol * std::max(via, sym(i, k))) {
          const auto a = static_cast<std::size_t>(i);
          const auto b = static_cast<std::size_t>(j);
          const auto c = static_cast<std::size_t>(k);
          throw Error(ErrorCode::TriangleViolation,
                      "d(" + one_based(a) + "," + one_based(c) + ") > d(" + one_based(a) +
                          "," + one_based(b) + ") + d(" + one_based(b) + "," +
                          one_based(c) + ")",
                      {a, b, c});
        }
      }
    }
  }
  return sym;
}

}  // namespace

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::Linf: return "linf";
  }
  return "l2";
}

Norm parse_norm(const std::string& text) {
  if (text == "l1" || text == "1") return Norm::L1;
  if (text == "l2" || text == "2") return Norm::L2;
  if (text == "linf" || text == "inf") return Norm::Linf;
  throw Error(ErrorCode::InvalidParameters, "unknown norm '" + text + "'");
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.u >= n || ed.v >= n)
      throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
    if (ed.u == ed.v)
      throw Error(ErrorCode::MalformedInput, "self-loop at vertex " + one_based(ed.u));
    if (!std::isfinite(ed.length) || !std::isfinite(ed.capacity) || ed.length < 0 ||
        ed.capacity < 0)
      throw Error(ErrorCode::MalformedInput,
                  "edge lengths and capacities must be finite and nonnegative");
    if (!seen.emplace(std::min(ed.u, ed.v), std::max(ed.u, ed.v)).second)
      throw Error(ErrorCode::MalformedInput, "duplicate edge " + one_based(ed.u) +
                                                 "-" + one_based(ed.v));
    adjacency_[ed.u].emplace_back(ed.v, e);
    adjacency_[ed.v].emplace_back(ed.u, e);
  }
}

bool WeightedGraph::is_connected() const {
  if (n_ == 0) return true;
  const auto hops = hop_distances();
  return std::none_of(hops[0].begin(), hops[0].end(), [](int h) { return h < 0; });
}

bool WeightedGraph::has_unit_lengths() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.length == 1.0; });
}

std::optional<std::size_t> WeightedGraph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t k = degree(0);
  for (std::size_t v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

Matrix WeightedGraph::adjacency_matrix() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Matrix a = Matrix::Zero(n, n);
  for (const auto& e : edges_) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  return a;
}

std::vector<std::vector<int>> WeightedGraph::hop_distances() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, -1));
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n_; ++s) {
    auto& row = out[s];
    queue.assign(1, s);
    row[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (auto [v, e] : adjacency_[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// MetricSpace

MetricSpace::MetricSpace(Matrix dist, std::vector<std::string> labels)
    : dist_(check_distances(dist, false)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != size())
    throw Error(ErrorCode::MalformedInput, "label count does not match point count");
}

double MetricSpace::diameter() const { return dist_.maxCoeff(); }

double MetricSpace::min_positive_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dist_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < dist_.cols(); ++j) best = std::min(best, dist_(i, j));
  return best;
}

MetricSpace MetricSpace::restrict_to(const std::vector<std::size_t>& points) const {
  const auto k = static_cast<Eigen::Index>(points.size());
  Matrix sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b)
      sub(a, b) = (*this)(points[static_cast<std::size_t>(a)],
                          points[static_cast<std::size_t>(b)]);
  std::vector<std::string> labels;
  if (!labels_.empty())
    for (std::size_t p : points) labels.push_back(labels_[p]);
  return MetricSpace(std::move(sub), std::move(labels));
}

MetricSpace MetricSpace::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw Error(ErrorCode::InvalidParameters, "scale factor must be positive");
  return MetricSpace(dist_ * factor, labels_);
}

MetricSpace validate_metric(const Matrix& matrix) { return MetricSpace(matrix); }

Matrix validate_semimetric(const Matrix& matrix) { return check_distances(matrix, true); }

MetricSpace shortest_path_metric(const WeightedGraph& g) {
  if (g.order() == 0) throw Error(ErrorCode::MalformedInput, "empty graph");
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  for (const auto& e : g.edges())
    if (e.length <= 0.0)
      throw Error(ErrorCode::ZeroOffDiagonal,
                  "zero-length edge " + one_based(e.u) + "-" + one_based(e.v) +
                      " collapses two vertices",
                  {e.u, e.v});
  return MetricSpace(kernels::all_pairs_shortest_paths(g));
}

// ---------------------------------------------------------------------------
// PointSet & distortion

PointSet::PointSet(Matrix coords) : coords_(std::move(coords)) {
  if (!coords_.allFinite())
    throw Error(ErrorCode::MalformedInput, "point coordinates must be finite");
}

Matrix PointSet::distances(Norm norm) const {
  return kernels::pairwise_distances(coords_, norm);
}

Matrix PointSet::squared_euclidean() const {
  Matrix d = distances(Norm::L2);
  return d.cwiseProduct(d);
}

DistortionReport distortion(const Matrix& source, const Matrix& target) {
  if (source.rows() != target.rows() || source.cols() != target.cols())
    throw Error(ErrorCode::DimensionMismatch, "source and target sizes differ");
  if (source.rows() < 2) return {};
  const auto ext = kernels::ratio_extremes(source, target);
  if (ext.coincident)
    throw Error(ErrorCode::CoincidentImages,
                "points " + one_based(ext.coincident->first) + " and " +
                    one_based(ext.coincident->second) + " share an image",
                {ext.coincident->first, ext.coincident->second});
  return {ext.expansion, ext.contraction, ext.expansion * ext.contraction};
}

DistortionReport distortion(const MetricMap& map) {
  const std::size_t n = map.source.size();
  if (map.assignment.size() != n)
    throw Error(ErrorCode::MalformedInput, "assignment must be total on the source");
  const Matrix full = std::visit(
      [](const auto& t) -> Matrix {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, MetricSpace>)
          return t.matrix();
        else
          return t.points.distances(t.norm);
      },
      map.target);
  std::set<std::size_t> used;
  for (std::size_t a : map.assignment) {
    if (a >= static_cast<std::size_t>(full.rows()))
      throw Error(ErrorCode::MalformedInput, "assignment points outside the target");
    if (!used.insert(a).second)
      throw Error(ErrorCode::MalformedInput, "assignment is not injective");
  }
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix target(nn, nn);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = 0; j < nn; ++j)
      target(i, j) = full(static_cast<Eigen::Index>(map.assignment[static_cast<std::size_t>(i)]),
                          static_cast<Eigen::Index>(map.assignment[static_cast<std::size_t>(j)]));
  return distortion(map.source.matrix(), target);
}

DistortionReport distortion(const MetricSpace& x, const PointSet& points, Norm norm) {
  if (points.size() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "point count does not match the metric");
  return distortion(x.matrix(), points.distances(norm));
}

// ---------------------------------------------------------------------------
// Cut metrics, Frechet, square-l2

Matrix cut_metric(std::size_t n, const std::vector<std::size_t>& s) {
  std::vector<bool> in(n, false);
  for (std::size_t v : s) {
    if (v >= n) throw Error(ErrorCode::MalformedInput, "subset element out of range");
    in[v] = true;
  }
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix d = Matrix::Zero(nn, nn);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = 0; j < nn; ++j)
      if (in[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>(j)]) d(i, j) = 1.0;
  return d;
}

PointSet frechet_linf_embed(const MetricSpace& x) { return PointSet(x.matrix()); }

SquareL2Result is_square_l2(const Matrix& m, std::size_t basepoint) {
  require_square(m);
  const Eigen::Index n = m.rows();
  if (basepoint >= static_cast<std::size_t>(n))
    throw Error(ErrorCode::MalformedInput, "basepoint out of range");
  const double scale = max_abs(m);
  if (!is_symmetric(m, kMetricRelTol * std::max(scale, 1e-300)))
    throw Error(ErrorCode::MalformedInput, "matrix is not symmetric");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) throw Error(ErrorCode::MalformedInput, "diagonal must be zero");
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) < 0.0) throw Error(ErrorCode::MalformedInput, "entries must be nonnegative");
  }

  SquareL2Result result;
  try {
    validate_metric(m);
    result.metric = true;
  } catch (const Error&) {
    result.metric = false;
  }

  const auto b = static_cast<Eigen::Index>(basepoint);
  std::vector<Eigen::Index> others;
  for (Eigen::Index i = 0; i < n; ++i)
    if (i != b) others.push_back(i);
  const auto k = static_cast<Eigen::Index>(others.size());
  if (k == 0) {
    result.member = true;
    result.witness = PointSet(Matrix::Zero(1, 1));
    return result;
  }
  Matrix gram(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index c = 0; c < k; ++c) {
      const auto i = others[static_cast<std::size_t>(a)];
      const auto j = others[static_cast<std::size_t>(c)];
      gram(a, c) = 0.5 * (m(b, i) + m(b, j) - m(i, j));
    }
  const auto eig = jacobi_eigen(gram);
  result.min_eigenvalue = eig.values(0);
  const double tol = 1e-9 * std::max(scale, 1e-300);
  result.member = result.min_eigenvalue >= -tol;
  if (result.member) {
    Matrix coords = Matrix::Zero(n, k);
    for (Eigen::Index e = 0; e < k; ++e) {
      const double lambda = std::max(eig.values(e), 0.0);
      const double root = std::sqrt(lambda);
      for (Eigen::Index a = 0; a < k; ++a)
        coords(others[static_cast<std::size_t>(a)], e) = root * eig.vectors(a, e);
    }
    result.witness = PointSet(std::move(coords));
  }
  return result;
}

}  // namespace mforge
