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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metric_forge/graph.hpp"
#include "metric_forge/linalg.hpp"

namespace mforge {

/// Relative tolerance used by every metric validation.
inline constexpr double kMetricRelTol = 1e-9;

enum class Norm { L1, L2, Linf };

std::string to_string(Norm norm);
Norm parse_norm(const std::string& text);

/// A validated finite metric space.
///
/// Distances are symmetric, zero exactly on the diagonal, strictly positive
/// off it, and satisfy the triangle inequality up to relative 1e-9. The
/// stored matrix is exactly symmetric.
class MetricSpace {
 public:
  /// Validates `dist` and throws on the first violated axiom.
  explicit MetricSpace(Matrix dist, std::vector<std::string> labels = {});

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(dist_.rows());
  }
  double operator()(std::size_t i, std::size_t j) const {
    return dist_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& matrix() const noexcept { return dist_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  double diameter() const;
  double min_positive_distance() const;
  MetricSpace restrict_to(const std::vector<std::size_t>& points) const;
  MetricSpace scaled(double factor) const;

 private:
  Matrix dist_;
  std::vector<std::string> labels_;
};

MetricSpace validate_metric(const Matrix& matrix);

/// Weaker validation for semimetrics: zero distances between distinct points
/// are allowed, everything else as for MetricSpace. Returns the symmetrized
/// matrix.
Matrix validate_semimetric(const Matrix& matrix);

MetricSpace shortest_path_metric(const WeightedGraph& g);

/// Points as rows of a dense matrix.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(Matrix coords);

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(coords_.rows());
  }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(coords_.cols());
  }
  const Matrix& coords() const noexcept { return coords_; }
  Eigen::VectorXd point(std::size_t i) const {
    return coords_.row(static_cast<Eigen::Index>(i)).transpose();
  }

  Matrix distances(Norm norm) const;
  Matrix squared_euclidean() const;

 private:
  Matrix coords_;
};

struct NormedPoints {
  PointSet points;
  Norm norm = Norm::L2;
};

/// A map between finite spaces: source point i goes to target point
/// assignment[i].
struct MetricMap {
  MetricSpace source;
  std::variant<MetricSpace, NormedPoints> target;
  std::vector<std::size_t> assignment;
};

struct DistortionReport {
  double expansion = 1.0;
  double contraction = 1.0;
  double distortion = 1.0;
};

/// Expansion, contraction and their product. Throws CoincidentImages when two
/// distinct points share an image; a source with fewer than two points has
/// distortion 1.
DistortionReport distortion(const MetricMap& map);
/// Identity assignment of `x` onto `points` under `norm`.
DistortionReport distortion(const MetricSpace& x, const PointSet& points,
                            Norm norm);
/// Distortion between two distance matrices on the same index set.
DistortionReport distortion(const Matrix& source, const Matrix& target);

/// The 0/1 cut semimetric of `s` on n points.
Matrix cut_metric(std::size_t n, const std::vector<std::size_t>& s);

/// Isometric embedding into l_inf^n: point i has coordinates d(i, .).
PointSet frechet_linf_embed(const MetricSpace& x);

struct SquareL2Result {
  bool member = false;
  /// Whether the matrix itself also passes validate_metric (membership in the
  /// cone of square-l2 metrics requires both flags).
  bool metric = false;
  std::optional<PointSet> witness;
  double min_eigenvalue = 0.0;
};

/// Tests whether `m` is a matrix of squared Euclidean distances by centering
/// at `basepoint` and checking the resulting Gram matrix for PSD-ness.
SquareL2Result is_square_l2(const Matrix& m, std::size_t basepoint = 0);

}  // namespace mforge
