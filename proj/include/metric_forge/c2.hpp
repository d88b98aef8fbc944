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
#include <vector>

#include "metric_forge/graph.hpp"
#include "metric_forge/metric.hpp"

namespace mforge {

/// PSD tolerance for certificates, relative to max |q|.
inline constexpr double kCertificatePsdTol = 1e-8;
/// Row-sum tolerance for certificates, relative to max |q|.
inline constexpr double kCertificateRowSumTol = 1e-9;

/// A symmetric positive semidefinite matrix with zero row sums. Any such
/// matrix lower-bounds the Euclidean distortion of every metric of the same
/// size through certificate_value().
class DualCertificate {
 public:
  /// Throws InvalidCertificate (values() = {min eigenvalue} or witness() =
  /// {offending row}) when `q` is not a certificate.
  explicit DualCertificate(Matrix q);

  const Matrix& matrix() const noexcept { return q_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(q_.rows()); }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  Matrix q_;
  double min_eigenvalue_ = 0.0;
};

struct CertificateValue {
  /// sqrt(numerator / denominator), floored at the trivial bound 1.
  double value = 1.0;
  /// Set when no entry of q is negative on a positive-distance pair; the
  /// bound is vacuous and value is reported as 1.
  bool degenerate = false;
  double numerator = 0.0;    // sum over q_ij > 0 of d_ij^2 q_ij
  double denominator = 0.0;  // sum over q_ij < 0 of d_ij^2 |q_ij|
};

CertificateValue certificate_value(const DualCertificate& cert, const MetricSpace& x);

/// (r-1)I - A + P on the r-cube, P the antipodal map. r <= 12.
DualCertificate q_hypercube(std::size_t r);

struct ExpanderCertificate {
  DualCertificate certificate;
  /// pairing[v] is the vertex matched with v.
  std::vector<std::size_t> pairing;
  std::size_t min_pair_distance = 0;
  double degree = 0.0;
  double lambda2 = 0.0;
  double gap = 0.0;
};

/// kI - A + (gap/2)(P - I) with P a greedy farthest-pair perfect matching.
ExpanderCertificate q_expander(const WeightedGraph& g);

struct C2Options {
  double rel_tol = 1e-3;
  /// Projection iterations per feasibility test.
  int max_iterations = 20000;
  /// Iterations between bound extractions (embedding distortion and
  /// certificate value of the current iterates).
  int check_every = 20;
  std::uint64_t seed = 0;
};

struct C2Result {
  double value = 1.0;
  /// Gram matrix of the best embedding found (original distance units).
  Matrix gram;
  /// Points realizing `gram`, rows in source order.
  PointSet embedding;
  std::optional<DualCertificate> certificate;
  /// Final bracket width relative to value.
  double tolerance = 0.0;
  double lower = 1.0;
  double upper = 1.0;
  int feasibility_tests = 0;
  long long iterations = 0;
};

/// Least Euclidean distortion by bracketed search over c with alternating
/// projections for each feasibility test. 1e-7 <= rel_tol <= 0.1.
C2Result c2_sdp(const MetricSpace& x, double rel_tol = 1e-3);
C2Result c2_sdp(const MetricSpace& x, const C2Options& options);

struct RamseyResult {
  std::vector<std::size_t> subset;
  std::size_t size = 0;
  double c2 = 1.0;
};

/// Largest subset (lexicographically first among ties) whose restricted
/// metric has c2 <= t (1 + rel_tol). n <= 14.
RamseyResult ramsey_subset(const MetricSpace& x, double t, double rel_tol = 1e-3);

}  // namespace mforge
