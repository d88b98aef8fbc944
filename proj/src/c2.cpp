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

#include "metric_forge/c2.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>

#include "metric_forge/error.hpp"
#include "metric_forge/graph_families.hpp"
#include "metric_forge/l2_embed.hpp"
#include "metric_forge/rng.hpp"

namespace mforge {

// ---------------------------------------------------------------------------
// Certificates

DualCertificate::DualCertificate(Matrix q) : q_(std::move(q)) {
  if (q_.rows() != q_.cols() || q_.rows() == 0)
    throw Error(ErrorCode::InvalidCertificate, "certificate must be a nonempty square matrix");
  if (!q_.allFinite())
    throw Error(ErrorCode::InvalidCertificate, "certificate has non-finite entries");
  const double scale = max_abs(q_);
  if (!is_symmetric(q_, 1e-9 * scale))
    throw Error(ErrorCode::InvalidCertificate, "certificate is not symmetric");
  q_ = 0.5 * (q_ + q_.transpose()).eval();
  for (Eigen::Index i = 0; i < q_.rows(); ++i) {
    const double row = q_.row(i).sum();
    if (std::abs(row) > kCertificateRowSumTol * scale)
      throw Error(ErrorCode::InvalidCertificate,
                  "row " + std::to_string(i + 1) + " sums to " + std::to_string(row),
                  {static_cast<std::size_t>(i)}, {row});
  }
  min_eigenvalue_ = mforge::min_eigenvalue(q_);
  if (min_eigenvalue_ < -kCertificatePsdTol * scale)
    throw Error(ErrorCode::InvalidCertificate,
                "certificate is not PSD (eigenvalue " + std::to_string(min_eigenvalue_) + ")",
                {}, {min_eigenvalue_});
}

namespace {

CertificateValue evaluate(const Matrix& q, const Matrix& d) {
  CertificateValue out;
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      const double d2 = d(i, j) * d(i, j);
      if (q(i, j) > 0)
        out.numerator += d2 * q(i, j);
      else if (q(i, j) < 0)
        out.denominator += d2 * -q(i, j);
    }
  if (out.denominator <= 0.0) {
    out.degenerate = true;
    out.value = 1.0;
  } else {
    out.value = std::max(1.0, std::sqrt(out.numerator / out.denominator));
  }
  return out;
}

}  // namespace

CertificateValue certificate_value(const DualCertificate& cert, const MetricSpace& x) {
  if (cert.size() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "certificate and metric sizes differ");
  return evaluate(cert.matrix(), x.matrix());
}

DualCertificate q_hypercube(std::size_t r) {
  if (r < 1) throw Error(ErrorCode::InvalidParameters, "hypercube certificate needs r >= 1");
  if (r > 12) throw Error(ErrorCode::TooLarge, "hypercube certificate limited to r <= 12");
  const std::size_t n = std::size_t{1} << r;
  const std::size_t all = n - 1;
  const auto nn = static_cast<Eigen::Index>(n);
  Matrix q = Matrix::Zero(nn, nn);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Eigen::Index>(x);
    q(xi, xi) += static_cast<double>(r) - 1.0;
    for (std::size_t b = 0; b < r; ++b)
      q(xi, static_cast<Eigen::Index>(x ^ (std::size_t{1} << b))) -= 1.0;
    q(xi, static_cast<Eigen::Index>(x ^ all)) += 1.0;
  }
  return DualCertificate(std::move(q));
}

ExpanderCertificate q_expander(const WeightedGraph& g) {
  const std::size_t n = g.order();
  const auto k = g.regular_degree();
  if (!k) throw Error(ErrorCode::NotRegular, "expander certificate needs a regular graph");
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "perfect matching needs an even vertex count");
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
  const auto spectrum = families::spectral_expansion(g);
  const double degree = static_cast<double>(*k);
  const double gap = degree - spectrum.lambda2;
  if (!(gap > 1e-9))
    throw Error(ErrorCode::NoSpectralGap, "second eigenvalue equals the degree", {},
                {spectrum.lambda2});

  // Greedy farthest-pair matching; ties go to the lexicographically first pair.
  const auto hops = g.hop_distances();
  std::vector<std::size_t> pairing(n, n);
  std::size_t min_distance = std::numeric_limits<std::size_t>::max();
  for (std::size_t round = 0; round < n / 2; ++round) {
    int best = -1;
    std::size_t bu = 0;
    std::size_t bv = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (pairing[u] != n) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (pairing[v] != n) continue;
        if (hops[u][v] > best) {
          best = hops[u][v];
          bu = u;
          bv = v;
        }
      }
    }
    pairing[bu] = bv;
    pairing[bv] = bu;
    min_distance = std::min(min_distance, static_cast<std::size_t>(best));
  }

  const auto nn = static_cast<Eigen::Index>(n);
  Matrix q = degree * Matrix::Identity(nn, nn) - g.adjacency_matrix();
  for (std::size_t v = 0; v < n; ++v) {
    const auto vi = static_cast<Eigen::Index>(v);
    q(vi, static_cast<Eigen::Index>(pairing[v])) += gap / 2.0;
    q(vi, vi) -= gap / 2.0;
  }
  try {
    return ExpanderCertificate{DualCertificate(std::move(q)), std::move(pairing), min_distance,
                               degree, spectrum.lambda2, gap};
  } catch (const Error& e) {
    throw Error(ErrorCode::CertificateCheckFailed, e.what(), e.witness(), e.values());
  }
}

// ---------------------------------------------------------------------------
// Minimum Euclidean distortion
//
// Feasibility of distortion c is posed on squared distances: find D in the
// cone K = {D : -JDJ psd} (J the centering projector) with
// d_ij^2 <= D_ij <= c^2 d_ij^2 and zero diagonal. Projection onto K is
// A - (JAJ)_+ and the discarded part (JAJ)_+ is psd with zero row sums, so
// the iterates always carry both an embedding (upper bound) and a dual
// certificate (lower bound).

namespace {

constexpr double kFeasibleResidual = 1e-8;
constexpr double kInfeasibleResidual = 1e-5;
constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix centered(const Matrix& a) {
  const Vector row_mean = a.rowwise().mean();
  const Vector col_mean = a.colwise().mean().transpose();
  const double mean = a.mean();
  Matrix c = a;
  c.colwise() -= row_mean;
  c.rowwise() -= col_mean.transpose();
  c.array() += mean;
  return c;
}

struct Spectral {
  Vector values;
  Matrix vectors;
};

Spectral eig(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (a + a.transpose()));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix positive_part(const Spectral& s) {
  const Vector lam = s.values.cwiseMax(0.0);
  return s.vectors * lam.asDiagonal() * s.vectors.transpose();
}

// Points from the negative spectrum of JAJ: Gram = -(JAJ)_- / 2.
Matrix coords_from_negative(const Spectral& s) {
  const Eigen::Index n = s.values.size();
  Matrix coords = Matrix::Zero(n, n);
  for (Eigen::Index e = 0; e < n; ++e)
    if (s.values(e) < 0) coords.col(e) = std::sqrt(-s.values(e) / 2.0) * s.vectors.col(e);
  return coords;
}

// Distortion of `coords` against distances with squares `d2`; inf if two
// images coincide.
double embedding_distortion(const Matrix& coords, const Matrix& d2) {
  const Eigen::Index n = d2.rows();
  double expand = 0.0;
  double contract = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double e2 = (coords.row(i) - coords.row(j)).squaredNorm();
      if (!(e2 > 0.0)) return kInf;
      expand = std::max(expand, e2 / d2(i, j));
      contract = std::max(contract, d2(i, j) / e2);
    }
  return std::sqrt(expand * contract);
}

enum class Verdict { Feasible, Infeasible, Ambiguous };

struct Probe {
  Verdict verdict = Verdict::Ambiguous;
  double residual = kInf;
  int iterations = 0;
};

class FeasibilitySolver {
 public:
  FeasibilitySolver(const Matrix& d2, const C2Options& options)
      : d2_(d2), options_(options), x_(d2), d2_norm_(d2.norm()) {}

  Probe probe(double c) {
    const Eigen::Index n = d2_.rows();
    const Matrix hi = c * c * d2_;
    Matrix p = Matrix::Zero(n, n);
    Matrix q = Matrix::Zero(n, n);
    x_ = x_.cwiseMax(d2_).cwiseMin(hi);
    x_.diagonal().setZero();
    Probe out;
    for (int it = 1; it <= options_.max_iterations; ++it) {
      // K step.
      const Matrix kin = x_ + p;
      const Spectral s = eig(centered(kin));
      const Matrix y = kin - positive_part(s);
      p = kin - y;
      // Box step.
      const Matrix bin = y + q;
      x_ = bin.cwiseMax(d2_).cwiseMin(hi);
      x_.diagonal().setZero();
      q = bin - x_;

      out.iterations = it;
      out.residual = (x_ - y).norm() / d2_norm_;
      const bool check = it % options_.check_every == 0 || it == options_.max_iterations ||
                         out.residual < kFeasibleResidual;
      if (!check) continue;
      offer_embedding(coords_from_negative(s));
      if (out.residual < kFeasibleResidual || upper_ <= c) {
        out.verdict = Verdict::Feasible;
        return out;
      }
      offer_certificate(positive_part(eig(centered(x_))));
      if (lower_ > c) {
        out.verdict = Verdict::Infeasible;
        return out;
      }
    }
    out.verdict = out.residual > kInfeasibleResidual ? Verdict::Infeasible : Verdict::Ambiguous;
    return out;
  }

  void offer_embedding(const Matrix& coords) {
    const double u = embedding_distortion(coords, d2_);
    if (u < upper_) {
      upper_ = u;
      best_coords_ = coords;
    }
  }

  void offer_certificate(const Matrix& w) {
    const CertificateValue v = evaluate(w, d2_.cwiseSqrt());
    if (!v.degenerate && v.value > lower_) {
      lower_ = v.value;
      best_cert_ = w;
    }
  }

  double rigorous_upper() const { return upper_; }
  double rigorous_lower() const { return lower_; }
  const Matrix& best_coords() const { return best_coords_; }
  const std::optional<Matrix>& best_cert() const { return best_cert_; }

 private:
  Matrix d2_;
  C2Options options_;
  Matrix x_;
  double d2_norm_;
  double upper_ = kInf;
  double lower_ = 1.0;
  Matrix best_coords_;
  std::optional<Matrix> best_cert_;
};

}  // namespace

C2Result c2_sdp(const MetricSpace& x, double rel_tol) {
  C2Options options;
  options.rel_tol = rel_tol;
  return c2_sdp(x, options);
}

C2Result c2_sdp(const MetricSpace& x, const C2Options& options) {
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorCode::DegenerateSpace, "c2 needs at least two points");
  if (!(options.rel_tol >= 1e-7 && options.rel_tol <= 0.1))
    throw Error(ErrorCode::InvalidParameters, "rel_tol must lie in [1e-7, 0.1]");
  if (options.max_iterations < 1 || options.check_every < 1)
    throw Error(ErrorCode::InvalidParameters, "iteration counts must be positive");

  const double diam = x.diameter();
  const Matrix dn = x.matrix() / diam;
  const Matrix d2 = dn.cwiseProduct(dn);
  const auto nn = static_cast<Eigen::Index>(n);
  FeasibilitySolver solver(d2, options);

  // Starting upper bounds: the regular simplex and one Bourgain embedding.
  solver.offer_embedding(Matrix::Identity(nn, nn));
  if (n >= 2) {
    BourgainParams bp;
    bp.seed = derive_seed(options.seed, "c2.upper");
    solver.offer_embedding(bourgain_embed(dn, bp).points.coords());
  }

  C2Result result;
  double lower = 1.0;
  double upper = solver.rigorous_upper();
  auto done = [&] { return upper - lower <= options.rel_tol * 0.5 * (upper + lower); };

  // Isometric case first: the box collapses to d^2 itself.
  if (!done()) {
    const Probe p = solver.probe(1.0);
    ++result.feasibility_tests;
    result.iterations += p.iterations;
    if (p.verdict == Verdict::Feasible) upper = 1.0;
    upper = std::min(upper, solver.rigorous_upper());
    lower = std::max(lower, solver.rigorous_lower());
  }

  while (!done()) {
    if (result.feasibility_tests >= 200)
      throw Error(ErrorCode::ConvergenceFailure, "bisection did not close the bracket", {},
                  {lower, upper});
    const double c = 0.5 * (lower + upper);
    const double old_width = upper - lower;
    const Probe p = solver.probe(c);
    ++result.feasibility_tests;
    result.iterations += p.iterations;
    if (p.verdict == Verdict::Feasible) upper = std::min(upper, c);
    if (p.verdict == Verdict::Infeasible) lower = std::max(lower, c);
    upper = std::min(upper, solver.rigorous_upper());
    lower = std::max(lower, solver.rigorous_lower());
    if (p.verdict == Verdict::Ambiguous && upper - lower >= old_width)
      throw Error(ErrorCode::ConvergenceFailure,
                  "feasibility test at c = " + std::to_string(c) + " ended with residual " +
                      std::to_string(p.residual),
                  {}, {lower, upper});
  }

  // Both bounds are measured in floating point and may cross by a few ulps.
  lower = std::min(lower, upper);
  result.lower = lower;
  result.upper = upper;
  result.value = upper == lower ? upper : 0.5 * (lower + upper);
  result.tolerance = (upper - lower) / result.value;
  Matrix coords = solver.best_coords() * diam;
  result.gram = coords * coords.transpose();
  result.embedding = PointSet(std::move(coords));
  if (solver.best_cert()) {
    try {
      result.certificate = DualCertificate(*solver.best_cert());
    } catch (const Error&) {
      // Round-off pushed the clipped matrix outside tolerance; omit it.
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Ramsey subsets

namespace {

// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

RamseyResult ramsey_subset(const MetricSpace& x, double t, double rel_tol) {
  const std::size_t n = x.size();
  if (n > 14) throw Error(ErrorCode::TooLarge, "Ramsey subset search needs n <= 14");
  if (!(t >= 1.0)) throw Error(ErrorCode::InvalidParameters, "t must be >= 1");
  const double threshold = t * (1.0 + rel_tol);
  for (std::size_t k = n; k >= 1; --k) {
    if (k <= 2) {
      std::vector<std::size_t> first(k);
      for (std::size_t i = 0; i < k; ++i) first[i] = i;
      return {first, k, 1.0};
    }
    const auto subsets = combinations(n, k);
    const auto count = static_cast<std::int64_t>(subsets.size());
    std::atomic<std::int64_t> winner{count};
    std::vector<double> values(subsets.size(), kInf);
    std::vector<std::string> failures(subsets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      if (i > winner.load()) continue;
      try {
        const double c2 = c2_sdp(x.restrict_to(subsets[static_cast<std::size_t>(i)]), rel_tol).value;
        values[static_cast<std::size_t>(i)] = c2;
        if (c2 <= threshold) {
          std::int64_t cur = winner.load();
          while (i < cur && !winner.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (const Error& e) {
        failures[static_cast<std::size_t>(i)] = e.what();
      }
    }
    const std::int64_t w = winner.load();
    for (std::int64_t i = 0; i < std::min(w + 1, count); ++i)
      if (!failures[static_cast<std::size_t>(i)].empty())
        throw Error(ErrorCode::ConvergenceFailure, failures[static_cast<std::size_t>(i)]);
    if (w < count) {
      const auto& s = subsets[static_cast<std::size_t>(w)];
      return {s, k, values[static_cast<std::size_t>(w)]};
    }
  }
  return {{0}, 1, 1.0};
}

}  // namespace mforge
