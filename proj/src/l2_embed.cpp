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

#include "metric_forge/l2_embed.hpp"

#include <cmath>

#include "metric_forge/error.hpp"
#include "metric_forge/kernels.hpp"
#include "metric_forge/rng.hpp"

namespace mforge {

std::vector<std::size_t> bourgain_scales(std::size_t n) {
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; 2 * s <= n; s *= 2) sizes.push_back(s);
  return sizes;
}

std::size_t default_sets_per_scale(std::size_t n) {
  const auto logn = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
  return 8 * std::max<std::size_t>(logn, 1);
}

BourgainEmbedding bourgain_embed(const Matrix& dist, const BourgainParams& params) {
  const auto n = static_cast<std::size_t>(dist.rows());
  if (n < 2) throw Error(ErrorCode::DegenerateSpace, "Bourgain embedding needs n >= 2");
  const std::size_t per_scale = params.sets_per_scale.value_or(default_sets_per_scale(n));
  if (per_scale < 1) throw Error(ErrorCode::InvalidParameters, "sets_per_scale must be >= 1");
  if (params.norm == Norm::Linf)
    throw Error(ErrorCode::InvalidParameters, "Bourgain embedding supports l1 and l2");

  Rng rng = make_rng(params.seed, "bourgain.sets");
  BourgainEmbedding out;
  out.norm = params.norm;
  for (std::size_t size : bourgain_scales(n))
    for (std::size_t j = 0; j < per_scale; ++j) out.sets.push_back(sample_subset(n, size, rng));

  Matrix coords = kernels::distances_to_sets(dist, out.sets);
  const auto count = static_cast<double>(out.sets.size());
  coords /= params.norm == Norm::L1 ? count : std::sqrt(count);
  out.points = PointSet(std::move(coords));
  return out;
}

BourgainEmbedding bourgain_embed(const MetricSpace& x, const BourgainParams& params) {
  return bourgain_embed(x.matrix(), params);
}

std::size_t jl_target_dim(std::size_t n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorCode::InvalidParameters, "epsilon must lie in (0, 1)");
  return static_cast<std::size_t>(
      std::ceil(9.0 * std::log(static_cast<double>(n)) / (epsilon * epsilon)));
}

PointSet jl_project(const PointSet& p, const JlParams& params) {
  if (p.size() < 2) throw Error(ErrorCode::DegenerateSpace, "projection needs n >= 2");
  const std::size_t k = params.target_dim_override.value_or(jl_target_dim(p.size(), params.epsilon));
  if (k < 1 || !(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw Error(ErrorCode::InvalidParameters, "need k >= 1 and epsilon in (0, 1)");

  Rng rng = make_rng(params.seed, "jl.matrix");
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(p.dimension());
  Matrix proj(static_cast<Eigen::Index>(k), d);
  for (Eigen::Index i = 0; i < proj.rows(); ++i)
    for (Eigen::Index j = 0; j < d; ++j) proj(i, j) = gauss(rng);
  proj /= std::sqrt(static_cast<double>(k));
  return PointSet(p.coords() * proj.transpose());
}

}  // namespace mforge
