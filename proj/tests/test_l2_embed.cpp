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

#include "metric_forge/error.hpp"
#include "metric_forge/l2_embed.hpp"
#include "support.hpp"

using namespace mforge;

TEST_CASE("Bourgain schedule") {
  CHECK(bourgain_scales(2) == std::vector<std::size_t>{1});
  CHECK(bourgain_scales(8) == std::vector<std::size_t>{1, 2, 4});
  CHECK(bourgain_scales(17) == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(default_sets_per_scale(8) == 24);
  CHECK(default_sets_per_scale(2) == 8);
  const auto x = testing::graph_metric(families::Hypercube{3});
  BourgainParams p;
  p.sets_per_scale = 5;
  const auto emb = bourgain_embed(x, p);
  CHECK(emb.points.dimension() == 15);
  CHECK(emb.sets.size() == 15);
  for (std::size_t i = 0; i < emb.sets.size(); ++i) {
    const std::size_t want = std::size_t{1} << (i / 5);
    CHECK(emb.sets[i].size() == want);
    CHECK(std::is_sorted(emb.sets[i].begin(), emb.sets[i].end()));
    CHECK(std::adjacent_find(emb.sets[i].begin(), emb.sets[i].end()) == emb.sets[i].end());
  }
}

TEST_CASE("Bourgain coordinates are normalized distances to the sets") {
  std::mt19937_64 rng(12);
  const auto x = testing::random_metric(11, rng);
  for (Norm norm : {Norm::L1, Norm::L2}) {
    BourgainParams p;
    p.norm = norm;
    p.seed = 77;
    const auto emb = bourgain_embed(x, p);
    const double count = static_cast<double>(emb.sets.size());
    const double scale = norm == Norm::L1 ? count : std::sqrt(count);
    for (std::size_t pt = 0; pt < x.size(); ++pt)
      for (std::size_t s = 0; s < emb.sets.size(); ++s) {
        double raw = std::numeric_limits<double>::infinity();
        for (std::size_t y : emb.sets[s]) raw = std::min(raw, x(pt, y));
        CHECK(emb.points.coords()(static_cast<Eigen::Index>(pt), static_cast<Eigen::Index>(s)) ==
              doctest::Approx(raw / scale).epsilon(1e-14));
      }
  }
}

TEST_CASE("every Bourgain coordinate is 1-Lipschitz and the map is non-expansive") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testing::random_integer_metric(10, rng, 1, 9);
    for (Norm norm : {Norm::L1, Norm::L2}) {
      BourgainParams p;
      p.norm = norm;
      p.seed = static_cast<std::uint64_t>(trial);
      const auto emb = bourgain_embed(x, p);
      for (const auto& set : emb.sets)
        for (std::size_t a = 0; a < x.size(); ++a)
          for (std::size_t b = 0; b < x.size(); ++b) {
            double da = std::numeric_limits<double>::infinity();
            double db = da;
            for (std::size_t y : set) {
              da = std::min(da, x(a, y));
              db = std::min(db, x(b, y));
            }
            CHECK(std::abs(da - db) <= x(a, b));
          }
      const auto r = distortion(x, emb.points, norm);
      CHECK(r.expansion <= 1.0 + 1e-9);
      CHECK(r.distortion >= 1.0);
    }
  }
}

TEST_CASE("two-point metric embeds non-degenerately") {
  Matrix d(2, 2);
  d << 0, 1, 1, 0;
  const MetricSpace x(d);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    BourgainParams p;
    p.seed = seed;
    const auto emb = bourgain_embed(x, p);
    const auto r = distortion(x, emb.points, Norm::L2);
    CHECK(std::isfinite(r.distortion));
    CHECK(r.distortion >= 1.0);
    for (Eigen::Index j = 0; j < emb.points.coords().cols(); ++j) {
      const double diff = std::abs(emb.points.coords()(0, j) - emb.points.coords()(1, j));
      const double unit = 1.0 / std::sqrt(static_cast<double>(emb.sets.size()));
      CHECK((diff == doctest::Approx(unit) || diff == 0.0));
    }
  }
}

TEST_CASE("K13 with 16 sets per scale stays below distortion 2") {
  const auto x = testing::star_metric();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BourgainParams p;
    p.sets_per_scale = 16;
    p.seed = seed;
    CHECK(distortion(x, bourgain_embed(x, p).points, Norm::L2).distortion <= 2.0);
  }
}

TEST_CASE("Bourgain is seed deterministic") {
  const auto x = testing::graph_metric(families::Hypercube{3});
  BourgainParams p;
  p.seed = 5;
  const auto a = bourgain_embed(x, p);
  const auto b = bourgain_embed(x, p);
  CHECK(a.points.coords() == b.points.coords());
  CHECK(a.sets == b.sets);
  p.seed = 6;
  CHECK(bourgain_embed(x, p).sets != a.sets);
}

TEST_CASE("Bourgain preconditions") {
  CHECK_THROWS_AS(bourgain_embed(MetricSpace(Matrix::Zero(1, 1)), BourgainParams{}), Error);
  BourgainParams bad;
  bad.sets_per_scale = 0;
  CHECK_THROWS_AS(bourgain_embed(testing::equilateral(3), bad), Error);
  BourgainParams linf;
  linf.norm = Norm::Linf;
  CHECK_THROWS_AS(bourgain_embed(testing::equilateral(3), linf), Error);
}

TEST_CASE("JL target dimension and shape") {
  CHECK(jl_target_dim(16, 0.5) == 100);
  CHECK(jl_target_dim(2, 0.5) == 25);
  std::mt19937_64 rng(2);
  const PointSet p(testing::random_points(6, 4, rng));
  JlParams jp;
  jp.target_dim_override = 4;
  CHECK(jl_project(p, jp).dimension() == 4);
  CHECK(jl_project(p, JlParams{}).dimension() == jl_target_dim(6, 0.5));
  JlParams bad;
  bad.epsilon = 1.0;
  CHECK_THROWS_AS(jl_project(p, bad), Error);
}

TEST_CASE("JL two-point concentration over 1000 seeds") {
  Matrix pts(2, 3);
  pts << 0, 0, 0, 1, 0, 0;
  const PointSet p(pts);
  int inside = 0;
  double ratio_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    JlParams jp;
    jp.seed = seed;
    const PointSet q = jl_project(p, jp);
    const double len = (q.point(0) - q.point(1)).norm();
    if (len >= 2.0 / 3.0 && len <= 1.5) ++inside;
    ratio_sum += len * len;
  }
  CHECK(inside >= 990);
  const double mean = ratio_sum / 1000.0;
  CHECK(mean >= 0.9);
  CHECK(mean <= 1.1);
}

TEST_CASE("JL preserves the mean squared distance for a fixed pair") {
  std::mt19937_64 rng(21);
  const PointSet p(testing::random_points(5, 7, rng));
  const double orig = (p.point(1) - p.point(3)).squaredNorm();
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    JlParams jp;
    jp.seed = seed;
    jp.target_dim_override = 10;
    const PointSet q = jl_project(p, jp);
    sum += (q.point(1) - q.point(3)).squaredNorm() / orig;
  }
  CHECK(sum / 1000.0 >= 0.9);
  CHECK(sum / 1000.0 <= 1.1);
}

TEST_CASE("JL is seed deterministic") {
  std::mt19937_64 rng(22);
  const PointSet p(testing::random_points(8, 5, rng));
  JlParams jp;
  jp.seed = 3;
  CHECK(jl_project(p, jp).coords() == jl_project(p, jp).coords());
}
