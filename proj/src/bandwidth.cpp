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

#include "metric_forge/bandwidth.hpp"

#include <algorithm>
#include <numeric>

#include "metric_forge/error.hpp"
#include "metric_forge/rng.hpp"

namespace mforge {

Labeling::Labeling(std::vector<std::size_t> position) : position_(std::move(position)) {
  std::vector<bool> seen(position_.size(), false);
  for (std::size_t p : position_) {
    if (p >= position_.size() || seen[p])
      throw Error(ErrorCode::InvalidLabeling, "labels must form a permutation");
    seen[p] = true;
  }
}

Labeling Labeling::from_order(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pos(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size())
      throw Error(ErrorCode::InvalidLabeling, "order lists an unknown vertex");
    pos[order[i]] = i;
  }
  return Labeling(std::move(pos));
}

std::vector<std::size_t> Labeling::order() const {
  std::vector<std::size_t> out(position_.size());
  for (std::size_t v = 0; v < position_.size(); ++v) out[position_[v]] = v;
  return out;
}

std::size_t bandwidth_of(const WeightedGraph& g, const Labeling& lab) {
  if (lab.size() != g.order())
    throw Error(ErrorCode::InvalidLabeling, "labeling size does not match the graph");
  std::size_t bw = 0;
  for (const auto& e : g.edges()) {
    const std::size_t a = lab.position(e.u);
    const std::size_t b = lab.position(e.v);
    bw = std::max(bw, a > b ? a - b : b - a);
  }
  return bw;
}

double beta_lower_bound(const WeightedGraph& g) {
  const auto hops = g.hop_distances();
  const std::size_t n = g.order();
  double best = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    int ecc = 0;
    for (int h : hops[x]) ecc = std::max(ecc, h);
    // count[r] = vertices at hop distance exactly r
    std::vector<std::size_t> count(static_cast<std::size_t>(ecc) + 1, 0);
    for (int h : hops[x])
      if (h >= 0) ++count[static_cast<std::size_t>(h)];
    std::size_t ball = count[0];
    for (int r = 1; r <= std::max(ecc, 1); ++r) {
      if (r <= ecc) ball += count[static_cast<std::size_t>(r)];
      best = std::max(best, static_cast<double>(ball) / r);
    }
  }
  return best;
}

FeigeResult feige_label(const WeightedGraph& g, const BourgainParams& params) {
  const std::size_t n = g.order();
  if (n < 2) throw Error(ErrorCode::DegenerateSpace, "bandwidth labeling needs n >= 2");
  const auto emb = bourgain_embed(shortest_path_metric(g), params);
  const Matrix& coords = emb.points.coords();

  Rng rng = make_rng(params.seed, "feige.direction");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector dir(coords.cols());
  for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = gauss(rng);
  dir.normalize();
  const Vector proj = coords * dir;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return proj(static_cast<Eigen::Index>(a)) < proj(static_cast<Eigen::Index>(b));
  });
  Labeling lab = Labeling::from_order(order);
  const std::size_t bw = bandwidth_of(g, lab);
  return {std::move(lab), bw};
}

namespace {

class BandwidthSearch {
 public:
  explicit BandwidthSearch(const WeightedGraph& g) : g_(g), n_(g.order()) {
    order_.resize(n_);
    pos_.assign(n_, n_);
    best_order_.resize(n_);
    std::iota(best_order_.begin(), best_order_.end(), std::size_t{0});
    best_ = bandwidth_of(g, Labeling::from_order(best_order_));
  }

  BandwidthOptimum run() {
    if (best_ > 0) place(0);
    return {best_, Labeling::from_order(best_order_)};
  }

 private:
  // Fills position `p`; every edge between placed vertices has gap < best_.
  void place(std::size_t p) {
    if (p == n_) {
      std::size_t bw = 0;
      for (const auto& e : g_.edges()) {
        const std::size_t a = pos_[e.u];
        const std::size_t b = pos_[e.v];
        bw = std::max(bw, a > b ? a - b : b - a);
      }
      if (bw < best_) {
        best_ = bw;
        best_order_ = order_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (pos_[v] != n_) continue;
      bool ok = true;
      for (auto [w, e] : g_.neighbours(v)) {
        if (pos_[w] != n_ && p - pos_[w] >= best_) {
          ok = false;
          break;
        }
      }
      // A placed vertex with a neighbour still unplaced after v would see a
      // gap of at least p + 1 - q.
      for (std::size_t q = 0; ok && q < p; ++q) {
        const std::size_t u = order_[q];
        if (p + 1 - q < best_) continue;
        for (auto [w, e] : g_.neighbours(u))
          if (pos_[w] == n_ && w != v) {
            ok = false;
            break;
          }
      }
      if (!ok) continue;
      order_[p] = v;
      pos_[v] = p;
      place(p + 1);
      pos_[v] = n_;
      if (best_ <= 1 && g_.size() > 0) return;
    }
  }

  const WeightedGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> best_order_;
  std::size_t best_;
};

}  // namespace

BandwidthOptimum bandwidth_bruteforce(const WeightedGraph& g) {
  if (g.order() > 10) throw Error(ErrorCode::TooLarge, "bandwidth enumeration needs n <= 10");
  if (g.order() == 0) throw Error(ErrorCode::InvalidParameters, "empty graph");
  return BandwidthSearch(g).run();
}

}  // namespace mforge
