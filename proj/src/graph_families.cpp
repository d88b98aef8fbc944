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

#include "metric_forge/graph_families.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "metric_forge/error.hpp"
#include "metric_forge/kernels.hpp"
#include "metric_forge/linalg.hpp"
#include "metric_forge/rng.hpp"

namespace mforge::families {

namespace {

Edge unit(std::size_t u, std::size_t v) { return {std::min(u, v), std::max(u, v), 1.0, 1.0}; }

void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParameters, what); }

WeightedGraph build(const Hypercube& h) {
  if (h.r < 1) invalid("hypercube needs r >= 1");
  if (h.r > 20) throw Error(ErrorCode::TooLarge, "hypercube dimension above 20");
  const std::size_t n = std::size_t{1} << h.r;
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < h.r; ++b) {
      const std::size_t y = x ^ (std::size_t{1} << b);
      if (x < y) edges.push_back(unit(x, y));
    }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph build(const CompleteBinaryTree& t) {
  if (t.depth > 20) throw Error(ErrorCode::TooLarge, "binary tree depth above 20");
  const std::size_t n = (std::size_t{1} << (t.depth + 1)) - 1;
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back(unit((v - 1) / 2, v));
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph build(const Path& p) {
  if (p.n < 1) invalid("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < p.n; ++v) edges.push_back(unit(v, v + 1));
  return WeightedGraph(p.n, std::move(edges));
}

WeightedGraph build(const Cycle& c) {
  if (c.n < 3) invalid("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < c.n; ++v) edges.push_back(unit(v, (v + 1) % c.n));
  return WeightedGraph(c.n, std::move(edges));
}

WeightedGraph build(const Star& s) {
  if (s.m < 1) invalid("star needs m >= 1 leaves");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= s.m; ++v) edges.push_back(unit(0, v));
  return WeightedGraph(s.m + 1, std::move(edges));
}

WeightedGraph build(const Complete& c) {
  if (c.n < 1) invalid("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < c.n; ++u)
    for (std::size_t v = u + 1; v < c.n; ++v) edges.push_back(unit(u, v));
  return WeightedGraph(c.n, std::move(edges));
}

WeightedGraph build(const RandomRegular& spec) {
  const auto [n, k, seed] = spec;
  if (k < 3 || n <= k || (n * k) % 2 != 0)
    invalid("random_regular needs k >= 3, n > k and n*k even");
  Rng rng = make_rng(seed, "families.random_regular");
  std::vector<std::size_t> stubs;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < k; ++j) stubs.push_back(v);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto perm = random_permutation(stubs.size(), rng);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    bool ok = true;
    for (std::size_t i = 0; ok && i < perm.size(); i += 2) {
      const std::size_t u = stubs[perm[i]];
      const std::size_t v = stubs[perm[i + 1]];
      ok = u != v && pairs.emplace(std::min(u, v), std::max(u, v)).second;
    }
    if (!ok) continue;
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back(unit(u, v));
    WeightedGraph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw Error(ErrorCode::GenerationFailure,
              "pairing model rejected 1000 configurations");
}

std::size_t to_size(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParameters, "expected a nonnegative integer, got '" + s + "'");
  }
}

}  // namespace

WeightedGraph generate(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return build(s); }, spec);
}

FamilySpec parse_family(const std::string& name, const std::vector<std::string>& params,
                        std::uint64_t default_seed) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      invalid(name + ": wrong number of parameters");
  };
  if (name == "hypercube") { need(1, 1); return Hypercube{to_size(params[0])}; }
  if (name == "complete_binary_tree" || name == "binary_tree") {
    need(1, 1);
    return CompleteBinaryTree{to_size(params[0])};
  }
  if (name == "path") { need(1, 1); return Path{to_size(params[0])}; }
  if (name == "cycle") { need(1, 1); return Cycle{to_size(params[0])}; }
  if (name == "star") { need(1, 1); return Star{to_size(params[0])}; }
  if (name == "complete") { need(1, 1); return Complete{to_size(params[0])}; }
  if (name == "random_regular") {
    need(2, 3);
    const std::uint64_t seed = params.size() == 3 ? std::stoull(params[2]) : default_seed;
    return RandomRegular{to_size(params[0]), to_size(params[1]), seed};
  }
  invalid("unknown family '" + name + "'");
  return {};
}

std::string describe(const FamilySpec& spec) {
  struct V {
    std::string operator()(const Hypercube& h) const { return "hypercube(" + std::to_string(h.r) + ")"; }
    std::string operator()(const CompleteBinaryTree& t) const {
      return "complete_binary_tree(" + std::to_string(t.depth) + ")";
    }
    std::string operator()(const Path& p) const { return "path(" + std::to_string(p.n) + ")"; }
    std::string operator()(const Cycle& c) const { return "cycle(" + std::to_string(c.n) + ")"; }
    std::string operator()(const Star& s) const { return "star(" + std::to_string(s.m) + ")"; }
    std::string operator()(const Complete& c) const { return "complete(" + std::to_string(c.n) + ")"; }
    std::string operator()(const RandomRegular& r) const {
      return "random_regular(" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
             std::to_string(r.seed) + ")";
    }
  };
  return std::visit(V{}, spec);
}

std::optional<std::size_t> girth(const WeightedGraph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> dist(n);
  std::vector<std::size_t> parent_edge(n);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent_edge[s] = std::numeric_limits<std::size_t>::max();
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (auto [v, e] : g.neighbours(u)) {
        if (e == parent_edge[u]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent_edge[v] = e;
          queue.push_back(v);
        } else {
          // Non-tree edge closes a closed walk through s of this length; the
          // minimum over all sources is the girth.
          best = std::min(best, static_cast<std::size_t>(dist[u] + dist[v] + 1));
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

SpectralExpansion spectral_expansion(const WeightedGraph& g) {
  const auto k = g.regular_degree();
  if (!k) throw Error(ErrorCode::NotRegular, "graph is not regular");
  const auto eig = jacobi_eigen(g.adjacency_matrix());
  const Eigen::Index n = eig.values.size();
  SpectralExpansion out;
  out.lambda1 = eig.values(n - 1);
  out.lambda2 = n >= 2 ? eig.values(n - 2) : eig.values(n - 1);
  out.is_expander_proxy = out.lambda2 < static_cast<double>(*k) - 0.1;
  return out;
}

double edge_expansion_bruteforce(const WeightedGraph& g) {
  if (g.order() > 22) throw Error(ErrorCode::TooLarge, "edge expansion enumeration needs n <= 22");
  if (g.order() < 2) throw Error(ErrorCode::InvalidParameters, "need at least two vertices");
  return kernels::edge_expansion_scan(g).value;
}

WeightedGraph random_regular_with_girth(std::size_t n, std::size_t k, std::size_t min_girth,
                                        std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 500; ++attempt) {
    WeightedGraph g = generate(RandomRegular{n, k, derive_seed(seed, "families.girth", attempt)});
    const auto gi = girth(g);
    if (!gi || *gi >= min_girth) return g;
  }
  throw Error(ErrorCode::GenerationFailure,
              "no graph with girth >= " + std::to_string(min_girth) + " in 500 resamples");
}

}  // namespace mforge::families
