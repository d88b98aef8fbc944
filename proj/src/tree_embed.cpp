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

#include "metric_forge/tree_embed.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include "metric_forge/error.hpp"
#include "metric_forge/io.hpp"
#include "metric_forge/rng.hpp"

namespace mforge {

HstTree::HstTree(std::vector<Node> nodes, std::vector<double> level_diameter, double edge_scale)
    : nodes_(std::move(nodes)), level_diameter_(std::move(level_diameter)), edge_scale_(edge_scale) {
  if (nodes_.empty()) throw Error(ErrorCode::MalformedInput, "tree has no nodes");
  std::size_t leaves = 0;
  for (const auto& node : nodes_) {
    if (node.level >= level_diameter_.size())
      throw Error(ErrorCode::MalformedInput, "node level without a level diameter");
    if (node.point) leaves = std::max(leaves, *node.point + 1);
  }
  leaf_of_point_.assign(leaves, nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& node = nodes_[i];
    if (!node.point) continue;
    if (!node.children.empty())
      throw Error(ErrorCode::MalformedInput, "leaf node has children");
    if (leaf_of_point_[*node.point] != nodes_.size())
      throw Error(ErrorCode::MalformedInput, "point appears on two leaves");
    leaf_of_point_[*node.point] = i;
  }
  for (std::size_t p = 0; p < leaves; ++p)
    if (leaf_of_point_[p] == nodes_.size())
      throw Error(ErrorCode::MalformedInput, "point " + std::to_string(p + 1) + " has no leaf");
  for (std::size_t l = 1; l < level_diameter_.size(); ++l)
    if (!(level_diameter_[l] * 2.0 <= level_diameter_[l - 1]))
      throw Error(ErrorCode::MalformedInput, "level diameters must shrink by a factor >= 2");
}

double HstTree::distance(std::size_t a, std::size_t b) const {
  std::size_t u = leaf_of_point_[a];
  std::size_t v = leaf_of_point_[b];
  double total = 0.0;
  while (u != v) {
    // Climb from the deeper endpoint; an edge into a level-l node costs
    // level l's edge length.
    if (nodes_[u].level >= nodes_[v].level) {
      u = *nodes_[u].parent;
      total += edge_length(nodes_[u].level);
    } else {
      v = *nodes_[v].parent;
      total += edge_length(nodes_[v].level);
    }
  }
  return total;
}

namespace {

void verify_domination(const MetricSpace& x, HstTree& tree) {
  double worst = 1.0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      worst = std::max(worst, x(a, b) / tree.distance(a, b));
  if (worst > 1.0) tree.scale_edges(worst);
}

}  // namespace

HstTree sample_hst(const MetricSpace& x, std::uint64_t seed) {
  const std::size_t n = x.size();
  Rng rng = make_rng(seed, "hst.sample");
  std::vector<HstTree::Node> nodes(1);
  std::vector<double> levels{n > 1 ? x.diameter() : 1.0};
  for (std::size_t p = 0; p < n; ++p) nodes[0].cluster.push_back(p);
  if (n == 1) {
    nodes[0].point = 0;
    return HstTree(std::move(nodes), std::move(levels));
  }

  std::deque<std::size_t> pending{0};
  while (!pending.empty()) {
    const std::size_t id = pending.front();
    pending.pop_front();
    const std::size_t level = nodes[id].level;
    const std::vector<std::size_t> cluster = nodes[id].cluster;
    if (levels.size() == level + 1) levels.push_back(levels[level] / 2.0);
    const double scale = levels[level + 1];

    const auto order = random_permutation(cluster.size(), rng);
    std::uniform_real_distribution<double> radius(scale / 4.0, scale / 2.0);
    std::vector<double> radii(cluster.size());
    for (double& r : radii) r = radius(rng);

    // parts[j] collects the points captured by the j-th center in order.
    std::vector<std::vector<std::size_t>> parts(cluster.size());
    for (std::size_t p : cluster) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        const std::size_t center = cluster[order[j]];
        if (x(center, p) <= radii[j]) {
          parts[j].push_back(p);
          break;
        }
      }
    }
    for (auto& part : parts) {
      if (part.empty()) continue;
      HstTree::Node child;
      child.parent = id;
      child.level = level + 1;
      child.cluster = std::move(part);
      if (child.cluster.size() == 1) child.point = child.cluster.front();
      const std::size_t cid = nodes.size();
      const bool internal = !child.point;
      nodes.push_back(std::move(child));
      nodes[id].children.push_back(cid);
      if (internal) pending.push_back(cid);
    }
  }
  // Keep only levels that carry nodes.
  std::size_t max_level = 0;
  for (const auto& node : nodes) max_level = std::max(max_level, node.level);
  levels.resize(max_level + 1);
  HstTree tree(std::move(nodes), std::move(levels));
  verify_domination(x, tree);
  return tree;
}

MetricSpace tree_metric(const HstTree& t) {
  const auto n = static_cast<Eigen::Index>(t.leaf_count());
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b)
      d(a, b) = d(b, a) = t.distance(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return MetricSpace(std::move(d));
}

TreeDistribution sample_distribution(const MetricSpace& x, std::size_t trials,
                                     std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidParameters, "trials must be >= 1");
  TreeDistribution dist;
  dist.trees.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t)
    dist.trees.push_back(sample_hst(x, derive_seed(seed, "hst.trial", t)));
  dist.weights.assign(trials, 1.0 / static_cast<double>(trials));
  return dist;
}

StretchEstimate estimate_stretch(const MetricSpace& x, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidParameters, "trials must be >= 1");
  const auto n = static_cast<Eigen::Index>(x.size());
  Matrix sum = Matrix::Zero(n, n);
  constexpr std::size_t kBlock = 64;
  for (std::size_t begin = 0; begin < trials; begin += kBlock) {
    const std::size_t end = std::min(trials, begin + kBlock);
    std::vector<Matrix> block(end - begin);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = static_cast<std::int64_t>(begin); t < static_cast<std::int64_t>(end); ++t) {
      const HstTree tree = sample_hst(x, derive_seed(seed, "hst.trial", static_cast<std::uint64_t>(t)));
      Matrix d = Matrix::Zero(n, n);
      for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = a + 1; b < n; ++b)
          d(a, b) = d(b, a) = tree.distance(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      block[static_cast<std::size_t>(t) - begin] = std::move(d);
    }
    for (const auto& d : block) sum += d;
  }
  StretchEstimate out;
  out.per_pair = Matrix::Zero(n, n);
  out.max_pair_expected_stretch = n > 1 ? 0.0 : 1.0;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      if (a == b) continue;
      out.per_pair(a, b) = sum(a, b) / static_cast<double>(trials) / x.matrix()(a, b);
      out.max_pair_expected_stretch = std::max(out.max_pair_expected_stretch, out.per_pair(a, b));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void write_node(std::ostream& out, const HstTree& t, std::size_t id, std::vector<std::size_t>& order) {
  const auto& node = t.nodes()[id];
  if (node.point) {
    out << *node.point + 1;
    order.push_back(*node.point);
    return;
  }
  out << "(L" << node.level << ':' << io::format_double(t.edge_length(node.level));
  for (std::size_t c : node.children) {
    out << ' ';
    write_node(out, t, c, order);
  }
  out << ')';
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  std::size_t parse_node(std::optional<std::size_t> parent, std::size_t level,
                         std::vector<HstTree::Node>& nodes) {
    skip();
    const std::size_t id = nodes.size();
    nodes.emplace_back();
    nodes[id].parent = parent;
    nodes[id].level = level;
    if (peek() == '(') {
      ++pos_;
      expect('L');
      const std::size_t tagged = static_cast<std::size_t>(number());
      if (tagged != level) fail("level tag does not match depth");
      expect(':');
      (void)number();
      while (true) {
        skip();
        if (peek() == ')') {
          ++pos_;
          break;
        }
        const std::size_t child = parse_node(id, level + 1, nodes);
        nodes[id].children.push_back(child);
        for (std::size_t p : nodes[child].cluster) nodes[id].cluster.push_back(p);
      }
    } else {
      const double v = number();
      if (v < 1) fail("leaf points are 1-indexed");
      nodes[id].point = static_cast<std::size_t>(v) - 1;
      nodes[id].cluster = {*nodes[id].point};
    }
    return id;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  double number() {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail("expected a number");
    }
    pos_ += used;
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "HST text at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_hst(const HstTree& t) {
  std::ostringstream out;
  out << "levels:";
  for (double d : t.level_diameter()) out << ' ' << io::format_double(d);
  out << "\nscale: " << io::format_double(t.edge_scale()) << '\n';
  std::vector<std::size_t> order;
  write_node(out, t, 0, order);
  out << "\nleaves:";
  for (std::size_t p : order) out << ' ' << p + 1;
  out << '\n';
  return out.str();
}

HstTree parse_hst(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> levels;
  double scale = 1.0;
  std::string tree_text;
  std::vector<std::size_t> leaves;
  while (std::getline(in, line)) {
    if (line.rfind("levels:", 0) == 0) {
      std::istringstream ls(line.substr(7));
      for (double d; ls >> d;) levels.push_back(d);
    } else if (line.rfind("scale:", 0) == 0) {
      scale = std::stod(line.substr(6));
    } else if (line.rfind("leaves:", 0) == 0) {
      std::istringstream ls(line.substr(7));
      for (std::size_t p; ls >> p;) leaves.push_back(p - 1);
    } else if (!line.empty()) {
      tree_text += line;
    }
  }
  if (levels.empty()) throw Error(ErrorCode::ParseError, "HST text lacks a levels line");
  std::vector<HstTree::Node> nodes;
  Parser(tree_text).parse_node(std::nullopt, 0, nodes);
  std::vector<std::size_t> order;
  for (const auto& node : nodes)
    if (node.point) order.push_back(*node.point);
  if (!leaves.empty() && leaves != order)
    throw Error(ErrorCode::ParseError, "leaf line does not match the tree");
  return HstTree(std::move(nodes), std::move(levels), scale);
}

}  // namespace mforge
