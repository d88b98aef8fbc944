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

#include "metric_forge/flowcut.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "metric_forge/error.hpp"
#include "metric_forge/io.hpp"
#include "metric_forge/lp.hpp"

namespace mforge {

namespace {

constexpr double kDualityTol = 1e-6;

void check_lp(const lp::Solution& sol, const char* what) {
  switch (sol.status) {
    case lp::Status::Optimal: break;
    case lp::Status::Infeasible:
      throw Error(ErrorCode::Infeasible, std::string(what) + " is infeasible");
    case lp::Status::Unbounded:
      throw Error(ErrorCode::NumericalFailure, std::string(what) + " reported unbounded");
    case lp::Status::PivotLimit:
      throw Error(ErrorCode::NumericalFailure, std::string(what) + " hit the pivot limit");
  }
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

void FlowInstance::validate() const {
  const std::size_t n = graph.order();
  if (commodities.empty()) throw Error(ErrorCode::MalformedInput, "instance has no commodities");
  for (const auto& c : commodities) {
    if (c.source >= n || c.sink >= n)
      throw Error(ErrorCode::MalformedInput, "commodity endpoint out of range");
    if (c.source == c.sink) throw Error(ErrorCode::MalformedInput, "commodity with s == t");
    if (!(c.demand > 0.0) || !std::isfinite(c.demand))
      throw Error(ErrorCode::MalformedInput, "demands must be positive and finite");
  }
}

CutReport evaluate_cut(const FlowInstance& inst, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(inst.graph.order(), false);
  for (std::size_t v : subset) {
    if (v >= in.size()) throw Error(ErrorCode::MalformedInput, "cut vertex out of range");
    in[v] = true;
  }
  CutReport r;
  r.subset = subset;
  std::sort(r.subset.begin(), r.subset.end());
  for (const auto& e : inst.graph.edges())
    if (in[e.u] != in[e.v]) r.capacity += e.capacity;
  for (const auto& c : inst.commodities)
    if (in[c.source] != in[c.sink]) r.demand_cut += c.demand;
  r.gamma = r.demand_cut > 0 ? r.capacity / r.demand_cut : std::numeric_limits<double>::infinity();
  return r;
}

FlowResult max_concurrent_flow(const FlowInstance& inst) {
  inst.validate();
  const auto& g = inst.graph;
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "flow graph is not connected");
  const std::size_t n = g.order();
  const std::size_t arcs = 2 * g.size();
  const std::size_t k = inst.commodities.size();
  const std::size_t phi = k * arcs;

  lp::LinearProgram prog(phi + 1, lp::Sense::Maximize);
  prog.objective[phi] = 1.0;
  auto var = [&](std::size_t i, std::size_t a) { return i * arcs + a; };
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = inst.commodities[i];
    for (std::size_t v = 0; v < n; ++v) {
      if (v == c.sink) continue;  // redundant given the other rows
      std::vector<std::pair<std::size_t, double>> row;
      for (auto [w, e] : g.neighbours(v)) {
        const bool forward = g.edges()[e].u == v;
        row.emplace_back(var(i, 2 * e + (forward ? 0 : 1)), 1.0);
        row.emplace_back(var(i, 2 * e + (forward ? 1 : 0)), -1.0);
      }
      if (v == c.source) row.emplace_back(phi, -c.demand);
      prog.add_row(std::move(row), lp::Relation::Equal, 0.0);
    }
  }
  const std::size_t first_cap = prog.rows.size();
  for (std::size_t e = 0; e < g.size(); ++e) {
    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t i = 0; i < k; ++i) {
      row.emplace_back(var(i, 2 * e), 1.0);
      row.emplace_back(var(i, 2 * e + 1), 1.0);
    }
    prog.add_row(std::move(row), lp::Relation::LessEqual, g.edges()[e].capacity);
  }

  const auto sol = lp::solve(prog);
  check_lp(sol, "concurrent flow LP");
  FlowResult out;
  out.phi = sol.objective;
  out.pivots = sol.pivots;
  for (std::size_t e = 0; e < g.size(); ++e)
    out.dual_value += g.edges()[e].capacity * sol.duals[first_cap + e];
  if (relative_gap(out.phi, out.dual_value) > kDualityTol)
    throw Error(ErrorCode::NumericalFailure, "flow LP primal and dual values disagree", {},
                {out.phi, out.dual_value});
  out.flow.assign(k, std::vector<double>(arcs, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < arcs; ++a) out.flow[i][a] = sol.x[var(i, a)];
  return out;
}

DualMetricResult dual_metric(const FlowInstance& inst) {
  inst.validate();
  const auto& g = inst.graph;
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "flow graph is not connected");
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const std::size_t pairs = n * (n - 1) / 2;
  // Variables: edge lengths [0, m), pair distances [m, m + pairs).
  lp::LinearProgram prog(m + pairs, lp::Sense::Minimize);
  for (std::size_t e = 0; e < m; ++e) prog.objective[e] = g.edges()[e].capacity;
  auto dist = [&](std::size_t i, std::size_t j) { return m + pair_index(i, j, n); };

  for (std::size_t e = 0; e < m; ++e)
    prog.add_row({{dist(g.edges()[e].u, g.edges()[e].v), 1.0}, {e, -1.0}}, lp::Relation::LessEqual,
                 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        prog.add_row({{dist(i, k), 1.0}, {dist(i, j), -1.0}, {dist(j, k), -1.0}},
                     lp::Relation::LessEqual, 0.0);
      }
  std::vector<std::pair<std::size_t, double>> norm;
  for (const auto& c : inst.commodities) norm.emplace_back(dist(c.source, c.sink), c.demand);
  // Merge repeated pairs.
  std::sort(norm.begin(), norm.end());
  std::vector<std::pair<std::size_t, double>> merged;
  for (auto [v, a] : norm) {
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += a;
    else
      merged.emplace_back(v, a);
  }
  prog.add_row(std::move(merged), lp::Relation::Equal, 1.0);

  const auto sol = lp::solve(prog);
  check_lp(sol, "metric LP");
  if (relative_gap(sol.objective, sol.duals.back()) > kDualityTol)
    throw Error(ErrorCode::NumericalFailure, "metric LP primal and dual values disagree", {},
                {sol.objective, sol.duals.back()});

  DualMetricResult out;
  out.objective = sol.objective;
  out.pivots = sol.pivots;
  std::vector<Edge> edges = g.edges();
  for (std::size_t e = 0; e < m; ++e) {
    out.edge_lengths.push_back(std::max(0.0, sol.x[e]));
    edges[e].length = out.edge_lengths.back();
  }
  out.metric = kernels::all_pairs_shortest_paths(WeightedGraph(n, std::move(edges)));
  return out;
}

CutReport round_to_cut(const FlowInstance& inst, const Matrix& d, const BourgainParams& params) {
  inst.validate();
  const Matrix semi = validate_semimetric(d);
  const std::size_t n = inst.graph.order();
  if (static_cast<std::size_t>(semi.rows()) != n)
    throw Error(ErrorCode::DimensionMismatch, "metric size does not match the graph");
  BourgainParams l1 = params;
  l1.norm = Norm::L1;
  const auto emb = bourgain_embed(semi, l1);
  const Matrix& coords = emb.points.coords();

  CutReport best;
  bool found = false;
  std::vector<std::size_t> order(n);
  for (Eigen::Index c = 0; c < coords.cols(); ++c) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return coords(static_cast<Eigen::Index>(a), c) < coords(static_cast<Eigen::Index>(b), c);
    });
    for (std::size_t len = 1; len < n; ++len) {
      const std::vector<std::size_t> prefix(order.begin(), order.begin() + static_cast<long>(len));
      const CutReport r = evaluate_cut(inst, prefix);
      if (r.demand_cut <= 0) continue;
      if (!found || r.gamma < best.gamma) {
        best = r;
        found = true;
      }
    }
  }
  if (!found)
    throw Error(ErrorCode::NoSeparatedCommodity, "no sweep cut separates a commodity");
  return best;
}

CutReport sparsest_cut_bruteforce(const FlowInstance& inst) {
  inst.validate();
  const std::size_t n = inst.graph.order();
  if (n > 20) throw Error(ErrorCode::TooLarge, "sparsest cut enumeration needs n <= 20");
  const auto scan = kernels::sparsest_cut_scan(inst.graph, inst.commodities);
  if (!scan.found) throw Error(ErrorCode::NoSeparatedCommodity, "no cut separates a commodity");
  std::vector<std::size_t> subset;
  for (std::size_t v = 0; v < n; ++v)
    if ((scan.mask >> v) & 1U) subset.push_back(v);
  return evaluate_cut(inst, subset);
}

FlowInstance read_instance(std::istream& in) {
  FlowInstance inst;
  inst.graph = io::read_graph(in);
  long long k = -1;
  if (!(in >> k) || k < 0) throw Error(ErrorCode::ParseError, "expected commodity count");
  for (long long i = 0; i < k; ++i) {
    long long s = 0;
    long long t = 0;
    double demand = 0.0;
    if (!(in >> s >> t >> demand))
      throw Error(ErrorCode::ParseError, "expected 's t demand' for commodity " + std::to_string(i + 1));
    const auto n = static_cast<long long>(inst.graph.order());
    if (s < 1 || t < 1 || s > n || t > n)
      throw Error(ErrorCode::ParseError, "commodity endpoint out of range");
    inst.commodities.push_back(
        {static_cast<std::size_t>(s - 1), static_cast<std::size_t>(t - 1), demand});
  }
  inst.validate();
  return inst;
}

FlowInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const FlowInstance& inst) {
  io::write_graph(out, inst.graph);
  out << inst.commodities.size() << '\n';
  for (const auto& c : inst.commodities)
    out << c.source + 1 << ' ' << c.sink + 1 << ' ' << io::format_double(c.demand) << '\n';
}

std::vector<Commodity> all_pairs_commodities(std::size_t n) {
  std::vector<Commodity> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j, 1.0});
  return out;
}

}  // namespace mforge
