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

#include <iosfwd>
#include <string>
#include <vector>

#include "metric_forge/graph.hpp"
#include "metric_forge/kernels.hpp"
#include "metric_forge/l2_embed.hpp"

namespace mforge {

using kernels::Commodity;

/// A capacitated graph with source-sink demands. Edge lengths are ignored.
struct FlowInstance {
  WeightedGraph graph;
  std::vector<Commodity> commodities;

  /// Throws MalformedInput on invalid endpoints or demands.
  void validate() const;
};

struct CutReport {
  std::vector<std::size_t> subset;
  double capacity = 0.0;
  double demand_cut = 0.0;
  double gamma = 0.0;
};

/// cap(S), dem(S) and their ratio for an explicit subset.
CutReport evaluate_cut(const FlowInstance& inst, const std::vector<std::size_t>& subset);

struct FlowResult {
  double phi = 0.0;
  /// flow[i][2e] is commodity i along edge e from u to v, flow[i][2e+1] the
  /// reverse direction.
  std::vector<std::vector<double>> flow;
  double dual_value = 0.0;
  long long pivots = 0;
};

/// Maximum concurrent flow by the edge-flow linear program.
FlowResult max_concurrent_flow(const FlowInstance& inst);

struct DualMetricResult {
  /// Shortest-path semimetric induced by `edge_lengths`.
  Matrix metric;
  std::vector<double> edge_lengths;
  double objective = 0.0;
  long long pivots = 0;
};

/// min sum_E c_e d_e subject to d a metric dominated by the edge lengths and
/// sum_j D_j d(s_j, t_j) = 1.
DualMetricResult dual_metric(const FlowInstance& inst);

/// Sweep cuts of every coordinate of an l1 Bourgain embedding of `d`.
CutReport round_to_cut(const FlowInstance& inst, const Matrix& d, const BourgainParams& params);

/// Exact sparsest cut by enumeration, n <= 20.
CutReport sparsest_cut_bruteforce(const FlowInstance& inst);

/// Graph file followed by "k" and k lines "s t demand" (1-indexed).
FlowInstance read_instance(std::istream& in);
FlowInstance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const FlowInstance& inst);

/// All C(n,2) pairs with unit demand.
std::vector<Commodity> all_pairs_commodities(std::size_t n);

}  // namespace mforge
