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

#include "metric_forge/graph.hpp"
#include "metric_forge/linalg.hpp"

namespace mforge::io {

/// Matrix CSV: one row per line, comma-separated decimals, no header. Used for
/// metrics, point sets and certificates. Values are written with 17
/// significant digits so that a read-back is bit exact.
Matrix read_matrix_csv(std::istream& in);
Matrix read_matrix_csv_file(const std::string& path);
void write_matrix_csv(std::ostream& out, const Matrix& m);

/// Graph file: "n m" then m lines "u v length [capacity]", 1-indexed vertices,
/// capacity defaulting to 1.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);

std::string format_double(double value);

}  // namespace mforge::io
