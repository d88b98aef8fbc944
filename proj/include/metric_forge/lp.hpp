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

#include <cstddef>
#include <utility>
#include <vector>

namespace mforge::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };

struct Row {
  std::vector<std::pair<std::size_t, double>> coeffs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// Linear program over nonnegative variables.
struct LinearProgram {
  std::size_t num_vars = 0;
  Sense sense = Sense::Minimize;
  std::vector<double> objective;  // size num_vars
  std::vector<Row> rows;

  explicit LinearProgram(std::size_t n = 0, Sense s = Sense::Minimize)
      : num_vars(n), sense(s), objective(n, 0.0) {}

  void add_row(std::vector<std::pair<std::size_t, double>> coeffs, Relation rel, double rhs) {
    rows.push_back({std::move(coeffs), rel, rhs});
  }
};

enum class Status { Optimal, Infeasible, Unbounded, PivotLimit };

struct Solution {
  Status status = Status::PivotLimit;
  std::vector<double> x;
  double objective = 0.0;
  /// One multiplier per row with objective == sum rhs_i * duals_i at optimum.
  std::vector<double> duals;
  long long pivots = 0;
};

struct Options {
  double pivot_tol = 1e-9;
  long long max_pivots = 2'000'000;
  /// Consecutive degenerate pivots tolerated under the largest-coefficient
  /// rule before switching to Bland's rule for the rest of the phase.
  int degenerate_streak = 50;
};

/// Two-phase dense tableau simplex.
Solution solve(const LinearProgram& lp, const Options& options = {});

}  // namespace mforge::lp
