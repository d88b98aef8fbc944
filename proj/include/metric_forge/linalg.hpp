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

#include <Eigen/Dense>

namespace mforge {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // column i pairs with values(i)
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for symmetric matrices.
///
/// Sweeps until the off-diagonal Frobenius norm drops below `tol` times the
/// Frobenius norm of the input (absolute `tol` for the zero matrix). Only the
/// upper triangle of `a` is read.
SymmetricEigen jacobi_eigen(const Matrix& a, double tol = 1e-10,
                            int max_sweeps = 100);

/// Smallest eigenvalue of a symmetric matrix: Jacobi up to n = 128, Eigen's
/// tridiagonal QR beyond.
double min_eigenvalue(const Matrix& a);

double max_abs(const Matrix& a);

bool is_symmetric(const Matrix& a, double tol);

}  // namespace mforge
