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

#include "metric_forge/lp.hpp"

#include <cmath>
#include <limits>

#include "metric_forge/error.hpp"

namespace mforge::lp {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), stride_(cols + 1), data_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * stride_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * stride_ + c]; }
  double& rhs(std::size_t r) { return data_[r * stride_ + n_]; }
  double& cost(std::size_t c) { return at(m_, c); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    double* pr = &data_[r * stride_];
    const double inv = 1.0 / pr[c];
    for (std::size_t j = 0; j < stride_; ++j) pr[j] *= inv;
    pr[c] = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* pi = &data_[i * stride_];
      const double f = pi[c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < stride_; ++j) pi[j] -= f * pr[j];
      pi[c] = 0.0;
    }
    basis_[r] = c;
  }

 private:
  std::size_t m_, n_, stride_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { Optimal, Unbounded, PivotLimit };

// Minimizes the objective row over columns with allowed[c] set.
PhaseResult run_phase(Tableau& t, const std::vector<bool>& allowed, const Options& opt,
                      long long& pivots) {
  bool bland = false;
  int streak = 0;
  while (true) {
    std::size_t enter = t.cols();
    double best = -opt.pivot_tol;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (!allowed[c]) continue;
      const double rc = t.cost(c);
      if (bland) {
        if (rc < -opt.pivot_tol) {
          enter = c;
          break;
        }
      } else if (rc < best) {
        best = rc;
        enter = c;
      }
    }
    if (enter == t.cols()) return PhaseResult::Optimal;

    std::size_t leave = t.rows();
    double ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= opt.pivot_tol) continue;
      const double q = t.rhs(r) / a;
      if (q < ratio - 1e-12 ||
          (std::abs(q - ratio) <= 1e-12 && leave < t.rows() && t.basis()[r] < t.basis()[leave])) {
        ratio = q;
        leave = r;
      }
    }
    if (leave == t.rows()) return PhaseResult::Unbounded;
    if (++pivots > opt.max_pivots) return PhaseResult::PivotLimit;
    if (ratio <= 1e-12) {
      if (++streak > opt.degenerate_streak) bland = true;
    } else {
      streak = 0;
    }
    t.pivot(leave, enter);
    // Guard against round-off drift below zero.
    for (std::size_t r = 0; r < t.rows(); ++r)
      if (t.rhs(r) < 0 && t.rhs(r) > -1e-11) t.rhs(r) = 0.0;
  }
}

}  // namespace

Solution solve(const LinearProgram& lp, const Options& options) {
  const std::size_t m = lp.rows.size();
  const std::size_t nv = lp.num_vars;
  if (lp.objective.size() != nv)
    throw Error(ErrorCode::MalformedInput, "objective size does not match num_vars");

  // Columns: structural | slack/surplus (one per inequality) | artificial.
  std::vector<int> flip(m, 1);
  std::vector<std::size_t> slack_col(m, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> art_col(m, std::numeric_limits<std::size_t>::max());
  std::size_t next = nv;
  for (std::size_t i = 0; i < m; ++i) {
    Relation rel = lp.rows[i].relation;
    if (lp.rows[i].rhs < 0) {
      flip[i] = -1;
      if (rel == Relation::LessEqual)
        rel = Relation::GreaterEqual;
      else if (rel == Relation::GreaterEqual)
        rel = Relation::LessEqual;
    }
    if (rel != Relation::Equal) slack_col[i] = next++;
  }
  const std::size_t first_art = next;
  for (std::size_t i = 0; i < m; ++i) {
    const Relation rel = lp.rows[i].relation;
    const bool le = (rel == Relation::LessEqual) == (flip[i] == 1) && rel != Relation::Equal;
    if (!le) art_col[i] = next++;
  }
  const std::size_t ncols = next;

  Tableau t(m, ncols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    for (auto [j, a] : row.coeffs) {
      if (j >= nv) throw Error(ErrorCode::MalformedInput, "row references unknown variable");
      t.at(i, j) += flip[i] * a;
    }
    t.rhs(i) = flip[i] * row.rhs;
    const Relation rel = row.relation;
    if (slack_col[i] != std::numeric_limits<std::size_t>::max()) {
      // A <= row (after flipping) gets +slack, a >= row gets -surplus.
      const bool le = (rel == Relation::LessEqual) == (flip[i] == 1);
      t.at(i, slack_col[i]) = le ? 1.0 : -1.0;
      if (le) t.basis()[i] = slack_col[i];
    }
    if (art_col[i] != std::numeric_limits<std::size_t>::max()) {
      t.at(i, art_col[i]) = 1.0;
      t.basis()[i] = art_col[i];
    }
  }

  Solution sol;
  std::vector<bool> allowed(ncols, true);

  // Phase I: minimize the sum of artificials.
  if (first_art < ncols) {
    for (std::size_t i = 0; i < m; ++i) {
      if (art_col[i] == std::numeric_limits<std::size_t>::max()) continue;
      for (std::size_t c = 0; c <= ncols; ++c) t.at(m, c) -= t.at(i, c);
      t.cost(art_col[i]) = 0.0;
    }
    const auto r1 = run_phase(t, allowed, options, sol.pivots);
    if (r1 == PhaseResult::PivotLimit) {
      sol.status = Status::PivotLimit;
      return sol;
    }
    const double infeas = -t.rhs(m);
    double scale = 1.0;
    for (const auto& row : lp.rows) scale = std::max(scale, std::abs(row.rhs));
    if (infeas > 1e-7 * scale) {
      sol.status = Status::Infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < first_art) continue;
      for (std::size_t c = 0; c < first_art; ++c) {
        if (std::abs(t.at(r, c)) > options.pivot_tol) {
          t.pivot(r, c);
          break;
        }
      }
    }
    for (std::size_t c = first_art; c < ncols; ++c) allowed[c] = false;
  }

  // Phase II objective row: c_j - c_B B^-1 A_j, in minimization form.
  const double sign = lp.sense == Sense::Maximize ? -1.0 : 1.0;
  std::vector<double> cost(ncols, 0.0);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = sign * lp.objective[j];
  for (std::size_t c = 0; c <= ncols; ++c) t.at(m, c) = c < ncols ? cost[c] : 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const double cb = cost[t.basis()[r]];
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= ncols; ++c) t.at(m, c) -= cb * t.at(r, c);
  }
  const auto r2 = run_phase(t, allowed, options, sol.pivots);
  if (r2 == PhaseResult::PivotLimit) {
    sol.status = Status::PivotLimit;
    return sol;
  }
  if (r2 == PhaseResult::Unbounded) {
    sol.status = Status::Unbounded;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.x.assign(nv, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (t.basis()[r] < nv) sol.x[t.basis()[r]] = t.rhs(r);
  double obj = 0.0;
  for (std::size_t j = 0; j < nv; ++j) obj += lp.objective[j] * sol.x[j];
  sol.objective = obj;

  // Duals from the reduced costs of each row's identity column.
  sol.duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double y = 0.0;
    if (art_col[i] != std::numeric_limits<std::size_t>::max()) {
      y = cost[art_col[i]] - t.cost(art_col[i]);
    } else {
      y = cost[slack_col[i]] - t.cost(slack_col[i]);
    }
    sol.duals[i] = sign * flip[i] * y;
  }
  return sol;
}

}  // namespace mforge::lp
