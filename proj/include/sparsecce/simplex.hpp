// Copyright 2026 The sparsecce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPARSECCE_SIMPLEX_HPP_
#define SPARSECCE_SIMPLEX_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace sparsecce {

enum class LpStatus { kOptimal, kInfeasible, kUnboundedGuard, kNotConverged };

std::string LpStatusName(LpStatus status);

enum class RowSense { kLessEqual, kEqual };

// maximize objective . x  subject to  rows, x >= 0.
template <class S>
struct LinearProgram {
  struct Row {
    std::vector<S> coeffs;
    RowSense sense = RowSense::kLessEqual;
    S rhs = S(0);
  };
  int num_vars = 0;
  std::vector<S> objective;
  std::vector<Row> rows;
};

template <class S>
struct SimplexResult {
  LpStatus status = LpStatus::kNotConverged;
  std::vector<S> x;
  S objective = S(0);
  int pivots = 0;
};

// Dense two-phase tableau simplex with Bland's rule. `tol` is 0 for exact
// scalars; entries with magnitude <= tol count as zero.
template <class S>
class TableauSimplex {
 public:
  TableauSimplex(const LinearProgram<S>& lp, S tol, int max_pivots)
      : tol_(tol), max_pivots_(max_pivots), num_struct_(lp.num_vars) {
    const int rows = static_cast<int>(lp.rows.size());
    int slacks = 0;
    for (const auto& row : lp.rows) {
      if (row.sense == RowSense::kLessEqual) ++slacks;
    }
    // Columns: structural, slack, then one artificial per row that needs it.
    std::vector<int> slack_col(static_cast<size_t>(rows), -1);
    int col = num_struct_;
    for (int i = 0; i < rows; ++i) {
      if (lp.rows[static_cast<size_t>(i)].sense == RowSense::kLessEqual) {
        slack_col[static_cast<size_t>(i)] = col++;
      }
    }
    first_artificial_ = num_struct_ + slacks;
    std::vector<bool> needs_artificial(static_cast<size_t>(rows));
    int artificials = 0;
    for (int i = 0; i < rows; ++i) {
      const auto& row = lp.rows[static_cast<size_t>(i)];
      const bool flip = row.rhs < S(0);
      needs_artificial[static_cast<size_t>(i)] =
          row.sense == RowSense::kEqual || flip;
      if (needs_artificial[static_cast<size_t>(i)]) ++artificials;
    }
    num_cols_ = first_artificial_ + artificials;
    tableau_.assign(static_cast<size_t>(rows),
                    std::vector<S>(static_cast<size_t>(num_cols_), S(0)));
    rhs_.assign(static_cast<size_t>(rows), S(0));
    basis_.assign(static_cast<size_t>(rows), -1);
    int next_artificial = first_artificial_;
    for (int i = 0; i < rows; ++i) {
      const auto& row = lp.rows[static_cast<size_t>(i)];
      const bool flip = row.rhs < S(0);
      auto& t = tableau_[static_cast<size_t>(i)];
      for (int j = 0; j < num_struct_; ++j) {
        t[static_cast<size_t>(j)] = flip ? S(-row.coeffs[static_cast<size_t>(j)])
                                         : row.coeffs[static_cast<size_t>(j)];
      }
      rhs_[static_cast<size_t>(i)] = flip ? S(-row.rhs) : row.rhs;
      if (slack_col[static_cast<size_t>(i)] >= 0) {
        t[static_cast<size_t>(slack_col[static_cast<size_t>(i)])] = flip ? S(-1) : S(1);
        if (!flip) basis_[static_cast<size_t>(i)] = slack_col[static_cast<size_t>(i)];
      }
      if (needs_artificial[static_cast<size_t>(i)]) {
        t[static_cast<size_t>(next_artificial)] = S(1);
        basis_[static_cast<size_t>(i)] = next_artificial++;
      }
    }
    objective_.assign(static_cast<size_t>(num_cols_), S(0));
    for (int j = 0; j < num_struct_; ++j) {
      objective_[static_cast<size_t>(j)] = lp.objective[static_cast<size_t>(j)];
    }
  }

  SimplexResult<S> Solve() {
    SimplexResult<S> result;
    // Phase 1: maximize -(sum of artificials).
    if (first_artificial_ < num_cols_) {
      std::vector<S> phase1(static_cast<size_t>(num_cols_), S(0));
      for (int j = first_artificial_; j < num_cols_; ++j) phase1[static_cast<size_t>(j)] = S(-1);
      const LpStatus status = Run(phase1, num_cols_, result.pivots);
      if (status != LpStatus::kOptimal) {
        result.status = status == LpStatus::kUnboundedGuard ? LpStatus::kNotConverged
                                                            : status;
        return result;
      }
      if (objective_value_ < S(-tol_)) {
        result.status = LpStatus::kInfeasible;
        return result;
      }
      DriveOutArtificials(result.pivots);
    }
    result.status = Run(objective_, first_artificial_, result.pivots);
    if (result.status != LpStatus::kOptimal) return result;
    result.x.assign(static_cast<size_t>(num_struct_), S(0));
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < num_struct_) result.x[static_cast<size_t>(basis_[i])] = rhs_[i];
    }
    result.objective = objective_value_;
    return result;
  }

 private:
  bool Positive(const S& v) const { return v > tol_; }
  bool Negative(const S& v) const { return v < S(-tol_); }
  bool Zero(const S& v) const { return !Positive(v) && !Negative(v); }

  // Runs the simplex on columns [0, allowed) for objective `cost`.
  LpStatus Run(const std::vector<S>& cost, int allowed, int& pivots) {
    // reduced[j] = c_B B^-1 A_j - c_j; optimal when all >= 0.
    std::vector<S> reduced(static_cast<size_t>(num_cols_));
    for (int j = 0; j < num_cols_; ++j) reduced[static_cast<size_t>(j)] = -cost[static_cast<size_t>(j)];
    objective_value_ = S(0);
    for (size_t i = 0; i < basis_.size(); ++i) {
      const S& cb = cost[static_cast<size_t>(basis_[i])];
      if (Zero(cb)) continue;
      for (int j = 0; j < num_cols_; ++j) {
        reduced[static_cast<size_t>(j)] += cb * tableau_[i][static_cast<size_t>(j)];
      }
      objective_value_ += cb * rhs_[i];
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (Negative(reduced[static_cast<size_t>(j)])) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      S best_ratio = S(0);
      for (size_t i = 0; i < basis_.size(); ++i) {
        const S& a = tableau_[i][static_cast<size_t>(enter)];
        if (!Positive(a)) continue;
        S ratio = rhs_[i] / a;
        if (leave < 0 || ratio < best_ratio ||
            (!(best_ratio < ratio) && basis_[i] < basis_[static_cast<size_t>(leave)])) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return LpStatus::kUnboundedGuard;
      if (pivots >= max_pivots_) return LpStatus::kNotConverged;
      Pivot(leave, enter, &reduced);
      ++pivots;
    }
  }

  void Pivot(int r, int e, std::vector<S>* reduced) {
    auto& prow = tableau_[static_cast<size_t>(r)];
    const S inv = S(1) / prow[static_cast<size_t>(e)];
    std::vector<int> nonzero;
    for (int j = 0; j < num_cols_; ++j) {
      S& v = prow[static_cast<size_t>(j)];
      if (Zero(v)) {
        v = S(0);
        continue;
      }
      v *= inv;
      nonzero.push_back(j);
    }
    rhs_[static_cast<size_t>(r)] *= inv;
    auto eliminate = [&](std::vector<S>& row, S& rhs) {
      const S factor = row[static_cast<size_t>(e)];
      if (Zero(factor)) return;
      for (int j : nonzero) row[static_cast<size_t>(j)] -= factor * prow[static_cast<size_t>(j)];
      row[static_cast<size_t>(e)] = S(0);
      rhs -= factor * rhs_[static_cast<size_t>(r)];
    };
    for (size_t i = 0; i < tableau_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      eliminate(tableau_[i], rhs_[i]);
    }
    eliminate(*reduced, objective_value_);
    basis_[static_cast<size_t>(r)] = e;
  }

  void DriveOutArtificials(int& pivots) {
    std::vector<S> scratch(static_cast<size_t>(num_cols_), S(0));
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (!Zero(tableau_[i][static_cast<size_t>(j)])) {
          Pivot(static_cast<int>(i), j, &scratch);
          ++pivots;
          break;
        }
      }
      // A row with no usable column is redundant; its artificial stays at 0.
    }
  }

  S tol_;
  int max_pivots_;
  int num_struct_;
  int first_artificial_ = 0;
  int num_cols_ = 0;
  std::vector<std::vector<S>> tableau_;
  std::vector<S> rhs_;
  std::vector<int> basis_;
  std::vector<S> objective_;
  S objective_value_ = S(0);
};

template <class S>
SimplexResult<S> SolveLinearProgram(const LinearProgram<S>& lp, S tol,
                                    int max_pivots = 1000000) {
  TableauSimplex<S> simplex(lp, tol, max_pivots);
  return simplex.Solve();
}

}  // namespace sparsecce

#endif  // SPARSECCE_SIMPLEX_HPP_
