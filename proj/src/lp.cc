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

#include "sparsecce/lp.hpp"

#include <algorithm>

#include "sparsecce/core.hpp"

namespace sparsecce {
namespace {

// Builds the CCE program in scalar type S. Variables: mu (row-major m*m),
// then z+ and z- for the egalitarian objective.
template <class S, class Convert>
LinearProgram<S> BuildProgram(const Game& game, LpObjective objective,
                              Convert convert) {
  const int m = game.size();
  const int cells = m * m;
  const bool egalitarian = objective == LpObjective::kEgalitarian;
  LinearProgram<S> lp;
  lp.num_vars = cells + (egalitarian ? 2 : 0);
  lp.objective.assign(static_cast<size_t>(lp.num_vars), S(0));
  auto var = [m](int i, int j) { return static_cast<size_t>(i * m + j); };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      switch (objective) {
        case LpObjective::kWelfare:
          lp.objective[var(i, j)] = convert(game.R()(i, j) + game.C()(i, j));
          break;
        case LpObjective::kPlayerX:
          lp.objective[var(i, j)] = convert(game.R()(i, j));
          break;
        case LpObjective::kPlayerY:
          lp.objective[var(i, j)] = convert(game.C()(i, j));
          break;
        case LpObjective::kEgalitarian:
          break;
      }
    }
  }
  if (egalitarian) {
    lp.objective[static_cast<size_t>(cells)] = S(1);
    lp.objective[static_cast<size_t>(cells + 1)] = S(-1);
  }

  using Row = typename LinearProgram<S>::Row;
  Row total;
  total.coeffs.assign(static_cast<size_t>(lp.num_vars), S(0));
  for (int c = 0; c < cells; ++c) total.coeffs[static_cast<size_t>(c)] = S(1);
  total.sense = RowSense::kEqual;
  total.rhs = S(1);
  lp.rows.push_back(std::move(total));

  // Row player deviating to a: sum_ij mu_ij (R[a][j] - R[i][j]) <= 0.
  for (int a = 0; a < m; ++a) {
    Row row;
    row.coeffs.assign(static_cast<size_t>(lp.num_vars), S(0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        row.coeffs[var(i, j)] = convert(game.R()(a, j) - game.R()(i, j));
      }
    }
    lp.rows.push_back(std::move(row));
  }
  // Column player deviating to b: sum_ij mu_ij (C[i][b] - C[i][j]) <= 0.
  for (int b = 0; b < m; ++b) {
    Row row;
    row.coeffs.assign(static_cast<size_t>(lp.num_vars), S(0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        row.coeffs[var(i, j)] = convert(game.C()(i, b) - game.C()(i, j));
      }
    }
    lp.rows.push_back(std::move(row));
  }
  if (egalitarian) {
    // z+ - z- - u(mu) <= 0 for each player.
    for (int player = 0; player < 2; ++player) {
      const Matrix<Rational>& U = player == 0 ? game.R() : game.C();
      Row row;
      row.coeffs.assign(static_cast<size_t>(lp.num_vars), S(0));
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) row.coeffs[var(i, j)] = convert(Rational(-U(i, j)));
      }
      row.coeffs[static_cast<size_t>(cells)] = S(1);
      row.coeffs[static_cast<size_t>(cells + 1)] = S(-1);
      lp.rows.push_back(std::move(row));
    }
  }
  return lp;
}

Rational ObjectiveOf(const Game& game, const JointDistribution& joint,
                     LpObjective objective) {
  const CceEvaluation eval = EvaluateCce(game, joint);
  switch (objective) {
    case LpObjective::kWelfare:
      return eval.utility_x + eval.utility_y;
    case LpObjective::kPlayerX:
      return eval.utility_x;
    case LpObjective::kPlayerY:
      return eval.utility_y;
    case LpObjective::kEgalitarian:
      return std::min(eval.utility_x, eval.utility_y);
  }
  return Rational(0);
}

}  // namespace

std::string LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnboundedGuard:
      return "unbounded-guard";
    case LpStatus::kNotConverged:
      return "not-converged";
  }
  return "unknown";
}

std::string LpObjectiveName(LpObjective objective) {
  switch (objective) {
    case LpObjective::kWelfare:
      return "welfare";
    case LpObjective::kEgalitarian:
      return "egalitarian";
    case LpObjective::kPlayerX:
      return "player-x";
    case LpObjective::kPlayerY:
      return "player-y";
  }
  return "unknown";
}

std::optional<LpObjective> ParseLpObjective(const std::string& name) {
  for (LpObjective o : {LpObjective::kWelfare, LpObjective::kEgalitarian,
                        LpObjective::kPlayerX, LpObjective::kPlayerY}) {
    if (LpObjectiveName(o) == name) return o;
  }
  return std::nullopt;
}

LpSolution LpOptimalCce(const Game& game, LpObjective objective,
                        std::optional<ArithmeticMode> mode) {
  const int m = game.size();
  LpSolution solution;
  solution.mode = mode.value_or(m <= kExactLpMaxActions ? ArithmeticMode::kExact
                                                        : ArithmeticMode::kFloat);
  Matrix<Rational> probs(m, m, Rational(0));
  if (solution.mode == ArithmeticMode::kExact) {
    const LinearProgram<Rational> lp = BuildProgram<Rational>(
        game, objective, [](const Rational& v) { return v; });
    SimplexResult<Rational> result = SolveLinearProgram(lp, Rational(0));
    solution.status = result.status;
    solution.pivots = result.pivots;
    if (result.status != LpStatus::kOptimal) return solution;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) probs(i, j) = result.x[static_cast<size_t>(i * m + j)];
    }
  } else {
    const LinearProgram<double> lp = BuildProgram<double>(
        game, objective, [](const Rational& v) { return ToDouble(v); });
    SimplexResult<double> result = SolveLinearProgram(lp, kFloatLpTolerance);
    solution.status = result.status;
    solution.pivots = result.pivots;
    if (result.status != LpStatus::kOptimal) return solution;
    Rational total = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double v = result.x[static_cast<size_t>(i * m + j)];
        probs(i, j) = v > 0 ? FromDouble(v) : Rational(0);
        total += probs(i, j);
      }
    }
    if (sgn(total) == 0) {
      solution.status = LpStatus::kNotConverged;
      return solution;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) probs(i, j) /= total;
    }
  }
  solution.joint = JointDistribution(std::move(probs));
  solution.objective_value = ObjectiveOf(game, solution.joint, objective);
  return solution;
}

}  // namespace sparsecce
