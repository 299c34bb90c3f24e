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

#include "sparsecce/core.hpp"

#include <algorithm>

namespace sparsecce {
namespace {

void CheckShape(const Game& game, int m) {
  if (game.size() != m) {
    throw ShapeError("game has " + std::to_string(game.size()) +
                     " actions, distribution has " + std::to_string(m));
  }
}

// Index of the maximum entry; ties go to the lowest index.
int ArgMax(const std::vector<Rational>& values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<size_t>(i)] > values[static_cast<size_t>(best)]) best = i;
  }
  return best;
}

// Payoff of every pure row action against column distribution q.
std::vector<Rational> RowDeviationPayoffs(const Matrix<Rational>& R,
                                          const std::vector<Rational>& q) {
  const int m = R.rows();
  std::vector<Rational> out(static_cast<size_t>(m), Rational(0));
  for (int j = 0; j < m; ++j) {
    const Rational& qj = q[static_cast<size_t>(j)];
    if (sgn(qj) == 0) continue;
    for (int a = 0; a < m; ++a) out[static_cast<size_t>(a)] += R(a, j) * qj;
  }
  return out;
}

// Payoff of every pure column action against row distribution p.
std::vector<Rational> ColDeviationPayoffs(const Matrix<Rational>& C,
                                          const std::vector<Rational>& p) {
  const int m = C.rows();
  std::vector<Rational> out(static_cast<size_t>(m), Rational(0));
  for (int i = 0; i < m; ++i) {
    const Rational& pi = p[static_cast<size_t>(i)];
    if (sgn(pi) == 0) continue;
    for (int b = 0; b < m; ++b) out[static_cast<size_t>(b)] += C(i, b) * pi;
  }
  return out;
}

CceEvaluation Finish(const Game& game, const std::vector<Rational>& p,
                     const std::vector<Rational>& q, Rational utility_x,
                     Rational utility_y) {
  CceEvaluation eval;
  const std::vector<Rational> dev_x = RowDeviationPayoffs(game.R(), q);
  const std::vector<Rational> dev_y = ColDeviationPayoffs(game.C(), p);
  eval.best_row_deviation = ArgMax(dev_x);
  eval.best_col_deviation = ArgMax(dev_y);
  eval.gap_x = dev_x[static_cast<size_t>(eval.best_row_deviation)] - utility_x;
  eval.gap_y = dev_y[static_cast<size_t>(eval.best_col_deviation)] - utility_y;
  eval.gap = std::max(eval.gap_x, eval.gap_y);
  eval.utility_x = std::move(utility_x);
  eval.utility_y = std::move(utility_y);
  return eval;
}

}  // namespace

JointDistribution MixtureToJoint(const SparseMixture& mix, int m) {
  if (mix.m() != m) {
    throw ShapeError("mixture strategies have length " + std::to_string(mix.m()) +
                     ", expected " + std::to_string(m));
  }
  Matrix<Rational> probs(m, m, Rational(0));
  for (int t = 0; t < mix.T(); ++t) {
    const Rational& alpha = mix.weight(t);
    if (sgn(alpha) == 0) continue;
    const MixedStrategy& x = mix.row(t);
    const MixedStrategy& y = mix.col(t);
    const std::vector<int> ys = y.Support();
    for (int i : x.Support()) {
      const Rational ax = alpha * x[i];
      for (int j : ys) probs(i, j) += ax * y[j];
    }
  }
  return JointDistribution(std::move(probs));
}

SparseMixture NSparseDecompose(const JointDistribution& joint) {
  const int m = joint.size();
  std::vector<Rational> weights;
  std::vector<MixedStrategy> rows;
  std::vector<MixedStrategy> cols;
  for (int t = 0; t < m; ++t) {
    Rational mass = 0;
    for (int j = 0; j < m; ++j) mass += joint(t, j);
    rows.push_back(MixedStrategy::PointMass(m, t));
    if (sgn(mass) == 0) {
      cols.push_back(MixedStrategy::Uniform(m));
    } else {
      std::vector<Rational> y(static_cast<size_t>(m));
      for (int j = 0; j < m; ++j) y[static_cast<size_t>(j)] = joint(t, j) / mass;
      cols.emplace_back(std::move(y));
    }
    weights.push_back(std::move(mass));
  }
  return SparseMixture(std::move(weights), std::move(rows), std::move(cols));
}

std::pair<Rational, Rational> ExpectedUtilities(const Game& game,
                                                const MixedStrategy& x,
                                                const MixedStrategy& y) {
  CheckShape(game, x.size());
  CheckShape(game, y.size());
  Rational ux = 0;
  Rational uy = 0;
  const std::vector<int> ys = y.Support();
  for (int i : x.Support()) {
    for (int j : ys) {
      const Rational w = x[i] * y[j];
      ux += w * game.R()(i, j);
      uy += w * game.C()(i, j);
    }
  }
  return {ux, uy};
}

CceEvaluation EvaluateCce(const Game& game, const SparseMixture& mix) {
  CheckShape(game, mix.m());
  Rational ux = 0;
  Rational uy = 0;
  for (int t = 0; t < mix.T(); ++t) {
    if (sgn(mix.weight(t)) == 0) continue;
    auto [a, b] = ExpectedUtilities(game, mix.row(t), mix.col(t));
    ux += mix.weight(t) * a;
    uy += mix.weight(t) * b;
  }
  return Finish(game, RowMarginal(mix), ColMarginal(mix), std::move(ux),
                std::move(uy));
}

CceEvaluation EvaluateCce(const Game& game, const JointDistribution& joint) {
  const int m = joint.size();
  CheckShape(game, m);
  std::vector<Rational> p(static_cast<size_t>(m), Rational(0));
  std::vector<Rational> q(static_cast<size_t>(m), Rational(0));
  Rational ux = 0;
  Rational uy = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Rational& mu = joint(i, j);
      if (sgn(mu) == 0) continue;
      p[static_cast<size_t>(i)] += mu;
      q[static_cast<size_t>(j)] += mu;
      ux += mu * game.R()(i, j);
      uy += mu * game.C()(i, j);
    }
  }
  return Finish(game, p, q, std::move(ux), std::move(uy));
}

Rational SocialWelfare(const Game& game, const JointDistribution& joint) {
  CheckShape(game, joint.size());
  Rational total = 0;
  for (int i = 0; i < joint.size(); ++i) {
    for (int j = 0; j < joint.size(); ++j) {
      if (sgn(joint(i, j)) == 0) continue;
      total += joint(i, j) * (game.R()(i, j) + game.C()(i, j));
    }
  }
  return total;
}

Rational SocialWelfare(const Game& game, const SparseMixture& mix) {
  CheckShape(game, mix.m());
  Rational total = 0;
  for (int t = 0; t < mix.T(); ++t) {
    if (sgn(mix.weight(t)) == 0) continue;
    auto [a, b] = ExpectedUtilities(game, mix.row(t), mix.col(t));
    total += mix.weight(t) * (a + b);
  }
  return total;
}

Rational EgalitarianWelfare(const Game& game, const JointDistribution& joint) {
  const CceEvaluation eval = EvaluateCce(game, joint);
  return std::min(eval.utility_x, eval.utility_y);
}

Rational EgalitarianWelfare(const Game& game, const SparseMixture& mix) {
  const CceEvaluation eval = EvaluateCce(game, mix);
  return std::min(eval.utility_x, eval.utility_y);
}

Rational CeGap(const Game& game, const JointDistribution& joint) {
  const int m = joint.size();
  CheckShape(game, m);
  const Matrix<Rational>& R = game.R();
  const Matrix<Rational>& C = game.C();

  Rational total_x = 0;
  for (int a = 0; a < m; ++a) {
    std::vector<int> support;
    for (int j = 0; j < m; ++j) {
      if (sgn(joint(a, j)) > 0) support.push_back(j);
    }
    if (support.empty()) continue;
    Rational on_path = 0;
    for (int j : support) on_path += joint(a, j) * R(a, j);
    Rational best = 0;
    for (int b = 0; b < m; ++b) {
      Rational value = 0;
      for (int j : support) value += joint(a, j) * R(b, j);
      value -= on_path;
      if (value > best) best = value;
    }
    total_x += best;
  }

  Rational total_y = 0;
  for (int a = 0; a < m; ++a) {
    std::vector<int> support;
    for (int i = 0; i < m; ++i) {
      if (sgn(joint(i, a)) > 0) support.push_back(i);
    }
    if (support.empty()) continue;
    Rational on_path = 0;
    for (int i : support) on_path += joint(i, a) * C(i, a);
    Rational best = 0;
    for (int b = 0; b < m; ++b) {
      Rational value = 0;
      for (int i : support) value += joint(i, a) * C(i, b);
      value -= on_path;
      if (value > best) best = value;
    }
    total_y += best;
  }
  return std::max(total_x, total_y);
}

Rational CeGap(const Game& game, const SparseMixture& mix) {
  return CeGap(game, MixtureToJoint(mix, mix.m()));
}

GapReport CceGap(const Game& game, const SparseMixture& mix) {
  return CceGap(game, MixtureToJoint(mix, mix.m()));
}

GapReport CceGap(const Game& game, const JointDistribution& joint) {
  const CceEvaluation eval = EvaluateCce(game, joint);
  GapReport report;
  report.cce_gap = eval.gap;
  report.ce_gap = CeGap(game, joint);
  report.best_row_deviation = eval.best_row_deviation;
  report.best_col_deviation = eval.best_col_deviation;
  report.utility_x = eval.utility_x;
  report.utility_y = eval.utility_y;
  report.welfare = eval.utility_x + eval.utility_y;
  report.egalitarian = std::min(eval.utility_x, eval.utility_y);
  return report;
}

std::vector<Rational> RowMarginal(const SparseMixture& mix) {
  std::vector<Rational> p(static_cast<size_t>(mix.m()), Rational(0));
  for (int t = 0; t < mix.T(); ++t) {
    if (sgn(mix.weight(t)) == 0) continue;
    for (int i : mix.row(t).Support()) {
      p[static_cast<size_t>(i)] += mix.weight(t) * mix.row(t)[i];
    }
  }
  return p;
}

std::vector<Rational> ColMarginal(const SparseMixture& mix) {
  std::vector<Rational> q(static_cast<size_t>(mix.m()), Rational(0));
  for (int t = 0; t < mix.T(); ++t) {
    if (sgn(mix.weight(t)) == 0) continue;
    for (int j : mix.col(t).Support()) {
      q[static_cast<size_t>(j)] += mix.weight(t) * mix.col(t)[j];
    }
  }
  return q;
}

SparseMixture PadMixture(const SparseMixture& mix, int m) {
  if (m < mix.m()) throw ShapeError("cannot pad a mixture to fewer actions");
  auto pad = [m](const MixedStrategy& s) {
    std::vector<Rational> probs = s.probs();
    probs.resize(static_cast<size_t>(m), Rational(0));
    return MixedStrategy(std::move(probs));
  };
  std::vector<MixedStrategy> rows;
  std::vector<MixedStrategy> cols;
  for (int t = 0; t < mix.T(); ++t) {
    rows.push_back(pad(mix.row(t)));
    cols.push_back(pad(mix.col(t)));
  }
  return SparseMixture(mix.weights(), std::move(rows), std::move(cols));
}

Game ScaleGame(const Game& game, const Rational& factor) {
  const int m = game.size();
  Matrix<Rational> R(m, m);
  Matrix<Rational> C(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      R(i, j) = game.R()(i, j) * factor;
      C(i, j) = game.C()(i, j) * factor;
    }
  }
  return Game(std::move(R), std::move(C), game.row_labels(), game.col_labels());
}

}  // namespace sparsecce
