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

#ifndef SPARSECCE_CORE_HPP_
#define SPARSECCE_CORE_HPP_

#include <utility>
#include <vector>

#include "sparsecce/rational.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

// Expands sum_t alpha_t x_t (x) y_t into an explicit m x m distribution.
// Throws ShapeError unless every strategy has length m.
JointDistribution MixtureToJoint(const SparseMixture& mix, int m);

// Row-wise decomposition of any joint distribution into an m-sparse mixture:
// component t is the point mass on row t paired with the normalized row t.
// All-zero rows get weight 0 and the uniform column strategy.
SparseMixture NSparseDecompose(const JointDistribution& joint);

// Expected payoffs (row player, column player) of a product x (x) y.
std::pair<Rational, Rational> ExpectedUtilities(const Game& game,
                                                const MixedStrategy& x,
                                                const MixedStrategy& y);

Rational SocialWelfare(const Game& game, const JointDistribution& joint);
Rational SocialWelfare(const Game& game, const SparseMixture& mix);
Rational EgalitarianWelfare(const Game& game, const JointDistribution& joint);
Rational EgalitarianWelfare(const Game& game, const SparseMixture& mix);

// Coarse-correlated-equilibrium gap restricted to pure deviations. Signed: a
// strict equilibrium has a negative gap.
struct CceEvaluation {
  Rational gap;    // max(gap_x, gap_y)
  Rational gap_x;
  Rational gap_y;
  int best_row_deviation = 0;
  int best_col_deviation = 0;
  Rational utility_x;
  Rational utility_y;
};

CceEvaluation EvaluateCce(const Game& game, const SparseMixture& mix);
CceEvaluation EvaluateCce(const Game& game, const JointDistribution& joint);

// Full report: CCE gap with argmax deviations, CE gap, and welfare figures.
GapReport CceGap(const Game& game, const SparseMixture& mix);
GapReport CceGap(const Game& game, const JointDistribution& joint);

// Correlated-equilibrium gap: for each player, the total benefit of the best
// swap function, i.e. the sum over recommendations a of
// max_b sum_{a'} mu[a, a'] (R[b, a'] - R[a, a']). Always >= 0.
Rational CeGap(const Game& game, const JointDistribution& joint);
Rational CeGap(const Game& game, const SparseMixture& mix);

std::vector<Rational> RowMarginal(const SparseMixture& mix);
std::vector<Rational> ColMarginal(const SparseMixture& mix);

// Appends zero-probability actions so every strategy has length m.
SparseMixture PadMixture(const SparseMixture& mix, int m);

// Multiplies both payoff matrices by `factor`.
Game ScaleGame(const Game& game, const Rational& factor);

}  // namespace sparsecce

#endif  // SPARSECCE_CORE_HPP_
