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

#ifndef SPARSECCE_DYNAMICS_HPP_
#define SPARSECCE_DYNAMICS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "sparsecce/rational.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

// Per-round record of simultaneous multiplicative weights. Strategies are
// stored exactly (they are dyadic by construction). Utilities u_x = R y and
// u_y = C^T x are kept as rationals in exact mode and as doubles in float
// mode.
struct DynamicsHistory {
  ArithmeticMode mode = ArithmeticMode::kFloat;
  double eta = 0;
  Rational scale;  // payoffs were divided by this before the update
  std::vector<MixedStrategy> x;
  std::vector<MixedStrategy> y;
  std::vector<std::vector<Rational>> exact_ux;
  std::vector<std::vector<Rational>> exact_uy;
  std::vector<std::vector<double>> float_ux;
  std::vector<std::vector<double>> float_uy;

  int rounds() const { return static_cast<int>(x.size()); }
};

struct MwuResult {
  SparseMixture mixture;  // uniform over the T rounds
  DynamicsHistory history;
};

// sqrt(8 ln m / T), the step size for payoffs normalized to [-1, 1].
double DefaultEta(int m, int T);

// Both players run Hedge from the uniform strategy with full feedback. The
// learning rate `eta` applies to payoffs divided by the largest absolute
// entry of the game.
MwuResult MwuRun(const Game& game, int T, std::optional<double> eta = std::nullopt,
                 ArithmeticMode mode = ArithmeticMode::kFloat);

// (Reg_x, Reg_y) with the best fixed action in hindsight. Exact in exact
// mode; in float mode the double-precision regret converted exactly.
std::pair<Rational, Rational> ExternalRegret(const DynamicsHistory& history);

// Uniform mixture of the first `rounds` strategy pairs.
SparseMixture EmpiricalMixture(const DynamicsHistory& history, int rounds);

// Hedge regret ceiling for the default step size, in game units:
// 1.25 * range * sqrt(ln m / (2T)) with range = 2 * scale.
double RegretCeiling(const Rational& scale, int m, int T);

}  // namespace sparsecce

#endif  // SPARSECCE_DYNAMICS_HPP_
