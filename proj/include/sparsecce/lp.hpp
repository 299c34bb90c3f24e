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

#ifndef SPARSECCE_LP_HPP_
#define SPARSECCE_LP_HPP_

#include <optional>
#include <string>

#include "sparsecce/rational.hpp"
#include "sparsecce/simplex.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

enum class LpObjective { kWelfare, kEgalitarian, kPlayerX, kPlayerY };

std::string LpObjectiveName(LpObjective objective);
// Accepts "welfare", "egalitarian", "player-x", "player-y".
std::optional<LpObjective> ParseLpObjective(const std::string& name);

struct LpSolution {
  LpStatus status = LpStatus::kNotConverged;
  ArithmeticMode mode = ArithmeticMode::kExact;
  JointDistribution joint;    // meaningful only when status is optimal
  Rational objective_value;   // recomputed exactly from `joint`
  int pivots = 0;
};

// Largest game solved with rational pivoting when no mode is requested.
inline constexpr int kExactLpMaxActions = 64;
inline constexpr double kFloatLpTolerance = 1e-9;

// Best CCE for the objective: maximize over mu >= 0, sum mu = 1, and the 2m
// pure-deviation constraints. The egalitarian objective maximizes z subject
// to z <= u_x(mu), z <= u_y(mu). In float mode the solution is snapped to an
// exact distribution, so its gap may be slightly positive.
LpSolution LpOptimalCce(const Game& game, LpObjective objective,
                        std::optional<ArithmeticMode> mode = std::nullopt);

}  // namespace sparsecce

#endif  // SPARSECCE_LP_HPP_
