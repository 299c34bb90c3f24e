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

#ifndef SPARSECCE_BRUTEFORCE_HPP_
#define SPARSECCE_BRUTEFORCE_HPP_

#include <optional>

#include "sparsecce/rational.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

struct BruteforceResult {
  SparseMixture mixture;
  Rational gap;
  Rational welfare;
};

inline constexpr int kBruteforceMaxActions = 5;
inline constexpr int kBruteforceMaxT = 2;
inline constexpr int kBruteforceMaxResolution = 6;

// Searches every uniform T-sparse mixture whose strategies lie on the grid
// {0, 1/d, ..., 1} and returns the highest-welfare one with CCE gap <= eps.
// Ties go to the first candidate in enumeration order: grid strategies in
// lexicographic order of their numerators, products (x, y) with x outer, and
// for T = 2 unordered pairs (p, q) with p <= q. nullopt when nothing on the
// grid meets the gap budget. Only tiny inputs are accepted (m <= 5, T <= 2,
// d <= 6).
std::optional<BruteforceResult> BruteforceOptimalSparseCce(const Game& game, int T,
                                                           int resolution,
                                                           const Rational& eps);

// All grid strategies with denominator d on m actions, in enumeration order.
std::vector<MixedStrategy> GridStrategies(int m, int d);

}  // namespace sparsecce

#endif  // SPARSECCE_BRUTEFORCE_HPP_
