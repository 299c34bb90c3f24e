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

#ifndef SPARSECCE_CONSTRUCTIONS_HPP_
#define SPARSECCE_CONSTRUCTIONS_HPP_

#include <cstdint>

#include "sparsecce/rational.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

struct GzParams {
  int k = 2;
  Rational gamma;
  int T = 1;  // only the augmented gadgets depend on T
};

// (1 / (80 k^3 (k+1)))^2. Below the extraction bound 1/(40^2 k^6 (k+1)^2) and
// a perfect square, so sqrt(gamma) stays rational.
Rational DefaultGamma(int k);

// The extraction bound 1/(40^2 k^6 (k+1)^2); valid gammas are strictly below.
Rational GammaBound(int k);

GzParams MakeGzParams(int k, int T);

// A with A[i][j] = 1 iff {i,j} is an edge or i == j (0-based indices).
Matrix<Rational> AdjacencyWithLoops(const Graph& g);

// R = 1/2 [[A + gamma I, -k I], [k I, 0]], C = R^T. Actions 0..n-1 are the
// nodes, n..2n-1 the auxiliary actions.
Game BuildGzGame(const Graph& g, const GzParams& p);

// Uniform T-sparse certificate: the sorted clique is cut into T contiguous
// blocks and block t is played by both players in component t. Node labels
// are 1-based; strategies have length game_size.
SparseMixture CliqueCce(const NodeSet& clique, int T, int game_size);

// r = (1 + gamma T / k) / 2, the per-player utility of the certificate.
Rational AugmentedR(const GzParams& p);

// GZ game plus a final action O (index 2n). Against anything else the player
// choosing O gets r and the opponent -r; (O, O) pays (r, r).
Game BuildAugmentedGame(const Graph& g, const GzParams& p);

// As BuildAugmentedGame but (O, O) pays (eps, eps). Requires 0 < eps < 1/2.
Game BuildBasicEmbGame(const Graph& g, const GzParams& p, const Rational& eps);

struct LowPrecParams {
  int M = 10;
  int N = 0;
  int n = 0;
  uint64_t seed = 0;
};

// R = 1/2 [[A, -B^T], [B, 0]], C = 1/2 [[A, B^T], [-B, 0]] with B of shape
// (N - n) x n, B[i][j] = M with probability 3/(4M), else 0.
Game BuildLowPrecGame(const Graph& g, const LowPrecParams& p);

// Whether B[i][j] (0-based) is a spike for the given seed and M.
bool LowPrecSpike(uint64_t seed, int M, int i, int j);

// Parameter values of the low-precision construction as stated for the
// asymptotic regime. N is astronomically large, so only ln N is kept.
struct AsymptoticSchedule {
  int M = 0;
  int c1 = 0;
  int c2 = 0;
  double log_N = 0;
  double k = 0;
  Rational eps;
  Rational eps_hat;
};
AsymptoticSchedule MakeAsymptoticSchedule(int n, int T);

// Workstation-sized schedule: M = 5T, N = 8n, k = ceil(c M^2 ln N).
struct DeskSchedule {
  int M = 0;
  int N = 0;
  int k = 0;
};
inline constexpr double kDeskScheduleC = 0.1;
DeskSchedule MakeDeskSchedule(int n, int T, double c = kDeskScheduleC);

}  // namespace sparsecce

#endif  // SPARSECCE_CONSTRUCTIONS_HPP_
