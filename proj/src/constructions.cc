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

#include "sparsecce/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sparsecce/rng.hpp"

namespace sparsecce {
namespace {

std::vector<std::string> NodeLabels(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

void CheckParams(const GzParams& p) {
  if (p.k < 1) throw ParameterError("k must be positive");
  if (p.T < 1) throw ParameterError("T must be positive");
  if (sgn(p.gamma) < 0) throw ParameterError("gamma must be non-negative");
}

Game Augment(const Graph& g, const GzParams& p, const Rational& corner) {
  const Game base = BuildGzGame(g, p);
  const int m = base.size();
  const Rational r = AugmentedR(p);
  Matrix<Rational> R(m + 1, m + 1);
  Matrix<Rational> C(m + 1, m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      R(i, j) = base.R()(i, j);
      C(i, j) = base.C()(i, j);
    }
    R(m, i) = r;
    C(m, i) = -r;
    R(i, m) = -r;
    C(i, m) = r;
  }
  R(m, m) = corner;
  C(m, m) = corner;
  std::vector<std::string> labels = base.row_labels();
  labels.push_back("O");
  return Game(std::move(R), std::move(C), labels, labels);
}

}  // namespace

Rational DefaultGamma(int k) {
  Rational root(1, 80);
  root /= Rational(k) * k * k * (k + 1);
  root.canonicalize();
  return root * root;
}

Rational GammaBound(int k) {
  Rational k3 = Rational(k) * k * k;
  Rational denom = 1600 * k3 * k3 * (k + 1) * (k + 1);
  return 1 / denom;
}

GzParams MakeGzParams(int k, int T) {
  GzParams p;
  p.k = k;
  p.T = T;
  p.gamma = DefaultGamma(k);
  return p;
}

Matrix<Rational> AdjacencyWithLoops(const Graph& g) {
  const int n = g.n();
  Matrix<Rational> A(n, n, Rational(0));
  for (int i = 0; i < n; ++i) A(i, i) = 1;
  for (const auto& [a, b] : g.edges()) {
    A(a - 1, b - 1) = 1;
    A(b - 1, a - 1) = 1;
  }
  return A;
}

Game BuildGzGame(const Graph& g, const GzParams& p) {
  CheckParams(p);
  const int n = g.n();
  const Matrix<Rational> A = AdjacencyWithLoops(g);
  const Rational half(1, 2);
  const Rational k_half = Rational(p.k) / 2;
  Matrix<Rational> R(2 * n, 2 * n, Rational(0));
  Matrix<Rational> C(2 * n, 2 * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational v = A(i, j);
      if (i == j) v += p.gamma;
      R(i, j) = v * half;
      C(i, j) = R(i, j);
    }
    R(i, n + i) = -k_half;
    C(i, n + i) = k_half;
    R(n + i, i) = k_half;
    C(n + i, i) = -k_half;
  }
  std::vector<std::string> labels = NodeLabels(n, "");
  for (std::string& aux : NodeLabels(n, "aux")) labels.push_back(std::move(aux));
  return Game(std::move(R), std::move(C), labels, labels);
}

SparseMixture CliqueCce(const NodeSet& clique, int T, int game_size) {
  if (T < 1) throw ParameterError("T must be positive");
  const int k = static_cast<int>(clique.size());
  if (k == 0 || k % T != 0) {
    throw ParameterError("clique size " + std::to_string(k) +
                         " is not a positive multiple of T = " + std::to_string(T));
  }
  NodeSet sorted = clique;
  std::sort(sorted.begin(), sorted.end());
  const int block = k / T;
  std::vector<MixedStrategy> strategies;
  for (int t = 0; t < T; ++t) {
    std::vector<int> indices;
    for (int b = 0; b < block; ++b) {
      const int node = sorted[static_cast<size_t>(t * block + b)];
      if (node < 1 || node > game_size) {
        throw ParameterError("clique node " + std::to_string(node) +
                             " outside the game");
      }
      indices.push_back(node - 1);
    }
    strategies.push_back(MixedStrategy::UniformOn(game_size, indices));
  }
  return SparseMixture::Uniform(strategies, strategies);
}

Rational AugmentedR(const GzParams& p) {
  Rational r = 1 + p.gamma * p.T / p.k;
  return r / 2;
}

Game BuildAugmentedGame(const Graph& g, const GzParams& p) {
  return Augment(g, p, AugmentedR(p));
}

Game BuildBasicEmbGame(const Graph& g, const GzParams& p, const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= Rational(1, 2)) {
    throw ParameterError("basic-emb eps must lie in (0, 1/2), got " +
                         FormatRational(eps));
  }
  return Augment(g, p, eps);
}

bool LowPrecSpike(uint64_t seed, int M, int i, int j) {
  // P(u < 3 * 2^64 / (4M)) = 3 / (4M), compared exactly in 128 bits.
  const uint64_t u = HashIndex(seed, static_cast<uint64_t>(i),
                               static_cast<uint64_t>(j), /*stream=*/1);
  const unsigned __int128 lhs = static_cast<unsigned __int128>(u) * (4u * static_cast<unsigned>(M));
  const unsigned __int128 rhs = static_cast<unsigned __int128>(3) << 64;
  return lhs < rhs;
}

Game BuildLowPrecGame(const Graph& g, const LowPrecParams& p) {
  const int n = g.n();
  if (p.n != n) throw ParameterError("LowPrecParams.n does not match the graph");
  if (p.M < 1) throw ParameterError("M must be at least 1");
  if (p.N < n) throw ParameterError("N must be at least n");
  const int N = p.N;
  const Matrix<Rational> A = AdjacencyWithLoops(g);
  const Rational half(1, 2);
  const Rational spike = Rational(p.M) / 2;
  Matrix<Rational> R(N, N, Rational(0));
  Matrix<Rational> C(N, N, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      R(i, j) = A(i, j) * half;
      C(i, j) = R(i, j);
    }
  }
  for (int b = 0; b < N - n; ++b) {
    for (int j = 0; j < n; ++j) {
      if (!LowPrecSpike(p.seed, p.M, b, j)) continue;
      // B[b][j] sits at (n+b, j); B^T[j][b] at (j, n+b).
      R(n + b, j) = spike;
      C(n + b, j) = -spike;
      R(j, n + b) = -spike;
      C(j, n + b) = spike;
    }
  }
  std::vector<std::string> labels = NodeLabels(n, "");
  for (std::string& b : NodeLabels(N - n, "b")) labels.push_back(std::move(b));
  return Game(std::move(R), std::move(C), labels, labels);
}

AsymptoticSchedule MakeAsymptoticSchedule(int n, int T) {
  AsymptoticSchedule s;
  s.M = 5 * T;
  s.c2 = 2000;
  s.c1 = static_cast<int>(std::ceil(s.c2 * std::log(4.0 * s.M / 3.0))) + 2;
  s.log_N = s.c1 * std::log(static_cast<double>(n));
  s.k = std::ceil(96.0 * s.M * s.M * s.log_N);
  s.eps = Rational(1, 4);
  s.eps_hat = s.eps / (4 * s.M);
  return s;
}

DeskSchedule MakeDeskSchedule(int n, int T, double c) {
  DeskSchedule s;
  s.M = 5 * T;
  s.N = 8 * n;
  s.k = static_cast<int>(std::ceil(c * s.M * s.M * std::log(static_cast<double>(s.N))));
  return s;
}

}  // namespace sparsecce
