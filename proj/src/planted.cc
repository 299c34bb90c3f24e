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

#include "sparsecce/planted.hpp"

#include <algorithm>
#include <numeric>

#include "sparsecce/reduction.hpp"
#include "sparsecce/rng.hpp"

namespace sparsecce {
namespace {

constexpr uint64_t kEdgeStream = 3;

std::vector<int> Shuffled(int n, SplitMixStream& rng) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.Below(static_cast<uint64_t>(i) + 1));
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
  }
  return order;
}

}  // namespace

PlantedInstance GenPlantedGraph(int n, int k, uint64_t seed) {
  if (n < 1) throw ParameterError("n must be positive");
  if (k < 0 || k > n) {
    throw ParameterError("planted size " + std::to_string(k) + " not in 0.." + std::to_string(n));
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool inside = j <= k;
      if (inside || (HashIndex(seed, static_cast<uint64_t>(i), static_cast<uint64_t>(j),
                               kEdgeStream) & 1u)) {
        edges.emplace_back(i, j);
      }
    }
  }
  PlantedInstance out;
  out.graph = Graph(n, edges);
  out.planted.resize(static_cast<size_t>(k));
  std::iota(out.planted.begin(), out.planted.end(), 1);
  out.n = n;
  out.k = k;
  out.seed = seed;
  return out;
}

PlantedInstance PermuteLabels(const PlantedInstance& instance, uint64_t seed) {
  const int n = instance.graph.n();
  SplitMixStream rng(HashIndex(seed, 0, 0, 4));
  const std::vector<int> image = Shuffled(n, rng);  // node v -> image[v-1]
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : instance.graph.edges()) {
    const int pa = image[static_cast<size_t>(a - 1)];
    const int pb = image[static_cast<size_t>(b - 1)];
    edges.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  PlantedInstance out = instance;
  out.graph = Graph(n, edges);
  out.planted.clear();
  for (int v : instance.planted) out.planted.push_back(image[static_cast<size_t>(v - 1)]);
  std::sort(out.planted.begin(), out.planted.end());
  return out;
}

int GreedyCliqueStatistic(const Graph& g, int restarts, uint64_t seed) {
  SplitMixStream rng(HashIndex(seed, 0, 0, 5));
  int best = 0;
  for (int r = 0; r < restarts; ++r) {
    std::vector<int> kept;
    for (int v : Shuffled(g.n(), rng)) {
      if (std::all_of(kept.begin(), kept.end(), [&](int u) { return g.HasEdge(u, v); })) {
        kept.push_back(v);
      }
    }
    best = std::max(best, static_cast<int>(kept.size()));
  }
  return best;
}

Rational Dens(const Graph& g, const NodeSet& s, const NodeSet& t) {
  if (s.empty() || s.size() != t.size()) {
    throw ParameterError("dens needs two non-empty sets of equal size");
  }
  long present = 0;
  for (int i : s) {
    for (int j : t) {
      if (i < 1 || i > g.n() || j < 1 || j > g.n()) throw InputError("node outside the graph");
      if (g.Linked(i, j)) ++present;
    }
  }
  Rational out(present, static_cast<long>(s.size() * t.size()));
  out.canonicalize();
  return out;
}

std::optional<DensePair> ExtractDensePair(const Game& game, int n, const SparseMixture& mix,
                                          int d, int M) {
  if (d < 1) throw ParameterError("d must be positive");
  if (M < 1) throw ParameterError("M must be positive");
  if (n < 1 || n > game.size() || mix.m() != game.size()) {
    throw ShapeError("mixture, game and node block disagree");
  }
  const Rational floor_weight(1, mix.T());
  int comp = -1;
  for (int t = 0; t < mix.T(); ++t) {
    if (mix.weight(t) >= floor_weight) {
      comp = t;
      break;
    }
  }
  const MixedStrategy& x = mix.row(comp);
  const MixedStrategy& y = mix.col(comp);
  auto A = [&game](int i, int j) { return 2 * game.R()(i, j); };

  DensePair out;
  out.component = comp;
  const Rational four_fifths(4, 5);
  const std::vector<int> xs = x.Support();
  for (int j : y.Support()) {
    if (j >= n) continue;
    Rational v = 0;
    for (int i : xs) {
      if (i < n) v += x[i] * A(i, j);
    }
    if (v >= four_fifths) out.t.push_back(j + 1);
  }
  if (static_cast<int>(out.t.size()) < d) return std::nullopt;
  out.t.resize(static_cast<size_t>(d));
  for (int j : out.t) out.mass_t += y[j - 1];

  const Rational three_fifths(3, 5);
  for (int i : xs) {
    if (i >= n) continue;
    Rational v = 0;
    for (int j : out.t) v += A(i, j - 1);
    v /= d;
    if (v >= three_fifths) out.s.push_back(i + 1);
  }
  if (static_cast<int>(out.s.size()) < d) return std::nullopt;
  out.s.resize(static_cast<size_t>(d));
  return out;
}

CliqueRecovery CliqueFromDensePair(const Graph& g, const NodeSet& s, const NodeSet& t,
                                   int target) {
  NodeSet u = s;
  u.insert(u.end(), t.begin(), t.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  while (!IsClique(g, u)) {
    size_t worst = 0;
    int worst_degree = -1;
    for (size_t a = 0; a < u.size(); ++a) {
      int degree = 0;
      for (size_t b = 0; b < u.size(); ++b) {
        if (a != b && g.HasEdge(u[a], u[b])) ++degree;
      }
      if (worst_degree < 0 || degree < worst_degree) {
        worst = a;
        worst_degree = degree;
      }
    }
    u.erase(u.begin() + static_cast<long>(worst));
  }
  CliqueRecovery out;
  out.target_reached = static_cast<int>(u.size()) >= target;
  out.clique = std::move(u);
  return out;
}

}  // namespace sparsecce
