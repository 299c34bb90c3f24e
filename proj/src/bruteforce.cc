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

#include "sparsecce/bruteforce.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sparsecce/core.hpp"

namespace sparsecce {
namespace {

void Compositions(int m, int remaining, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    Compositions(m, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

// Everything needed to score a product x (x) y inside a uniform mixture.
struct Product {
  int x = 0;
  int y = 0;
  Rational ux;
  Rational uy;
  std::vector<Rational> dev_x;  // R y
  std::vector<Rational> dev_y;  // C^T x
  Rational welfare;
};

// 2 * (gap of the uniform mixture of p and q) <= 2 * eps, computed without
// dividing by 2.
bool PairFeasible(const Product& p, const Product& q, const Rational& two_eps) {
  const size_t m = p.dev_x.size();
  Rational best_x = p.dev_x[0] + q.dev_x[0];
  Rational best_y = p.dev_y[0] + q.dev_y[0];
  for (size_t a = 1; a < m; ++a) {
    Rational vx = p.dev_x[a] + q.dev_x[a];
    if (vx > best_x) best_x = vx;
    Rational vy = p.dev_y[a] + q.dev_y[a];
    if (vy > best_y) best_y = vy;
  }
  return best_x - p.ux - q.ux <= two_eps && best_y - p.uy - q.uy <= two_eps;
}

bool SingleFeasible(const Product& p, const Rational& eps) {
  const Rational best_x = *std::max_element(p.dev_x.begin(), p.dev_x.end());
  const Rational best_y = *std::max_element(p.dev_y.begin(), p.dev_y.end());
  return best_x - p.ux <= eps && best_y - p.uy <= eps;
}

}  // namespace

std::vector<MixedStrategy> GridStrategies(int m, int d) {
  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  Compositions(m, d, prefix, comps);
  std::vector<MixedStrategy> out;
  out.reserve(comps.size());
  for (const auto& c : comps) {
    std::vector<Rational> probs;
    for (int v : c) probs.emplace_back(Rational(v, d));
    for (Rational& p : probs) p.canonicalize();
    out.emplace_back(std::move(probs));
  }
  return out;
}

std::optional<BruteforceResult> BruteforceOptimalSparseCce(const Game& game, int T,
                                                           int resolution,
                                                           const Rational& eps) {
  const int m = game.size();
  if (m < 1 || m > kBruteforceMaxActions) {
    throw ParameterError("brute force supports 1..5 actions");
  }
  if (T < 1 || T > kBruteforceMaxT) throw ParameterError("brute force supports T in {1, 2}");
  if (resolution < 1 || resolution > kBruteforceMaxResolution) {
    throw ParameterError("brute force supports grid denominators 1..6");
  }
  const std::vector<MixedStrategy> grid = GridStrategies(m, resolution);
  const int g = static_cast<int>(grid.size());

  std::vector<Product> products;
  products.reserve(static_cast<size_t>(g) * static_cast<size_t>(g));
  for (int xi = 0; xi < g; ++xi) {
    for (int yi = 0; yi < g; ++yi) {
      Product p;
      p.x = xi;
      p.y = yi;
      const MixedStrategy& x = grid[static_cast<size_t>(xi)];
      const MixedStrategy& y = grid[static_cast<size_t>(yi)];
      auto [ux, uy] = ExpectedUtilities(game, x, y);
      p.ux = ux;
      p.uy = uy;
      p.welfare = ux + uy;
      p.dev_x.assign(static_cast<size_t>(m), Rational(0));
      p.dev_y.assign(static_cast<size_t>(m), Rational(0));
      for (int a = 0; a < m; ++a) {
        for (int j : y.Support()) p.dev_x[static_cast<size_t>(a)] += game.R()(a, j) * y[j];
        for (int i : x.Support()) p.dev_y[static_cast<size_t>(a)] += game.C()(i, a) * x[i];
      }
      products.push_back(std::move(p));
    }
  }
  const int P = static_cast<int>(products.size());
  auto make_result = [&](std::vector<int> chosen) {
    std::vector<MixedStrategy> xs;
    std::vector<MixedStrategy> ys;
    for (int c : chosen) {
      xs.push_back(grid[static_cast<size_t>(products[static_cast<size_t>(c)].x)]);
      ys.push_back(grid[static_cast<size_t>(products[static_cast<size_t>(c)].y)]);
    }
    BruteforceResult result;
    result.mixture = SparseMixture::Uniform(std::move(xs), std::move(ys));
    const CceEvaluation eval = EvaluateCce(game, result.mixture);
    result.gap = eval.gap;
    result.welfare = eval.utility_x + eval.utility_y;
    return result;
  };

  if (T == 1) {
    int best = -1;
    for (int p = 0; p < P; ++p) {
      const Product& prod = products[static_cast<size_t>(p)];
      if (best >= 0 && !(prod.welfare > products[static_cast<size_t>(best)].welfare)) continue;
      if (SingleFeasible(prod, eps)) best = p;
    }
    if (best < 0) return std::nullopt;
    return make_result({best});
  }

  // T = 2. First the optimal value, scanning by decreasing welfare so the
  // search stops once no pair can do strictly better.
  std::vector<int> order(static_cast<size_t>(P));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return products[static_cast<size_t>(a)].welfare > products[static_cast<size_t>(b)].welfare;
  });
  const Rational two_eps = 2 * eps;
  const Rational& top = products[static_cast<size_t>(order.front())].welfare;
  std::optional<Rational> best_value;
  for (int p : order) {
    const Product& a = products[static_cast<size_t>(p)];
    if (best_value && a.welfare + top <= *best_value) break;
    for (int q : order) {
      const Product& b = products[static_cast<size_t>(q)];
      const Rational value = a.welfare + b.welfare;
      if (best_value && value <= *best_value) break;
      if (PairFeasible(a, b, two_eps)) {
        best_value = value;
        break;
      }
    }
  }
  if (!best_value) return std::nullopt;

  // Then the first pair in enumeration order attaining it.
  std::map<Rational, std::vector<int>> by_welfare;
  for (int p = 0; p < P; ++p) by_welfare[products[static_cast<size_t>(p)].welfare].push_back(p);
  for (int p = 0; p < P; ++p) {
    const Product& a = products[static_cast<size_t>(p)];
    auto it = by_welfare.find(*best_value - a.welfare);
    if (it == by_welfare.end()) continue;
    for (int q : it->second) {
      if (q < p) continue;
      if (PairFeasible(a, products[static_cast<size_t>(q)], two_eps)) return make_result({p, q});
    }
  }
  return std::nullopt;  // unreachable: the optimum was attained above
}

}  // namespace sparsecce
