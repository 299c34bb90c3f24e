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

#include "sparsecce/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace sparsecce {
namespace {

constexpr int kGridBits = 52;
constexpr uint64_t kGrid = uint64_t{1} << kGridBits;

// Rounds a probability vector down to multiples of 2^-52 and gives the
// leftover mass to the largest coordinate, so the result sums to exactly 1
// and is representable both as doubles and as rationals.
MixedStrategy Quantize(const std::vector<double>& w, std::vector<double>* as_double) {
  const size_t m = w.size();
  std::vector<uint64_t> units(m);
  uint64_t used = 0;
  size_t top = 0;
  for (size_t i = 0; i < m; ++i) {
    units[i] = static_cast<uint64_t>(std::floor(w[i] * static_cast<double>(kGrid)));
    used += units[i];
    if (w[i] > w[top]) top = i;
  }
  units[top] += kGrid - used;
  const mpz_class denom = mpz_class(1) << kGridBits;
  std::vector<Rational> probs(m);
  as_double->assign(m, 0.0);
  for (size_t i = 0; i < m; ++i) {
    mpz_class num;
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &units[i]);
    probs[i] = Rational(num, denom);
    probs[i].canonicalize();
    (*as_double)[i] = std::ldexp(static_cast<double>(units[i]), -kGridBits);
  }
  return MixedStrategy(std::move(probs));
}

std::vector<double> Softmax(const std::vector<double>& cumulative, double eta) {
  const double peak = *std::max_element(cumulative.begin(), cumulative.end());
  std::vector<double> w(cumulative.size());
  double total = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(eta * (cumulative[i] - peak));
    total += w[i];
  }
  for (double& v : w) v /= total;
  return w;
}

Rational MaxAbsEntry(const Game& game) {
  Rational best = 0;
  for (const Matrix<Rational>* M : {&game.R(), &game.C()}) {
    for (const Rational& v : M->data()) {
      const Rational a = abs(v);
      if (a > best) best = a;
    }
  }
  return best;
}

}  // namespace

double DefaultEta(int m, int T) {
  return std::sqrt(8.0 * std::log(static_cast<double>(std::max(m, 2))) / T);
}

MwuResult MwuRun(const Game& game, int T, std::optional<double> eta,
                 ArithmeticMode mode) {
  if (T < 1) throw ParameterError("MWU needs at least one round");
  const int m = game.size();
  if (m < 1) throw ShapeError("empty game");
  DynamicsHistory h;
  h.mode = mode;
  h.eta = eta.value_or(DefaultEta(m, T));
  if (!(h.eta > 0)) throw ParameterError("eta must be positive");
  h.scale = MaxAbsEntry(game);
  const bool constant_zero = sgn(h.scale) == 0;
  const double inv_scale = constant_zero ? 0.0 : 1.0 / ToDouble(h.scale);

  const size_t um = static_cast<size_t>(m);
  std::vector<double> R(um * um);
  std::vector<double> C(um * um);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      R[static_cast<size_t>(i) * um + static_cast<size_t>(j)] = ToDouble(game.R()(i, j));
      C[static_cast<size_t>(i) * um + static_cast<size_t>(j)] = ToDouble(game.C()(i, j));
    }
  }

  std::vector<double> cum_x(um, 0.0);
  std::vector<double> cum_y(um, 0.0);
  std::vector<double> xd;
  std::vector<double> yd;
  for (int t = 0; t < T; ++t) {
    MixedStrategy x = Quantize(Softmax(cum_x, h.eta), &xd);
    MixedStrategy y = Quantize(Softmax(cum_y, h.eta), &yd);
    std::vector<double> ux(um, 0.0);
    std::vector<double> uy(um, 0.0);
    for (size_t i = 0; i < um; ++i) {
      for (size_t j = 0; j < um; ++j) {
        ux[i] += R[i * um + j] * yd[j];
        uy[j] += C[i * um + j] * xd[i];
      }
    }
    if (mode == ArithmeticMode::kExact) {
      std::vector<Rational> eux(um, Rational(0));
      std::vector<Rational> euy(um, Rational(0));
      const std::vector<int> xs = x.Support();
      const std::vector<int> ys = y.Support();
      for (int a = 0; a < m; ++a) {
        for (int j : ys) eux[static_cast<size_t>(a)] += game.R()(a, j) * y[j];
        for (int i : xs) euy[static_cast<size_t>(a)] += game.C()(i, a) * x[i];
      }
      h.exact_ux.push_back(std::move(eux));
      h.exact_uy.push_back(std::move(euy));
    } else {
      h.float_ux.push_back(ux);
      h.float_uy.push_back(uy);
    }
    for (size_t i = 0; i < um; ++i) {
      cum_x[i] += ux[i] * inv_scale;
      cum_y[i] += uy[i] * inv_scale;
    }
    h.x.push_back(std::move(x));
    h.y.push_back(std::move(y));
  }
  MwuResult result;
  result.mixture = EmpiricalMixture(h, T);
  result.history = std::move(h);
  return result;
}

std::pair<Rational, Rational> ExternalRegret(const DynamicsHistory& h) {
  const int T = h.rounds();
  if (T == 0) throw ParameterError("empty history");
  const int m = h.x.front().size();
  const size_t um = static_cast<size_t>(m);
  if (h.mode == ArithmeticMode::kExact) {
    std::vector<Rational> total_x(um, Rational(0));
    std::vector<Rational> total_y(um, Rational(0));
    Rational realized_x = 0;
    Rational realized_y = 0;
    for (int t = 0; t < T; ++t) {
      const auto& ux = h.exact_ux[static_cast<size_t>(t)];
      const auto& uy = h.exact_uy[static_cast<size_t>(t)];
      for (size_t a = 0; a < um; ++a) {
        total_x[a] += ux[a];
        total_y[a] += uy[a];
      }
      for (int i : h.x[static_cast<size_t>(t)].Support()) {
        realized_x += h.x[static_cast<size_t>(t)][i] * ux[static_cast<size_t>(i)];
      }
      for (int j : h.y[static_cast<size_t>(t)].Support()) {
        realized_y += h.y[static_cast<size_t>(t)][j] * uy[static_cast<size_t>(j)];
      }
    }
    return {*std::max_element(total_x.begin(), total_x.end()) - realized_x,
            *std::max_element(total_y.begin(), total_y.end()) - realized_y};
  }
  std::vector<double> total_x(um, 0.0);
  std::vector<double> total_y(um, 0.0);
  double realized_x = 0;
  double realized_y = 0;
  for (int t = 0; t < T; ++t) {
    const auto& ux = h.float_ux[static_cast<size_t>(t)];
    const auto& uy = h.float_uy[static_cast<size_t>(t)];
    const auto& xs = h.x[static_cast<size_t>(t)];
    const auto& ys = h.y[static_cast<size_t>(t)];
    for (size_t a = 0; a < um; ++a) {
      total_x[a] += ux[a];
      total_y[a] += uy[a];
      realized_x += ToDouble(xs[static_cast<int>(a)]) * ux[a];
      realized_y += ToDouble(ys[static_cast<int>(a)]) * uy[a];
    }
  }
  return {FromDouble(*std::max_element(total_x.begin(), total_x.end()) - realized_x),
          FromDouble(*std::max_element(total_y.begin(), total_y.end()) - realized_y)};
}

SparseMixture EmpiricalMixture(const DynamicsHistory& h, int rounds) {
  if (rounds < 1 || rounds > h.rounds()) throw ParameterError("bad prefix length");
  std::vector<MixedStrategy> xs(h.x.begin(), h.x.begin() + rounds);
  std::vector<MixedStrategy> ys(h.y.begin(), h.y.begin() + rounds);
  return SparseMixture::Uniform(std::move(xs), std::move(ys));
}

double RegretCeiling(const Rational& scale, int m, int T) {
  const double range = 2.0 * ToDouble(scale);
  return 1.25 * range * std::sqrt(std::log(static_cast<double>(std::max(m, 2))) / (2.0 * T));
}

}  // namespace sparsecce
