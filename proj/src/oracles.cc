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

#include <algorithm>
#include <filesystem>

#include "sparsecce/bruteforce.hpp"
#include "sparsecce/constructions.hpp"
#include "sparsecce/core.hpp"
#include "sparsecce/io.hpp"
#include "sparsecce/reduction.hpp"
#include "sparsecce/rng.hpp"

namespace sparsecce {
namespace {

// Uniform rational in [1/1024, 1].
Rational DrawUnit(SplitMixStream& rng) {
  Rational u(static_cast<long>(rng.Below(1024) + 1), 1024);
  u.canonicalize();
  return u;
}

// (1 - a - b) s + a e_in + b e_out.
MixedStrategy Mix(const MixedStrategy& s, int in, const Rational& a, int out,
                  const Rational& b) {
  std::vector<Rational> probs = s.probs();
  const Rational keep = 1 - a - b;
  for (Rational& p : probs) p *= keep;
  probs[static_cast<size_t>(in)] += a;
  probs[static_cast<size_t>(out)] += b;
  return MixedStrategy(std::move(probs));
}

}  // namespace

PlantedCertificateOracle::PlantedCertificateOracle(NodeSet clique)
    : clique_(std::move(clique)) {
  std::sort(clique_.begin(), clique_.end());
}

std::optional<SparseMixture> PlantedCertificateOracle::Solve(
    const Game& game, const OracleQuery& query) const {
  if (static_cast<int>(clique_.size()) < query.k || query.k % query.T != 0) {
    return std::nullopt;
  }
  const NodeSet head(clique_.begin(), clique_.begin() + query.k);
  return CliqueCce(head, query.T, game.size());
}

PerturbationOracle::PerturbationOracle(NodeSet clique, uint64_t seed)
    : clique_(std::move(clique)), seed_(seed) {
  std::sort(clique_.begin(), clique_.end());
}

std::optional<SparseMixture> PerturbationOracle::Solve(const Game& game,
                                                       const OracleQuery& query) const {
  const int k = query.k;
  const int T = query.T;
  if (static_cast<int>(clique_.size()) < k || k % T != 0) return std::nullopt;
  const NodeSet head(clique_.begin(), clique_.begin() + k);
  const SparseMixture certificate = CliqueCce(head, T, game.size());
  const int m = game.size();

  std::vector<int> inside;
  for (int v : head) inside.push_back(v - 1);
  std::vector<int> outside;
  for (int a = 0; a < m; ++a) {
    if (!std::binary_search(inside.begin(), inside.end(), a)) outside.push_back(a);
  }
  if (outside.empty()) return certificate;

  SplitMixStream rng(HashIndex(seed_, static_cast<uint64_t>(k), static_cast<uint64_t>(T), 2));
  // Shapes of the noise are drawn once; only the overall scale is halved.
  struct Draw {
    int in_x, out_x, in_y, out_y;
    Rational ax, bx, ay, by;
  };
  std::vector<Draw> draws;
  for (int t = 0; t < T; ++t) {
    Draw d;
    d.in_x = inside[rng.Below(inside.size())];
    d.out_x = outside[rng.Below(outside.size())];
    d.in_y = inside[rng.Below(inside.size())];
    d.out_y = outside[rng.Below(outside.size())];
    d.ax = DrawUnit(rng) * query.gamma / 4;
    d.bx = DrawUnit(rng) * query.gamma * query.gamma * T / 16;
    d.ay = DrawUnit(rng) * query.gamma / 4;
    d.by = DrawUnit(rng) * query.gamma * query.gamma * T / 16;
    draws.push_back(std::move(d));
  }
  // Zero-sum weight shift with entries in [-gamma/4, gamma/4].
  std::vector<Rational> shift(static_cast<size_t>(T));
  Rational mean = 0;
  for (Rational& s : shift) {
    s = (DrawUnit(rng) - Rational(1, 2)) * query.gamma / 2;
    mean += s;
  }
  mean /= T;
  for (Rational& s : shift) s -= mean;

  const Rational target = 1 + query.gamma * T / k - query.eps_hat;
  Rational scale = 1;
  for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, scale /= 2) {
    std::vector<Rational> weights;
    std::vector<MixedStrategy> rows;
    std::vector<MixedStrategy> cols;
    bool valid_weights = true;
    for (int t = 0; t < T; ++t) {
      const Draw& d = draws[static_cast<size_t>(t)];
      Rational w = certificate.weight(t) + scale * shift[static_cast<size_t>(t)];
      if (sgn(w) < 0) valid_weights = false;
      weights.push_back(std::move(w));
      rows.push_back(Mix(certificate.row(t), d.in_x, scale * d.ax, d.out_x, scale * d.bx));
      cols.push_back(Mix(certificate.col(t), d.in_y, scale * d.ay, d.out_y, scale * d.by));
    }
    if (!valid_weights) continue;
    SparseMixture candidate(std::move(weights), std::move(rows), std::move(cols));
    const CceEvaluation eval = EvaluateCce(game, candidate);
    if (eval.gap <= query.eps && eval.utility_x + eval.utility_y >= target) {
      return candidate;
    }
  }
  return certificate;
}

std::optional<SparseMixture> BruteforceOracle::Solve(const Game& game,
                                                     const OracleQuery& query) const {
  std::optional<BruteforceResult> result =
      BruteforceOptimalSparseCce(game, query.T, resolution_, query.eps);
  if (!result) return std::nullopt;
  return result->mixture;
}

std::string FileOracle::PathFor(int k) const {
  std::string path = pattern_;
  const std::string key = "{k}";
  const std::string value = std::to_string(k);
  for (size_t pos = path.find(key); pos != std::string::npos;
       pos = path.find(key, pos + value.size())) {
    path.replace(pos, key.size(), value);
  }
  return path;
}

std::optional<SparseMixture> FileOracle::Solve(const Game&, const OracleQuery& query) const {
  const std::string path = PathFor(query.k);
  if (!std::filesystem::exists(path)) return std::nullopt;
  return ReadMixtureFile(path);
}

}  // namespace sparsecce
