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

#include "sparsecce/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sparsecce/constructions.hpp"
#include "sparsecce/core.hpp"

namespace sparsecce {
namespace {

MixedStrategy Restrict(const MixedStrategy& s, int n) {
  const int len = s.size();
  Rational mass = 0;
  for (int i = 0; i < n; ++i) mass += s[i];
  std::vector<Rational> probs(static_cast<size_t>(len), Rational(0));
  if (sgn(mass) == 0) {
    const Rational share(1, n);
    for (int i = 0; i < n; ++i) probs[static_cast<size_t>(i)] = share;
  } else {
    for (int i = 0; i < n; ++i) probs[static_cast<size_t>(i)] = s[i] / mass;
  }
  return MixedStrategy(std::move(probs));
}

// Indices 0..n-1 sorted by decreasing value, lowest index first on ties.
std::vector<int> ByDecreasingValue(const MixedStrategy& x, int n) {
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&x](int a, int b) { return x[a] > x[b]; });
  return order;
}

IterationRecord RunIteration(const Graph& g, int T, int k,
                             const SparseCceOracle& oracle,
                             const std::optional<Rational>& gamma_override) {
  const int n = g.n();
  const OracleQuery query = ScheduleFor(n, k, T, gamma_override);
  IterationRecord rec;
  rec.k = k;
  rec.gamma = query.gamma;
  rec.eps = query.eps;
  rec.eps_hat = query.eps_hat;

  GzParams params;
  params.k = k;
  params.T = T;
  params.gamma = query.gamma;
  const Game game = BuildGzGame(g, params);

  std::optional<SparseMixture> out;
  try {
    out = oracle.Solve(game, query);
  } catch (const std::exception& e) {
    rec.violation = std::string("oracle error: ") + e.what();
    return rec;
  }
  if (!out) {
    rec.violation = "no answer";
    return rec;
  }
  rec.oracle_returned = true;
  rec.uniform_flag = out->is_uniform();
  if (out->m() != game.size()) {
    rec.violation = "mixture has " + std::to_string(out->m()) + " actions, game has " +
                    std::to_string(game.size());
    rec.oracle_output = std::move(out);
    return rec;
  }
  const CceEvaluation eval = EvaluateCce(game, *out);
  rec.measured_gap = eval.gap;
  rec.welfare = eval.utility_x + eval.utility_y;
  rec.oracle_output = out;
  if (eval.gap > query.eps) {
    rec.violation = "gap " + FormatRational(eval.gap) + " exceeds eps";
    return rec;
  }
  rec.oracle_ok = true;

  const SparseMixture hat = RenormalizeMixture(*out, n);
  rec.t_star = SelectTStar(hat);
  rec.alpha_star = hat.weight(rec.t_star);
  const TopLExtraction ext =
      ExtractCliqueTopL(g, hat.row(rec.t_star), rec.alpha_star, k, query.gamma);
  rec.ell = ext.ell;
  rec.degenerate = ext.degenerate;
  rec.fallback = ext.fallback;
  rec.threshold_set = ext.threshold_set;
  rec.candidate = ext.set;
  rec.is_clique = IsClique(g, rec.candidate);
  return rec;
}

}  // namespace

SparseMixture RenormalizeMixture(const SparseMixture& mix, int n) {
  if (mix.m() < n) throw ShapeError("mixture shorter than the node block");
  std::vector<MixedStrategy> rows;
  std::vector<MixedStrategy> cols;
  for (int t = 0; t < mix.T(); ++t) {
    rows.push_back(Restrict(mix.row(t), n));
    cols.push_back(Restrict(mix.col(t), n));
  }
  return SparseMixture(mix.weights(), std::move(rows), std::move(cols));
}

int SelectTStar(const SparseMixture& mix) {
  if (mix.T() == 0) throw ParameterError("empty mixture");
  int best = 0;
  for (int t = 1; t < mix.T(); ++t) {
    if (mix.weight(t) > mix.weight(best)) best = t;
  }
  return best;
}

TopLExtraction ExtractCliqueTopL(const Graph& g, const MixedStrategy& xhat,
                                 const Rational& alpha_star, int k,
                                 const Rational& gamma) {
  const int n = g.n();
  if (xhat.size() < n) throw ShapeError("strategy shorter than the node block");
  const std::optional<Rational> root = ExactSqrt(gamma);
  if (!root) throw ParameterError("gamma " + FormatRational(gamma) + " is not a rational square");
  TopLExtraction out;
  const Rational scaled = alpha_star * k;
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  out.ell = static_cast<int>(std::min<long>(floor_value.get_si(), n));
  const std::vector<int> order = ByDecreasingValue(xhat, n);
  if (out.ell <= 0) {
    out.ell = 0;
    out.degenerate = true;
    out.set = {order.front() + 1};
    return out;
  }
  const Rational threshold = Rational(1, out.ell) - 40 * out.ell * k * *root;
  for (int i = 0; i < n; ++i) {
    if (xhat[i] >= threshold) out.threshold_set.push_back(i + 1);
  }
  if (static_cast<int>(out.threshold_set.size()) == out.ell && IsClique(g, out.threshold_set)) {
    out.set = out.threshold_set;
    return out;
  }
  out.fallback = true;
  for (int r = 0; r < out.ell; ++r) out.set.push_back(order[static_cast<size_t>(r)] + 1);
  std::sort(out.set.begin(), out.set.end());
  return out;
}

NodeSet ExtractCliqueThreshold16(const Graph& g, const MixedStrategy& xhat,
                                 const MixedStrategy& yhat, int ell) {
  if (ell < 1) throw ParameterError("ell must be positive");
  const int n = g.n();
  if (xhat.size() < n || yhat.size() < n) {
    throw ShapeError("strategy shorter than the node block");
  }
  const Rational threshold(1, 16 * ell);
  NodeSet out;
  for (int i = 0; i < n; ++i) {
    if (xhat[i] >= threshold && yhat[i] >= threshold) out.push_back(i + 1);
  }
  return out;
}

bool IsClique(const Graph& g, const NodeSet& s) {
  for (int v : s) {
    if (v < 1 || v > g.n()) {
      throw InputError("node " + std::to_string(v) + " outside 1.." + std::to_string(g.n()));
    }
  }
  for (size_t a = 0; a < s.size(); ++a) {
    for (size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] != s[b] && !g.HasEdge(s[a], s[b])) return false;
    }
  }
  return true;
}

OracleQuery ScheduleFor(int n, int k, int T, const std::optional<Rational>& gamma_override) {
  OracleQuery q;
  q.n = n;
  q.k = k;
  q.T = T;
  q.gamma = gamma_override.value_or(DefaultGamma(k));
  q.eps = Rational(k) * q.gamma / 2;
  q.eps_hat = q.gamma * q.gamma * T / 2;
  return q;
}

ReductionReport RunReduction(const Graph& g, int T, const SparseCceOracle& oracle,
                             const ReductionOptions& options) {
  const int n = g.n();
  if (n < 1) throw ParameterError("graph has no nodes");
  if (T < 1 || T > n) throw ParameterError("T must lie in 1..n");
  if (options.gamma_override && !ExactSqrt(*options.gamma_override)) {
    throw ParameterError("gamma override must be the square of a rational");
  }
  ReductionReport report;
  report.n = n;
  report.T = T;
  report.oracle = oracle.name();
  report.clique = {1};

  std::vector<int> ks;
  for (int k = 2 * T; k <= (n / T) * T; k += T) ks.push_back(k);
  report.records.resize(ks.size());

  const bool parallel = options.parallel && oracle.concurrency_safe() && ks.size() > 1;
  report.parallel = parallel;
  if (parallel) {
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(ks.size())));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (size_t i = next++; i < ks.size(); i = next++) {
            report.records[i] = RunIteration(g, T, ks[i], oracle, options.gamma_override);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (size_t i = 0; i < ks.size(); ++i) {
      report.records[i] = RunIteration(g, T, ks[i], oracle, options.gamma_override);
    }
  }

  for (const IterationRecord& rec : report.records) {
    if (rec.oracle_ok && rec.is_clique && rec.candidate.size() >= report.clique.size()) {
      report.clique = rec.candidate;
    }
  }
  return report;
}

}  // namespace sparsecce
