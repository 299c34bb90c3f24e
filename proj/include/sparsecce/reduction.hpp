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

#ifndef SPARSECCE_REDUCTION_HPP_
#define SPARSECCE_REDUCTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsecce/rational.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

// Parameters of one iteration of the clique search.
struct OracleQuery {
  int n = 0;
  int k = 0;
  int T = 1;
  Rational gamma;
  Rational eps;
  Rational eps_hat;
};

// Source of T-sparse approximate CCEs for the GZ game. The pipeline never
// trusts the output and re-checks it exactly.
class SparseCceOracle {
 public:
  virtual ~SparseCceOracle() = default;
  virtual std::string name() const = 0;
  // When true, Solve may be called from several threads at once.
  virtual bool concurrency_safe() const { return false; }
  virtual std::optional<SparseMixture> Solve(const Game& game,
                                             const OracleQuery& query) const = 0;
};

// Returns the clique certificate on the first k nodes (sorted) of a known
// clique; nullopt when the clique has fewer than k nodes.
class PlantedCertificateOracle : public SparseCceOracle {
 public:
  explicit PlantedCertificateOracle(NodeSet clique);
  std::string name() const override { return "planted"; }
  bool concurrency_safe() const override { return true; }
  std::optional<SparseMixture> Solve(const Game& game,
                                     const OracleQuery& query) const override;

 private:
  NodeSet clique_;
};

// The planted certificate with seeded rational noise: mass moved inside the
// clique, mass moved to other nodes or auxiliary actions, and a zero-sum
// shift of the weights. Noise is halved until the output is an eps-CCE with
// welfare >= 1 + gamma T / k - eps_hat; after kMaxHalvings the unperturbed
// certificate is returned.
class PerturbationOracle : public SparseCceOracle {
 public:
  static constexpr int kMaxHalvings = 30;

  PerturbationOracle(NodeSet clique, uint64_t seed);
  std::string name() const override { return "perturb"; }
  bool concurrency_safe() const override { return true; }
  std::optional<SparseMixture> Solve(const Game& game,
                                     const OracleQuery& query) const override;

 private:
  NodeSet clique_;
  uint64_t seed_;
};

// Exhaustive grid search; only usable when the game has at most 5 actions.
class BruteforceOracle : public SparseCceOracle {
 public:
  explicit BruteforceOracle(int resolution) : resolution_(resolution) {}
  std::string name() const override { return "bruteforce"; }
  bool concurrency_safe() const override { return true; }
  std::optional<SparseMixture> Solve(const Game& game,
                                     const OracleQuery& query) const override;

 private:
  int resolution_;
};

// Reads a mixture file per k. Every "{k}" in the pattern is replaced by the
// iteration's k; a missing file means no answer.
class FileOracle : public SparseCceOracle {
 public:
  explicit FileOracle(std::string pattern) : pattern_(std::move(pattern)) {}
  std::string name() const override { return "file"; }
  bool concurrency_safe() const override { return true; }
  std::optional<SparseMixture> Solve(const Game& game,
                                     const OracleQuery& query) const override;
  std::string PathFor(int k) const;

 private:
  std::string pattern_;
};

// Restricts every strategy to its first n coordinates and rescales; an
// all-zero restriction becomes uniform on 0..n-1. Lengths are preserved.
SparseMixture RenormalizeMixture(const SparseMixture& mix, int n);

// Lowest index with the largest weight (0-based).
int SelectTStar(const SparseMixture& mix);

struct TopLExtraction {
  NodeSet set;            // the returned candidate, 1-based
  NodeSet threshold_set;  // {i : xhat_i >= 1/ell - 40 ell k sqrt(gamma)}
  int ell = 0;
  bool degenerate = false;  // ell == 0: singleton of the largest coordinate
  bool fallback = false;    // threshold set rejected, ell largest used
};

// Threshold extraction with the ell-largest fallback. Only the first g.n()
// coordinates of xhat are read. Throws ParameterError unless gamma is the
// square of a rational.
TopLExtraction ExtractCliqueTopL(const Graph& g, const MixedStrategy& xhat,
                                 const Rational& alpha_star, int k,
                                 const Rational& gamma);

// {i : xhat_i >= 1/(16 ell) and yhat_i >= 1/(16 ell)} over nodes 1..g.n().
NodeSet ExtractCliqueThreshold16(const Graph& g, const MixedStrategy& xhat,
                                 const MixedStrategy& yhat, int ell);

// True iff every distinct pair is an edge. Throws InputError on labels
// outside 1..n.
bool IsClique(const Graph& g, const NodeSet& s);

struct IterationRecord {
  int k = 0;
  Rational gamma;
  Rational eps;
  Rational eps_hat;
  bool oracle_returned = false;
  bool oracle_ok = false;  // returned and passed re-validation
  std::string violation;   // why the output was rejected
  std::optional<SparseMixture> oracle_output;
  bool uniform_flag = false;
  Rational measured_gap;
  Rational welfare;
  int t_star = -1;  // 0-based
  Rational alpha_star;
  int ell = 0;
  bool degenerate = false;
  bool fallback = false;
  NodeSet threshold_set;
  NodeSet candidate;
  bool is_clique = false;
};

struct ReductionReport {
  int n = 0;
  int T = 1;
  std::string oracle;
  bool parallel = false;
  std::vector<IterationRecord> records;  // ascending k
  NodeSet clique;                        // best verified clique
};

struct ReductionOptions {
  // Evaluate the k-loop on several threads when the oracle allows it.
  bool parallel = false;
  // Replaces the default gamma for every k; must be a rational square.
  std::optional<Rational> gamma_override;
};

// The schedule used for iteration k: gamma, eps = k gamma / 2, and
// eps_hat = gamma^2 T / 2.
OracleQuery ScheduleFor(int n, int k, int T,
                        const std::optional<Rational>& gamma_override = std::nullopt);

// Clique search through the sparse-CCE oracle: K starts as {1}; for
// k = 2T, 3T, ..., floor(n/T) T the oracle is queried on the GZ game, its
// answer re-validated, renormalized onto the nodes, and the heaviest
// component thresholded. K is replaced by a verified candidate whenever the
// candidate is at least as large.
ReductionReport RunReduction(const Graph& g, int T, const SparseCceOracle& oracle,
                             const ReductionOptions& options = {});

}  // namespace sparsecce

#endif  // SPARSECCE_REDUCTION_HPP_
