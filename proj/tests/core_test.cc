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

#include "sparsecce/core.hpp"

#include <random>

#include "doctest.h"
#include "sparsecce/constructions.hpp"
#include "test_util.hpp"

namespace sparsecce {
namespace {

using testing::Q;

Game ZeroGame(int m) {
  return Game(Matrix<Rational>(m, m, Rational(0)), Matrix<Rational>(m, m, Rational(0)));
}

Game Dilemma() {
  Matrix<Rational> R(2, 2);
  R(0, 0) = 3;
  R(0, 1) = 0;
  R(1, 0) = 5;
  R(1, 1) = 1;
  Matrix<Rational> C(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) C(i, j) = R(j, i);
  }
  return Game(R, C);
}

SparseMixture Product(const MixedStrategy& x, const MixedStrategy& y) {
  return SparseMixture({Q(1)}, {x}, {y});
}

TEST_CASE("types reject invalid values") {
  CHECK_THROWS_AS(MixedStrategy({Q(1, 2), Q(1, 3)}), InputError);
  CHECK_THROWS_AS(MixedStrategy({Q(3, 2), Q(-1, 2)}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(SparseMixture({Q(1)}, {MixedStrategy::Uniform(2)},
                                {MixedStrategy::Uniform(3)}),
                  ShapeError);
  CHECK_THROWS_AS(SparseMixture({Q(1, 2)}, {MixedStrategy::Uniform(2)},
                                {MixedStrategy::Uniform(2)}),
                  InputError);
  CHECK(SparseMixture::Uniform({MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)},
                               {MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)})
            .is_uniform());
  CHECK_FALSE(SparseMixture({Q(1, 3), Q(2, 3)},
                            {MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)},
                            {MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)})
                  .is_uniform());
}

TEST_CASE("mixture_to_joint examples") {
  const JointDistribution point =
      MixtureToJoint(Product(MixedStrategy::PointMass(2, 0), MixedStrategy::PointMass(2, 1)), 2);
  CHECK(point(0, 1) == 1);
  CHECK(point(0, 0) == 0);

  const SparseMixture diag = SparseMixture::Uniform(
      {MixedStrategy::PointMass(2, 0), MixedStrategy::PointMass(2, 1)},
      {MixedStrategy::PointMass(2, 0), MixedStrategy::PointMass(2, 1)});
  const JointDistribution d = MixtureToJoint(diag, 2);
  CHECK(d(0, 0) == Q(1, 2));
  CHECK(d(1, 1) == Q(1, 2));
  CHECK(d(0, 1) == 0);

  // Clique certificate on K_4 with two blocks: 1/8 on each in-block pair.
  const JointDistribution mu = MixtureToJoint(CliqueCce({1, 2, 3, 4}, 2, 8), 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const bool same_block = i < 4 && j < 4 && (i / 2 == j / 2);
      CHECK(mu(i, j) == (same_block ? Q(1, 8) : Q(0)));
    }
  }

  CHECK_THROWS_AS(MixtureToJoint(diag, 3), ShapeError);
}

TEST_CASE("n_sparse_decompose examples") {
  Matrix<Rational> uniform(2, 2, Q(1, 4));
  const SparseMixture u = NSparseDecompose(JointDistribution(uniform));
  REQUIRE(u.T() == 2);
  CHECK(u.weight(0) == Q(1, 2));
  CHECK(u.weight(1) == Q(1, 2));
  CHECK(u.row(1) == MixedStrategy::PointMass(2, 1));
  CHECK(u.col(0) == MixedStrategy::Uniform(2));

  Matrix<Rational> corner(3, 3, Q(0));
  corner(0, 0) = 1;
  const SparseMixture c = NSparseDecompose(JointDistribution(corner));
  CHECK(c.weight(0) == 1);
  CHECK(c.weight(1) == 0);
  CHECK(c.col(0) == MixedStrategy::PointMass(3, 0));
  CHECK(c.col(2) == MixedStrategy::Uniform(3));

  Matrix<Rational> diag(3, 3, Q(0));
  for (int i = 0; i < 3; ++i) diag(i, i) = Q(1, 3);
  const SparseMixture dm = NSparseDecompose(JointDistribution(diag));
  for (int t = 0; t < 3; ++t) {
    CHECK(dm.weight(t) == Q(1, 3));
    CHECK(dm.col(t) == MixedStrategy::PointMass(3, t));
  }
}

TEST_CASE("decompose then expand is the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 16;
    const JointDistribution mu = testing::RandomJoint(rng, m);
    CHECK(MixtureToJoint(NSparseDecompose(mu), m) == mu);
  }
}

TEST_CASE("welfare examples") {
  const SparseMixture any = SparseMixture::Uniform({MixedStrategy::Uniform(3)},
                                                   {MixedStrategy::PointMass(3, 2)});
  CHECK(SocialWelfare(ZeroGame(3), any) == 0);
  CHECK(EgalitarianWelfare(ZeroGame(3), MixtureToJoint(any, 3)) == 0);

  const GzParams p = MakeGzParams(4, 2);
  const Game gz = BuildGzGame(Graph::Complete(4), p);
  const SparseMixture cert = CliqueCce({1, 2, 3, 4}, 2, 8);
  CHECK(SocialWelfare(gz, cert) == 1 + p.gamma / 2);
  CHECK(SocialWelfare(gz, MixtureToJoint(cert, 8)) == 1 + p.gamma / 2);
  CHECK(EgalitarianWelfare(gz, MixtureToJoint(cert, 8)) == (1 + p.gamma / 2) / 2);

  const SparseMixture diag_cell =
      Product(MixedStrategy::PointMass(8, 2), MixedStrategy::PointMass(8, 2));
  CHECK(SocialWelfare(gz, diag_cell) == 1 + p.gamma);

  // (node 1, auxiliary 1): row player pays -k/2, column player gains k/2.
  const SparseMixture punish =
      Product(MixedStrategy::PointMass(8, 0), MixedStrategy::PointMass(8, 4));
  CHECK(EgalitarianWelfare(gz, MixtureToJoint(punish, 8)) == Q(-2));
}

TEST_CASE("cce gap examples") {
  std::mt19937_64 rng(3);
  const SparseMixture mix = testing::RandomMixture(rng, 3, 2);
  const GapReport zero = CceGap(ZeroGame(3), mix);
  CHECK(zero.cce_gap == 0);
  CHECK(zero.ce_gap == 0);
  CHECK(zero.welfare == 0);

  const GzParams p = MakeGzParams(4, 2);
  const GapReport cert =
      CceGap(BuildGzGame(Graph::Complete(4), p), CliqueCce({1, 2, 3, 4}, 2, 8));
  CHECK(cert.cce_gap <= 0);

  const GapReport dilemma =
      CceGap(Dilemma(), Product(MixedStrategy::PointMass(2, 0), MixedStrategy::PointMass(2, 0)));
  CHECK(dilemma.cce_gap == 2);
  CHECK(dilemma.best_row_deviation == 1);
  CHECK(dilemma.best_col_deviation == 1);
  CHECK(dilemma.welfare == 6);
  CHECK(dilemma.egalitarian == 3);
}

TEST_CASE("ce gap examples") {
  Matrix<Rational> R = Dilemma().R();
  Matrix<Rational> C(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) C(i, j) = R(j, i);
  }
  const Game pd(R, C);
  const SparseMixture nash =
      Product(MixedStrategy::PointMass(2, 1), MixedStrategy::PointMass(2, 1));
  CHECK(CeGap(pd, nash) <= 0);
  CHECK(CceGap(pd, nash).cce_gap <= 0);

  Matrix<Rational> uniform(3, 3, Q(1, 9));
  CHECK(CeGap(ZeroGame(3), JointDistribution(uniform)) == 0);
}

TEST_CASE("evaluators agree with the definition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 6;
    const Game g = testing::RandomGame(rng, m);
    const SparseMixture mix = testing::RandomMixture(rng, m, 1 + trial % 4);
    const testing::NaiveGaps naive = testing::NaiveEvaluate(g, testing::NaiveJoint(mix));
    const GapReport r = CceGap(g, mix);
    const CceEvaluation e = EvaluateCce(g, mix);
    CHECK(r.cce_gap == std::max(naive.cce_x, naive.cce_y));
    CHECK(e.gap == r.cce_gap);
    CHECK(e.gap_x == naive.cce_x);
    CHECK(r.ce_gap == std::max(naive.ce_x, naive.ce_y));
    CHECK(r.utility_x == naive.ux);
    CHECK(r.utility_y == naive.uy);
    CHECK(r.welfare == r.utility_x + r.utility_y);
    CHECK(r.egalitarian == std::min(r.utility_x, r.utility_y));
    CHECK(r.ce_gap >= r.cce_gap);
  }
}

TEST_CASE("gaps are positively homogeneous") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g = testing::RandomGame(rng, 4);
    const SparseMixture mix = testing::RandomMixture(rng, 4, 3);
    const Rational lambda = Q(1 + trial % 7, 1 + trial % 3);
    const GapReport base = CceGap(g, mix);
    const GapReport scaled = CceGap(ScaleGame(g, lambda), mix);
    CHECK(scaled.cce_gap == lambda * base.cce_gap);
    CHECK(scaled.ce_gap == lambda * base.ce_gap);
    CHECK(scaled.best_row_deviation == base.best_row_deviation);
    CHECK(scaled.best_col_deviation == base.best_col_deviation);
  }
}

TEST_CASE("welfare is additive over components") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g = testing::RandomGame(rng, 5);
    const SparseMixture mix = testing::RandomMixture(rng, 5, 4);
    Rational sum = 0;
    for (int t = 0; t < mix.T(); ++t) {
      sum += mix.weight(t) * SocialWelfare(g, Product(mix.row(t), mix.col(t)));
    }
    CHECK(SocialWelfare(g, MixtureToJoint(mix, 5)) == sum);
  }
}

TEST_CASE("zero-weight components are ignored") {
  const Game g = Dilemma();
  const SparseMixture mix({Q(1), Q(0)},
                          {MixedStrategy::PointMass(2, 1), MixedStrategy::PointMass(2, 0)},
                          {MixedStrategy::PointMass(2, 1), MixedStrategy::PointMass(2, 0)});
  CHECK(SocialWelfare(g, mix) == 2);
  CHECK(CceGap(g, mix).cce_gap == 0);
}

TEST_CASE("padding keeps the distribution") {
  const SparseMixture mix = CliqueCce({1, 2}, 1, 2);
  const SparseMixture padded = PadMixture(mix, 5);
  CHECK(padded.m() == 5);
  CHECK(padded.row(0)[4] == 0);
  CHECK(padded.row(0)[1] == Q(1, 2));
  CHECK_THROWS_AS(PadMixture(padded, 3), ShapeError);
}

}  // namespace
}  // namespace sparsecce
