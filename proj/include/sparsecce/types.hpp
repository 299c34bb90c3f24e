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

#ifndef SPARSECCE_TYPES_HPP_
#define SPARSECCE_TYPES_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sparsecce/errors.hpp"
#include "sparsecce/rational.hpp"

namespace sparsecce {

// Solvers run either in exact rational arithmetic or in double precision.
enum class ArithmeticMode { kExact, kFloat };

inline const char* ArithmeticModeName(ArithmeticMode mode) {
  return mode == ArithmeticMode::kExact ? "exact" : "float";
}

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[Index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[Index(i, j)]; }

  const std::vector<T>& data() const { return data_; }

  bool operator==(const Matrix& other) const = default;

 private:
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// Sorted list of 1-based graph node labels.
using NodeSet = std::vector<int>;

// Undirected simple graph on nodes 1..n. Self-loops are never stored; the
// adjacency convention used by the game gadgets treats every node as linked
// to itself.
class Graph {
 public:
  Graph() = default;
  // Throws InputError on out-of-range endpoints, self-loops, or duplicates.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph Empty(int n);
  static Graph Complete(int n);

  int n() const { return n_; }
  // Normalized (i < j), sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool HasEdge(int i, int j) const;
  // HasEdge(i, j) || i == j.
  bool Linked(int i, int j) const { return i == j ? Valid(i) : HasEdge(i, j); }

  // Exact clique number by branch and bound; intended for small graphs.
  int CliqueNumber() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  bool Valid(int i) const { return i >= 1 && i <= n_; }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<unsigned char> adjacency_;  // n*n, 0-based
};

// Square two-player game with exact payoffs. R pays the row player, C the
// column player.
class Game {
 public:
  Game() = default;
  // Labels default to "1".."m" when empty.
  Game(Matrix<Rational> row_payoffs, Matrix<Rational> col_payoffs,
       std::vector<std::string> row_labels = {},
       std::vector<std::string> col_labels = {});

  int size() const { return R_.rows(); }
  const Matrix<Rational>& R() const { return R_; }
  const Matrix<Rational>& C() const { return C_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  bool operator==(const Game& other) const = default;

 private:
  Matrix<Rational> R_;
  Matrix<Rational> C_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Probability vector with exact entries summing to one.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws InputError if any entry is negative or the sum is not exactly 1.
  explicit MixedStrategy(std::vector<Rational> probs);

  static MixedStrategy PointMass(int m, int index);
  static MixedStrategy Uniform(int m);
  // Uniform over the given 0-based indices.
  static MixedStrategy UniformOn(int m, const std::vector<int>& indices);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& probs() const { return probs_; }
  // 0-based indices with positive probability, ascending.
  std::vector<int> Support() const;

  bool operator==(const MixedStrategy& other) const = default;

 private:
  std::vector<Rational> probs_;
};

// Mixture of T product distributions: sum_t weights[t] * rows[t] (x) cols[t].
class SparseMixture {
 public:
  SparseMixture() = default;
  // Throws ShapeError on inconsistent lengths, InputError on invalid weights.
  SparseMixture(std::vector<Rational> weights, std::vector<MixedStrategy> rows,
                std::vector<MixedStrategy> cols);

  // All weights 1/T.
  static SparseMixture Uniform(std::vector<MixedStrategy> rows,
                               std::vector<MixedStrategy> cols);

  int T() const { return static_cast<int>(weights_.size()); }
  int m() const { return rows_.empty() ? 0 : rows_.front().size(); }
  const Rational& weight(int t) const { return weights_[static_cast<size_t>(t)]; }
  const MixedStrategy& row(int t) const { return rows_[static_cast<size_t>(t)]; }
  const MixedStrategy& col(int t) const { return cols_[static_cast<size_t>(t)]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<MixedStrategy>& rows() const { return rows_; }
  const std::vector<MixedStrategy>& cols() const { return cols_; }
  bool is_uniform() const { return uniform_; }

  bool operator==(const SparseMixture& other) const = default;

 private:
  std::vector<Rational> weights_;
  std::vector<MixedStrategy> rows_;
  std::vector<MixedStrategy> cols_;
  bool uniform_ = false;
};

// Correlated distribution over action pairs.
class JointDistribution {
 public:
  JointDistribution() = default;
  // Throws ShapeError if not square, InputError if not a distribution.
  explicit JointDistribution(Matrix<Rational> probs);

  int size() const { return probs_.rows(); }
  const Rational& operator()(int i, int j) const { return probs_(i, j); }
  const Matrix<Rational>& probs() const { return probs_; }

  bool operator==(const JointDistribution& other) const = default;

 private:
  Matrix<Rational> probs_;
};

// Equilibrium and welfare summary of a distribution. Deviation indices are
// 0-based actions; ties resolve to the lowest index.
struct GapReport {
  Rational cce_gap;
  Rational ce_gap;
  int best_row_deviation = 0;
  int best_col_deviation = 0;
  Rational welfare;
  Rational egalitarian;
  Rational utility_x;
  Rational utility_y;
};

}  // namespace sparsecce

#endif  // SPARSECCE_TYPES_HPP_
