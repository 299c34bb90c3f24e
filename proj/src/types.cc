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

#include "sparsecce/types.hpp"

#include <algorithm>
#include <functional>

namespace sparsecce {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw InputError("negative node count");
  adjacency_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (!Valid(i) || !Valid(j)) {
      throw InputError("edge {" + std::to_string(i) + "," + std::to_string(j) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (i == j) throw InputError("self-loop at node " + std::to_string(i));
    if (i > j) std::swap(i, j);
    unsigned char& cell = adjacency_[static_cast<size_t>(i - 1) * n + (j - 1)];
    if (cell) {
      throw InputError("duplicate edge {" + std::to_string(i) + "," +
                       std::to_string(j) + "}");
    }
    cell = 1;
    adjacency_[static_cast<size_t>(j - 1) * n + (i - 1)] = 1;
    edges_.emplace_back(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::Empty(int n) { return Graph(n, {}); }

Graph Graph::Complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

bool Graph::HasEdge(int i, int j) const {
  if (!Valid(i) || !Valid(j) || i == j) return false;
  return adjacency_[static_cast<size_t>(i - 1) * n_ + (j - 1)] != 0;
}

int Graph::CliqueNumber() const {
  int best = 0;
  std::function<void(std::vector<int>&, int)> expand =
      [&](std::vector<int>& candidates, int size) {
        if (candidates.empty()) {
          best = std::max(best, size);
          return;
        }
        while (!candidates.empty()) {
          if (size + static_cast<int>(candidates.size()) <= best) return;
          const int v = candidates.back();
          candidates.pop_back();
          std::vector<int> next;
          for (int u : candidates) {
            if (HasEdge(u, v)) next.push_back(u);
          }
          expand(next, size + 1);
        }
        best = std::max(best, size);
      };
  std::vector<int> all(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) all[static_cast<size_t>(i)] = i + 1;
  expand(all, 0);
  return best;
}

Game::Game(Matrix<Rational> row_payoffs, Matrix<Rational> col_payoffs,
           std::vector<std::string> row_labels,
           std::vector<std::string> col_labels)
    : R_(std::move(row_payoffs)), C_(std::move(col_payoffs)),
      row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (R_.rows() != R_.cols()) throw ShapeError("row payoff matrix is not square");
  if (C_.rows() != R_.rows() || C_.cols() != R_.cols()) {
    throw ShapeError("payoff matrices differ in shape");
  }
  const int m = R_.rows();
  auto default_labels = [m](std::vector<std::string>& labels) {
    if (labels.empty()) {
      for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
    }
  };
  default_labels(row_labels_);
  default_labels(col_labels_);
  if (static_cast<int>(row_labels_.size()) != m ||
      static_cast<int>(col_labels_.size()) != m) {
    throw ShapeError("label count does not match the action count");
  }
}

MixedStrategy::MixedStrategy(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw ShapeError("empty strategy");
  Rational total = 0;
  for (const Rational& p : probs_) {
    if (sgn(p) < 0) throw InputError("negative probability in strategy");
    total += p;
  }
  if (total != 1) {
    throw InputError("strategy sums to " + FormatRational(total) + ", not 1");
  }
}

MixedStrategy MixedStrategy::PointMass(int m, int index) {
  if (index < 0 || index >= m) throw ShapeError("point mass index out of range");
  std::vector<Rational> probs(static_cast<size_t>(m), Rational(0));
  probs[static_cast<size_t>(index)] = 1;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(int m) {
  if (m <= 0) throw ShapeError("uniform strategy needs at least one action");
  return MixedStrategy(std::vector<Rational>(static_cast<size_t>(m), Rational(1, m)));
}

MixedStrategy MixedStrategy::UniformOn(int m, const std::vector<int>& indices) {
  if (indices.empty()) throw ShapeError("uniform strategy over an empty set");
  std::vector<Rational> probs(static_cast<size_t>(m), Rational(0));
  const Rational share(1, static_cast<long>(indices.size()));
  for (int i : indices) {
    if (i < 0 || i >= m) throw ShapeError("support index out of range");
    if (probs[static_cast<size_t>(i)] != 0) throw InputError("repeated support index");
    probs[static_cast<size_t>(i)] = share;
  }
  return MixedStrategy(std::move(probs));
}

std::vector<int> MixedStrategy::Support() const {
  std::vector<int> support;
  for (int i = 0; i < size(); ++i) {
    if (sgn(probs_[static_cast<size_t>(i)]) > 0) support.push_back(i);
  }
  return support;
}

SparseMixture::SparseMixture(std::vector<Rational> weights,
                             std::vector<MixedStrategy> rows,
                             std::vector<MixedStrategy> cols)
    : weights_(std::move(weights)), rows_(std::move(rows)), cols_(std::move(cols)) {
  if (weights_.empty()) throw ShapeError("mixture needs at least one component");
  if (rows_.size() != weights_.size() || cols_.size() != weights_.size()) {
    throw ShapeError("mixture weights, rows, and cols differ in length");
  }
  const int m = rows_.front().size();
  for (size_t t = 0; t < rows_.size(); ++t) {
    if (rows_[t].size() != m || cols_[t].size() != m) {
      throw ShapeError("mixture strategies differ in length");
    }
  }
  Rational total = 0;
  for (const Rational& w : weights_) {
    if (sgn(w) < 0) throw InputError("negative mixture weight");
    total += w;
  }
  if (total != 1) {
    throw InputError("mixture weights sum to " + FormatRational(total) + ", not 1");
  }
  const Rational share(1, static_cast<long>(weights_.size()));
  uniform_ = std::all_of(weights_.begin(), weights_.end(),
                         [&](const Rational& w) { return w == share; });
}

SparseMixture SparseMixture::Uniform(std::vector<MixedStrategy> rows,
                                     std::vector<MixedStrategy> cols) {
  if (rows.empty()) throw ShapeError("mixture needs at least one component");
  std::vector<Rational> weights(rows.size(), Rational(1, static_cast<long>(rows.size())));
  return SparseMixture(std::move(weights), std::move(rows), std::move(cols));
}

JointDistribution::JointDistribution(Matrix<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.rows() != probs_.cols() || probs_.rows() == 0) {
    throw ShapeError("joint distribution must be a non-empty square matrix");
  }
  Rational total = 0;
  for (const Rational& p : probs_.data()) {
    if (sgn(p) < 0) throw InputError("negative probability in joint distribution");
    total += p;
  }
  if (total != 1) {
    throw InputError("joint distribution sums to " + FormatRational(total) +
                     ", not 1");
  }
}

}  // namespace sparsecce
