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

#ifndef SPARSECCE_PLANTED_HPP_
#define SPARSECCE_PLANTED_HPP_

#include <cstdint>
#include <optional>

#include "sparsecce/rational.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

struct PlantedInstance {
  Graph graph;
  NodeSet planted;
  int n = 0;
  int k = 0;
  uint64_t seed = 0;
};

// G(n, 1/2, k): nodes 1..k form a clique, every other pair is a fair coin
// addressed by (seed, i, j). k = 0 gives plain G(n, 1/2).
PlantedInstance GenPlantedGraph(int n, int k, uint64_t seed);

// Applies a seeded uniform relabeling to the graph and the planted set.
PlantedInstance PermuteLabels(const PlantedInstance& instance, uint64_t seed);

// Largest clique found by `restarts` greedy passes, each scanning the nodes in
// a fresh random order and keeping every node adjacent to all kept so far.
int GreedyCliqueStatistic(const Graph& g, int restarts, uint64_t seed);

// Fraction of pairs (i, j) in s x t that are edges or have i == j.
Rational Dens(const Graph& g, const NodeSet& s, const NodeSet& t);

struct DensePair {
  NodeSet s;  // from the row strategy
  NodeSet t;  // from the column strategy
  int component = 0;  // 0-based index of the product used
  Rational mass_t;    // column mass on t, compared with 2T/M in the analysis
};

// For the first component with weight >= 1/T: t = columns j in supp(y) with
// <x, A e_j> >= 4/5, then s = rows i in supp(x) with <e_i, A u(t)> >= 3/5,
// each cut to its d lowest labels. A is read as twice the top-left n x n
// block of R. nullopt when either set has fewer than d nodes.
std::optional<DensePair> ExtractDensePair(const Game& game, int n, const SparseMixture& mix,
                                          int d, int M);

struct CliqueRecovery {
  NodeSet clique;
  bool target_reached = false;
};

// Peels s u t: while the remainder is not a clique, drop the node with the
// fewest neighbours inside it (lowest label on ties).
CliqueRecovery CliqueFromDensePair(const Graph& g, const NodeSet& s, const NodeSet& t,
                                   int target);

}  // namespace sparsecce

#endif  // SPARSECCE_PLANTED_HPP_
