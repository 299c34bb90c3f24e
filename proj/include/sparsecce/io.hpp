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

#ifndef SPARSECCE_IO_HPP_
#define SPARSECCE_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "sparsecce/dynamics.hpp"
#include "sparsecce/lp.hpp"
#include "sparsecce/planted.hpp"
#include "sparsecce/reduction.hpp"
#include "sparsecce/types.hpp"

namespace sparsecce {

using Json = nlohmann::ordered_json;

// DIMACS-style edge list:
//   c <comment>
//   p <n> <m>          ("p edge <n> <m>" is accepted too)
//   e <i> <j>          m lines, 1-based
// Malformed lines, self-loops, duplicates, out-of-range nodes and a wrong
// edge count raise ParseError carrying the line number.
Graph ParseGraph(std::istream& in);
Graph ReadGraphFile(const std::string& path);
std::string EmitGraph(const Graph& g);

// Numbers inside game, mixture and joint documents are "num/den" strings.
// Decimal strings are read exactly; bare JSON numbers are accepted, floats
// being converted to the dyadic rational they denote.
Rational JsonToRational(const Json& value);

Json EmitGame(const Game& game);
Game ParseGame(const Json& doc);
Game ReadGameFile(const std::string& path);

Json EmitMixture(const SparseMixture& mix);
SparseMixture ParseMixture(const Json& doc);
SparseMixture ReadMixtureFile(const std::string& path);

Json EmitJoint(const JointDistribution& joint);
JointDistribution ParseJoint(const Json& doc);

Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

// Reports are built as key/value trees; text output flattens the same tree
// into "path: value" lines so both forms carry identical numbers.
struct RunContext {
  std::string command;
  ArithmeticMode mode = ArithmeticMode::kExact;
  std::optional<uint64_t> seed;
};

enum class ReportFormat { kText, kStructured };

Json GapReportTree(const GapReport& report);
Json ReductionReportTree(const ReductionReport& report);
Json DynamicsSummaryTree(const Game& game, const MwuResult& run);
Json LpSolutionTree(const LpSolution& solution, LpObjective objective);
Json DensePairTree(const Graph& g, const std::optional<DensePair>& pair,
                   const std::optional<CliqueRecovery>& recovery);

// Wraps `body` with the run context and renders it.
std::string EmitReport(const Json& body, const RunContext& context, ReportFormat format);

// The "path: value" rendering of any tree.
std::string FlattenToText(const Json& tree);

}  // namespace sparsecce

#endif  // SPARSECCE_IO_HPP_
