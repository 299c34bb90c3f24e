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

#include "sparsecce/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sparsecce/core.hpp"

namespace sparsecce {
namespace {

Json RationalVector(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(FormatRational(v));
  return out;
}

Json RationalMatrix(const Matrix<Rational>& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(FormatRational(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

const Json& Field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::vector<Rational> ParseVector(const Json& array, const char* what) {
  if (!array.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const Json& v : array) out.push_back(JsonToRational(v));
  return out;
}

// Square matrix; rows of unequal length or a non-square shape are shape errors.
Matrix<Rational> ParseSquare(const Json& array, const char* what) {
  if (!array.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  const int m = static_cast<int>(array.size());
  Matrix<Rational> out(m, m);
  for (int i = 0; i < m; ++i) {
    const std::vector<Rational> row = ParseVector(array[static_cast<size_t>(i)], what);
    if (static_cast<int>(row.size()) != m) {
      throw ShapeError(std::string(what) + " row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(m));
    }
    for (int j = 0; j < m; ++j) out(i, j) = row[static_cast<size_t>(j)];
  }
  return out;
}

std::vector<std::string> ParseLabels(const Json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  for (const Json& v : doc.at(key)) out.push_back(v.get<std::string>());
  return out;
}

Json NodeSetJson(const NodeSet& s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v);
  return out;
}

bool IsScalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string ScalarText(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void Flatten(const Json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      Flatten(value, path.empty() ? key : path + "." + key, out);
    }
    return;
  }
  if (node.is_array()) {
    bool scalars = true;
    for (const Json& v : node) scalars = scalars && IsScalar(v);
    if (scalars) {
      out << path << ":";
      if (node.empty()) out << " (empty)";
      for (const Json& v : node) out << " " << ScalarText(v);
      out << "\n";
      return;
    }
    for (size_t i = 0; i < node.size(); ++i) {
      Flatten(node[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out << path << ": " << ScalarText(node) << "\n";
}

}  // namespace

Graph ParseGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long declared = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError("second header line", line_no);
      std::string first;
      tokens >> first;
      if (first == "edge" || first == "col") tokens >> first;
      long nn = 0;
      try {
        nn = std::stol(first);
      } catch (const std::exception&) {
        throw ParseError("malformed header '" + line + "'", line_no);
      }
      std::string rest;
      if (!(tokens >> declared) || (tokens >> rest) || nn < 0 || declared < 0) {
        throw ParseError("malformed header '" + line + "'", line_no);
      }
      n = static_cast<int>(nn);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError("edge before the 'p' header", line_no);
      long i = 0;
      long j = 0;
      std::string rest;
      if (!(tokens >> i >> j) || (tokens >> rest)) {
        throw ParseError("malformed edge line '" + line + "'", line_no);
      }
      if (i < 1 || i > n || j < 1 || j > n) {
        throw ParseError("node out of range 1.." + std::to_string(n), line_no);
      }
      if (i == j) throw ParseError("self-loop on node " + std::to_string(i), line_no);
      const std::pair<int, int> key(static_cast<int>(std::min(i, j)),
                                    static_cast<int>(std::max(i, j)));
      if (!seen.insert(key).second) {
        throw ParseError("duplicate edge " + std::to_string(key.first) + " " +
                             std::to_string(key.second),
                         line_no);
      }
      edges.push_back(key);
      continue;
    }
    throw ParseError("unknown line type '" + tag + "'", line_no);
  }
  if (n < 0) throw ParseError("missing 'p <n> <m>' header");
  if (static_cast<long>(edges.size()) != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ParseGraph(in);
}

std::string EmitGraph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.n() << " " << g.edges().size() << "\n";
  for (const auto& [a, b] : g.edges()) out << "e " << a << " " << b << "\n";
  return out.str();
}

Rational JsonToRational(const Json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_unsigned()) {
    return Rational(mpz_class(std::to_string(value.get<uint64_t>())));
  }
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<int64_t>()));
  if (value.is_number_float()) return FromDouble(value.get<double>());
  throw ParseError("expected a number or a \"num/den\" string, got " + value.dump());
}

Json EmitGame(const Game& game) {
  Json doc;
  doc["format"] = "sparsecce-game";
  doc["m"] = game.size();
  doc["row_labels"] = game.row_labels();
  doc["col_labels"] = game.col_labels();
  doc["R"] = RationalMatrix(game.R());
  doc["C"] = RationalMatrix(game.C());
  return doc;
}

Game ParseGame(const Json& doc) {
  Matrix<Rational> R = ParseSquare(Field(doc, "R"), "R");
  Matrix<Rational> C = ParseSquare(Field(doc, "C"), "C");
  if (R.rows() != C.rows()) {
    throw ShapeError("R is " + std::to_string(R.rows()) + "x" + std::to_string(R.rows()) +
                     " but C is " + std::to_string(C.rows()) + "x" + std::to_string(C.rows()));
  }
  return Game(std::move(R), std::move(C), ParseLabels(doc, "row_labels"),
              ParseLabels(doc, "col_labels"));
}

Game ReadGameFile(const std::string& path) { return ParseGame(ReadJsonFile(path)); }

Json EmitMixture(const SparseMixture& mix) {
  Json doc;
  doc["format"] = "sparsecce-mixture";
  doc["T"] = mix.T();
  doc["m"] = mix.m();
  doc["uniform_flag"] = mix.is_uniform();
  doc["weights"] = RationalVector(mix.weights());
  Json rows = Json::array();
  Json cols = Json::array();
  for (int t = 0; t < mix.T(); ++t) {
    rows.push_back(RationalVector(mix.row(t).probs()));
    cols.push_back(RationalVector(mix.col(t).probs()));
  }
  doc["rows"] = std::move(rows);
  doc["cols"] = std::move(cols);
  return doc;
}

SparseMixture ParseMixture(const Json& doc) {
  std::vector<Rational> weights = ParseVector(Field(doc, "weights"), "weights");
  const Json& rows_doc = Field(doc, "rows");
  const Json& cols_doc = Field(doc, "cols");
  if (!rows_doc.is_array() || !cols_doc.is_array()) {
    throw ParseError("rows and cols must be arrays");
  }
  if (rows_doc.size() != weights.size() || cols_doc.size() != weights.size()) {
    throw ShapeError("weights, rows and cols have different lengths");
  }
  std::vector<MixedStrategy> rows;
  std::vector<MixedStrategy> cols;
  for (size_t t = 0; t < weights.size(); ++t) {
    rows.emplace_back(ParseVector(rows_doc[t], "rows"));
    cols.emplace_back(ParseVector(cols_doc[t], "cols"));
  }
  SparseMixture mix(std::move(weights), std::move(rows), std::move(cols));
  if (doc.contains("uniform_flag") && doc.at("uniform_flag").get<bool>() != mix.is_uniform()) {
    throw InputError("uniform_flag does not match the weights");
  }
  return mix;
}

SparseMixture ReadMixtureFile(const std::string& path) {
  return ParseMixture(ReadJsonFile(path));
}

Json EmitJoint(const JointDistribution& joint) {
  Json doc;
  doc["format"] = "sparsecce-joint";
  doc["m"] = joint.size();
  doc["probs"] = RationalMatrix(joint.probs());
  return doc;
}

JointDistribution ParseJoint(const Json& doc) {
  return JointDistribution(ParseSquare(Field(doc, "probs"), "probs"));
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

Json GapReportTree(const GapReport& r) {
  Json t;
  t["cce_gap"] = FormatRational(r.cce_gap);
  t["ce_gap"] = FormatRational(r.ce_gap);
  t["best_row_deviation"] = r.best_row_deviation + 1;
  t["best_col_deviation"] = r.best_col_deviation + 1;
  t["welfare"] = FormatRational(r.welfare);
  t["egalitarian"] = FormatRational(r.egalitarian);
  t["utility_x"] = FormatRational(r.utility_x);
  t["utility_y"] = FormatRational(r.utility_y);
  return t;
}

Json ReductionReportTree(const ReductionReport& r) {
  Json t;
  t["n"] = r.n;
  t["T"] = r.T;
  t["oracle"] = r.oracle;
  t["parallel"] = r.parallel;
  t["clique"] = NodeSetJson(r.clique);
  t["clique_size"] = r.clique.size();
  Json records = Json::array();
  for (const IterationRecord& rec : r.records) {
    Json e;
    e["k"] = rec.k;
    e["gamma"] = FormatRational(rec.gamma);
    e["eps"] = FormatRational(rec.eps);
    e["eps_hat"] = FormatRational(rec.eps_hat);
    e["oracle_returned"] = rec.oracle_returned;
    e["oracle_ok"] = rec.oracle_ok;
    e["violation"] = rec.violation;
    if (rec.oracle_returned) {
      e["uniform_flag"] = rec.uniform_flag;
      if (rec.oracle_output) e["mixture_T"] = rec.oracle_output->T();
      e["measured_gap"] = FormatRational(rec.measured_gap);
      e["welfare"] = FormatRational(rec.welfare);
    }
    if (rec.oracle_ok) {
      e["t_star"] = rec.t_star + 1;
      e["alpha_star"] = FormatRational(rec.alpha_star);
      e["ell"] = rec.ell;
      e["degenerate"] = rec.degenerate;
      e["fallback"] = rec.fallback;
      e["threshold_set"] = NodeSetJson(rec.threshold_set);
      e["candidate"] = NodeSetJson(rec.candidate);
      e["is_clique"] = rec.is_clique;
    }
    records.push_back(std::move(e));
  }
  t["records"] = std::move(records);
  return t;
}

Json DynamicsSummaryTree(const Game& game, const MwuResult& run) {
  const DynamicsHistory& h = run.history;
  const auto [reg_x, reg_y] = ExternalRegret(h);
  const CceEvaluation eval = EvaluateCce(game, run.mixture);
  const int T = h.rounds();
  Json t;
  t["rounds"] = T;
  t["eta"] = h.eta;
  t["scale"] = FormatRational(h.scale);
  t["regret_x"] = FormatRational(reg_x);
  t["regret_y"] = FormatRational(reg_y);
  t["regret_x_approx"] = ToDouble(reg_x);
  t["regret_y_approx"] = ToDouble(reg_y);
  t["cce_gap"] = FormatRational(eval.gap);
  t["cce_gap_approx"] = ToDouble(eval.gap);
  t["max_regret_over_T_approx"] = ToDouble(std::max(reg_x, reg_y) / T);
  t["regret_ceiling"] = RegretCeiling(h.scale, game.size(), T);
  t["welfare"] = FormatRational(eval.utility_x + eval.utility_y);
  t["welfare_approx"] = ToDouble(eval.utility_x + eval.utility_y);

  // Welfare of the empirical mixture after ten evenly spaced prefixes.
  std::vector<Rational> prefix;
  Rational running = 0;
  for (int r = 0; r < T; ++r) {
    auto [ux, uy] = ExpectedUtilities(game, h.x[static_cast<size_t>(r)], h.y[static_cast<size_t>(r)]);
    running += ux + uy;
    prefix.push_back(running);
  }
  Json trajectory = Json::array();
  const int points = std::min(T, 10);
  for (int p = 1; p <= points; ++p) {
    const int rounds = static_cast<int>(static_cast<long>(T) * p / points);
    Json point;
    point["round"] = rounds;
    point["welfare_approx"] = ToDouble(prefix[static_cast<size_t>(rounds - 1)] / rounds);
    trajectory.push_back(std::move(point));
  }
  t["welfare_trajectory"] = std::move(trajectory);
  return t;
}

Json LpSolutionTree(const LpSolution& s, LpObjective objective) {
  Json t;
  t["objective"] = LpObjectiveName(objective);
  t["status"] = LpStatusName(s.status);
  t["mode"] = ArithmeticModeName(s.mode);
  t["pivots"] = s.pivots;
  if (s.status == LpStatus::kOptimal) {
    t["objective_value"] = FormatRational(s.objective_value);
    t["objective_value_approx"] = ToDouble(s.objective_value);
    t["joint"] = RationalMatrix(s.joint.probs());
  }
  return t;
}

Json DensePairTree(const Graph& g, const std::optional<DensePair>& pair,
                   const std::optional<CliqueRecovery>& recovery) {
  Json t;
  t["found"] = pair.has_value();
  if (pair) {
    t["component"] = pair->component + 1;
    t["s"] = NodeSetJson(pair->s);
    t["t"] = NodeSetJson(pair->t);
    t["dens"] = FormatRational(Dens(g, pair->s, pair->t));
    t["mass_t"] = FormatRational(pair->mass_t);
  }
  if (recovery) {
    t["clique"] = NodeSetJson(recovery->clique);
    t["clique_size"] = recovery->clique.size();
    t["target_reached"] = recovery->target_reached;
  }
  return t;
}

std::string FlattenToText(const Json& tree) {
  std::ostringstream out;
  Flatten(tree, "", out);
  return out.str();
}

std::string EmitReport(const Json& body, const RunContext& context, ReportFormat format) {
  Json doc;
  doc["command"] = context.command;
  doc["arithmetic_mode"] = ArithmeticModeName(context.mode);
  if (context.seed) {
    doc["seed"] = *context.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["report"] = body;
  if (format == ReportFormat::kStructured) return doc.dump(2) + "\n";
  return FlattenToText(doc);
}

}  // namespace sparsecce
