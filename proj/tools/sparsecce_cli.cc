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

// Command-line front end: every subcommand reads flat files, runs one library
// operation and prints a report (text or structured) to stdout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparsecce/constructions.hpp"
#include "sparsecce/core.hpp"
#include "sparsecce/dynamics.hpp"
#include "sparsecce/errors.hpp"
#include "sparsecce/io.hpp"
#include "sparsecce/lp.hpp"
#include "sparsecce/planted.hpp"
#include "sparsecce/reduction.hpp"

namespace sparsecce {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotFound = 3;

struct Global {
  std::string format = "text";
  std::string mode = "exact";
  std::optional<uint64_t> seed;
  std::string report_path;
};

ArithmeticMode ModeOf(const Global& g) {
  return g.mode == "float" ? ArithmeticMode::kFloat : ArithmeticMode::kExact;
}

void Print(const Global& g, const std::string& command, ArithmeticMode mode, const Json& body) {
  const RunContext ctx{command, mode, g.seed};
  const std::string text = EmitReport(
      body, ctx, g.format == "structured" ? ReportFormat::kStructured : ReportFormat::kText);
  if (g.report_path.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(g.report_path, text);
  }
}

void Warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

// Node labels separated by commas or whitespace.
NodeSet ParseNodeList(const std::string& text) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  NodeSet out;
  std::string token;
  while (in >> token) {
    try {
      size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad node label '" + token + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NodeSet ReadNodeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseNodeList(buf.str());
}

void CheckNodes(const Graph& g, const NodeSet& s) {
  for (int v : s) {
    if (v < 1 || v > g.n()) {
      throw InputError("node " + std::to_string(v) + " outside 1.." + std::to_string(g.n()));
    }
  }
}

Rational ParseRationalFlag(const std::string& text, const char* flag) {
  try {
    return ParseRational(text);
  } catch (const std::exception&) {
    throw ParseError(std::string("--") + flag + ": not a rational '" + text + "'");
  }
}

GzParams GzFromFlags(int k, int T, const std::string& gamma) {
  GzParams p = MakeGzParams(k, T);
  if (!gamma.empty()) {
    p.gamma = ParseRationalFlag(gamma, "gamma");
    if (sgn(p.gamma) <= 0) throw ParameterError("gamma must be positive");
    if (p.gamma >= GammaBound(k)) {
      Warn("gamma " + FormatRational(p.gamma) + " is not below the schedule bound " +
           FormatRational(GammaBound(k)) + " for k = " + std::to_string(k));
    }
  }
  return p;
}

}  // namespace
}  // namespace sparsecce

int main(int argc, char** argv) {
  using namespace sparsecce;
  CLI::App app{"Sparse coarse correlated equilibria: constructions, solvers and the clique reduction"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--format", global.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--mode", global.mode, "Arithmetic for lp and dynamics")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--seed", global.seed, "Seed for randomized steps");
  app.add_option("--report", global.report_path, "Write the report here instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Gap and welfare of a mixture or joint distribution");
  std::string v_game, v_mixture, v_joint, v_eps;
  verify->add_option("--game", v_game)->required();
  auto* v_mix_opt = verify->add_option("--mixture", v_mixture);
  auto* v_joint_opt = verify->add_option("--joint", v_joint);
  v_mix_opt->excludes(v_joint_opt);
  verify->add_option("--eps", v_eps, "Claimed CCE gap; exceeding it exits with 2");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a game from a graph");
  std::string c_graph, c_gadget = "gz", c_out, c_gamma, c_eps = "1/4";
  int c_k = 0, c_T = 1, c_M = 0, c_N = 0;
  construct->add_option("--graph", c_graph)->required();
  construct->add_option("--gadget", c_gadget)
      ->check(CLI::IsMember({"gz", "augmented", "basicemb", "lowprec"}));
  construct->add_option("--k", c_k, "Clique size parameter (gz, augmented, basicemb)");
  construct->add_option("--T", c_T, "Sparsity");
  construct->add_option("--gamma", c_gamma, "Override the diagonal bonus");
  construct->add_option("--eps", c_eps, "(O,O) payoff of the basic-emb gadget");
  construct->add_option("--M", c_M, "Spike magnitude (lowprec; default 5T)");
  construct->add_option("--N", c_N, "Total actions (lowprec; default 8n)");
  construct->add_option("--out", c_out, "Game file")->required();

  // clique-cce
  auto* clique_cce = app.add_subcommand("clique-cce", "T-sparse certificate of a clique");
  std::string q_graph, q_clique, q_out;
  int q_T = 1, q_size = 0;
  clique_cce->add_option("--graph", q_graph)->required();
  clique_cce->add_option("--clique", q_clique, "Node labels, comma separated")->required();
  clique_cce->add_option("--T", q_T);
  clique_cce->add_option("--size", q_size, "Strategy length (default 2n)");
  clique_cce->add_option("--out", q_out, "Mixture file")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Clique search through a sparse-CCE oracle");
  std::string r_graph, r_oracle = "planted", r_clique, r_clique_file, r_pattern, r_gamma;
  int r_T = 1, r_resolution = 2;
  bool r_parallel = false;
  reduce->add_option("--graph", r_graph)->required();
  reduce->add_option("--T", r_T);
  reduce->add_option("--oracle", r_oracle)
      ->check(CLI::IsMember({"planted", "perturb", "bruteforce", "file"}));
  reduce->add_option("--clique", r_clique, "Known clique for planted/perturb oracles");
  reduce->add_option("--clique-file", r_clique_file, "File listing the known clique");
  reduce->add_option("--pattern", r_pattern, "Mixture path with {k} for the file oracle");
  reduce->add_option("--resolution", r_resolution, "Grid resolution of the brute-force oracle");
  reduce->add_option("--gamma", r_gamma, "Override gamma for every k (a rational square)");
  reduce->add_flag("--parallel", r_parallel, "Evaluate the k-loop on several threads");

  // lp
  auto* lp = app.add_subcommand("lp", "Optimal CCE by linear programming");
  std::string l_game, l_objective = "welfare", l_out;
  lp->add_option("--game", l_game)->required();
  lp->add_option("--objective", l_objective)
      ->check(CLI::IsMember({"welfare", "egalitarian", "player-x", "player-y"}));
  lp->add_option("--out", l_out, "Joint distribution file");

  // dynamics
  auto* dynamics = app.add_subcommand("dynamics", "Multiplicative weights self-play");
  std::string d_game, d_out;
  int d_T = 100;
  std::optional<double> d_eta;
  dynamics->add_option("--game", d_game)->required();
  dynamics->add_option("--T", d_T, "Rounds");
  dynamics->add_option("--eta", d_eta, "Step size (default sqrt(8 ln m / T))");
  dynamics->add_option("--out", d_out, "Empirical mixture file");

  // plant
  auto* plant = app.add_subcommand("plant", "Planted clique instance");
  int p_n = 0, p_k = 0;
  bool p_permute = false;
  std::string p_out, p_planted_out;
  plant->add_option("--n", p_n)->required();
  plant->add_option("--k", p_k)->required();
  plant->add_flag("--permute", p_permute, "Shuffle node labels");
  plant->add_option("--out", p_out, "Graph file")->required();
  plant->add_option("--planted-out", p_planted_out, "File listing the planted nodes");

  // dense-extract
  auto* dense = app.add_subcommand("dense-extract", "Dense pair and clique from a mixture");
  std::string x_graph, x_game, x_mixture;
  int x_d = 1, x_M = 1, x_target = 0;
  dense->add_option("--graph", x_graph)->required();
  dense->add_option("--game", x_game)->required();
  dense->add_option("--mixture", x_mixture)->required();
  dense->add_option("--d", x_d, "Set size");
  dense->add_option("--M", x_M, "Spike magnitude");
  dense->add_option("--target", x_target, "Clique size to aim for (default d)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      const Game game = ReadGameFile(v_game);
      GapReport rep;
      if (!v_mixture.empty()) {
        rep = CceGap(game, ReadMixtureFile(v_mixture));
      } else if (!v_joint.empty()) {
        rep = CceGap(game, ParseJoint(ReadJsonFile(v_joint)));
      } else {
        throw ParseError("verify needs --mixture or --joint");
      }
      Json body = GapReportTree(rep);
      bool ok = true;
      if (!v_eps.empty()) {
        const Rational eps = ParseRationalFlag(v_eps, "eps");
        ok = rep.cce_gap <= eps;
        body["claimed_eps"] = FormatRational(eps);
        body["within_claim"] = ok;
      }
      Print(global, "verify", ArithmeticMode::kExact, body);
      return ok ? kExitOk : kExitInvalid;
    }

    if (*construct) {
      const Graph g = ReadGraphFile(c_graph);
      Game game;
      Json body;
      body["gadget"] = c_gadget;
      if (c_gadget == "lowprec") {
        LowPrecParams lp_params;
        lp_params.n = g.n();
        lp_params.M = c_M > 0 ? c_M : 5 * c_T;
        lp_params.N = c_N > 0 ? c_N : 8 * g.n();
        lp_params.seed = global.seed.value_or(0);
        game = BuildLowPrecGame(g, lp_params);
        body["M"] = lp_params.M;
        body["N"] = lp_params.N;
      } else {
        if (c_k < 1) throw ParameterError("--k is required for the " + c_gadget + " gadget");
        const GzParams p = GzFromFlags(c_k, c_T, c_gamma);
        if (c_gadget == "gz") {
          game = BuildGzGame(g, p);
        } else if (c_gadget == "augmented") {
          game = BuildAugmentedGame(g, p);
        } else {
          game = BuildBasicEmbGame(g, p, ParseRationalFlag(c_eps, "eps"));
          body["eps"] = c_eps;
        }
        body["k"] = p.k;
        body["T"] = p.T;
        body["gamma"] = FormatRational(p.gamma);
      }
      WriteTextFile(c_out, EmitGame(game).dump(2) + "\n");
      body["actions"] = game.size();
      body["output"] = c_out;
      Print(global, "construct", ArithmeticMode::kExact, body);
      return kExitOk;
    }

    if (*clique_cce) {
      const Graph g = ReadGraphFile(q_graph);
      const NodeSet clique = ParseNodeList(q_clique);
      CheckNodes(g, clique);
      Json body;
      body["clique"] = clique;
      body["is_clique"] = IsClique(g, clique);
      if (!IsClique(g, clique)) {
        Print(global, "clique-cce", ArithmeticMode::kExact, body);
        return kExitInvalid;
      }
      const SparseMixture mix = CliqueCce(clique, q_T, q_size > 0 ? q_size : 2 * g.n());
      WriteTextFile(q_out, EmitMixture(mix).dump(2) + "\n");
      body["T"] = q_T;
      body["output"] = q_out;
      Print(global, "clique-cce", ArithmeticMode::kExact, body);
      return kExitOk;
    }

    if (*reduce) {
      const Graph g = ReadGraphFile(r_graph);
      NodeSet known;
      if (!r_clique.empty()) known = ParseNodeList(r_clique);
      if (!r_clique_file.empty()) known = ReadNodeListFile(r_clique_file);
      CheckNodes(g, known);
      std::unique_ptr<SparseCceOracle> oracle;
      if (r_oracle == "planted" || r_oracle == "perturb") {
        if (known.empty()) throw ParameterError("--clique or --clique-file is required");
        if (!IsClique(g, known)) throw InputError("the given clique is not a clique");
        if (r_oracle == "planted") {
          oracle = std::make_unique<PlantedCertificateOracle>(known);
        } else {
          oracle = std::make_unique<PerturbationOracle>(known, global.seed.value_or(0));
        }
      } else if (r_oracle == "bruteforce") {
        oracle = std::make_unique<BruteforceOracle>(r_resolution);
      } else {
        if (r_pattern.empty()) throw ParameterError("--pattern is required for the file oracle");
        oracle = std::make_unique<FileOracle>(r_pattern);
      }
      ReductionOptions options;
      options.parallel = r_parallel;
      if (!r_gamma.empty()) {
        options.gamma_override = ParseRationalFlag(r_gamma, "gamma");
        if (*options.gamma_override >= GammaBound(2 * r_T)) {
          Warn("gamma override is not below the schedule bound for the smallest k");
        }
      }
      const ReductionReport rep = RunReduction(g, r_T, *oracle, options);
      Print(global, "reduce", ArithmeticMode::kExact, ReductionReportTree(rep));
      bool any = false;
      for (const IterationRecord& rec : rep.records) any = any || rec.oracle_returned;
      return any ? kExitOk : kExitNotFound;
    }

    if (*lp) {
      const Game game = ReadGameFile(l_game);
      const LpObjective objective = *ParseLpObjective(l_objective);
      const LpSolution sol = LpOptimalCce(game, objective, ModeOf(global));
      Print(global, "lp", sol.mode, LpSolutionTree(sol, objective));
      if (sol.status != LpStatus::kOptimal) return kExitInvalid;
      if (!l_out.empty()) WriteTextFile(l_out, EmitJoint(sol.joint).dump(2) + "\n");
      return kExitOk;
    }

    if (*dynamics) {
      const Game game = ReadGameFile(d_game);
      const MwuResult run = MwuRun(game, d_T, d_eta, ModeOf(global));
      Print(global, "dynamics", ModeOf(global), DynamicsSummaryTree(game, run));
      if (!d_out.empty()) WriteTextFile(d_out, EmitMixture(run.mixture).dump(2) + "\n");
      return kExitOk;
    }

    if (*plant) {
      const uint64_t seed = global.seed.value_or(0);
      PlantedInstance inst = GenPlantedGraph(p_n, p_k, seed);
      if (p_permute) inst = PermuteLabels(inst, seed);
      WriteTextFile(p_out, EmitGraph(inst.graph));
      if (!p_planted_out.empty()) {
        std::ostringstream list;
        for (size_t i = 0; i < inst.planted.size(); ++i) list << (i ? " " : "") << inst.planted[i];
        WriteTextFile(p_planted_out, list.str() + "\n");
      }
      Json body;
      body["n"] = p_n;
      body["k"] = p_k;
      body["edges"] = inst.graph.edges().size();
      body["planted"] = inst.planted;
      body["output"] = p_out;
      Print(global, "plant", ArithmeticMode::kExact, body);
      return kExitOk;
    }

    if (*dense) {
      const Graph g = ReadGraphFile(x_graph);
      const Game game = ReadGameFile(x_game);
      const SparseMixture mix = ReadMixtureFile(x_mixture);
      const auto pair = ExtractDensePair(game, g.n(), mix, x_d, x_M);
      std::optional<CliqueRecovery> recovery;
      if (pair) recovery = CliqueFromDensePair(g, pair->s, pair->t, x_target > 0 ? x_target : x_d);
      Print(global, "dense-extract", ArithmeticMode::kExact, DensePairTree(g, pair, recovery));
      return pair ? kExitOk : kExitNotFound;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
