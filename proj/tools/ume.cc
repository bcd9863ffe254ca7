// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ume: evaluate, solve and decide interdiction instances, build and verify
// vertex-cover reductions, color planar graphs and simulate evaders.
//
// Exit codes: 0 success, 1 clean NO from `decide`, 2 any error.

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ume/coloring.h"
#include "ume/decimal.h"
#include "ume/errors.h"
#include "ume/evader.h"
#include "ume/generators.h"
#include "ume/graph.h"
#include "ume/instance.h"
#include "ume/instance_json.h"
#include "ume/oracles.h"
#include "ume/reduction.h"
#include "ume/solvers.h"

namespace {

using namespace ume;  // NOLINT

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

// Writes to `path`, or stdout when path is empty or "-".
void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgument("write failed: " + path);
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string Fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

// "0..N" or a single "N".
std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int b = std::stoi(text);
      return {b, b};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("bad budget range '" + text + "'; expected A..B");
  }
}

ColorAssignment LoadColoring(const std::string& path, NodeId n) {
  std::istringstream in(ReadTextFile(path));
  std::vector<std::optional<Color>> colors(static_cast<std::size_t>(n));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    long long u;
    std::string name;
    if (!(fields >> u)) continue;
    if (!(fields >> name)) throw ParseError(line_no, "missing color");
    if (u < 0 || u >= n) throw ParseError(line_no, "node out of range");
    const auto c = ParseColor(name);
    if (!c) throw ParseError(line_no, "unknown color '" + name + "'");
    colors[static_cast<std::size_t>(u)] = *c;
  }
  ColorAssignment f;
  for (NodeId u = 0; u < n; ++u) {
    if (!colors[u]) {
      throw MissingColorError("node " + std::to_string(u) + " has no color");
    }
    f.colors.push_back(*colors[u]);
  }
  return f;
}

std::string ColoringText(const ColorAssignment& f) {
  std::string text;
  for (std::size_t u = 0; u < f.colors.size(); ++u) {
    text += std::to_string(u) + " " + ToString(f.colors[u]) + "\n";
  }
  return text;
}

struct Common {
  int threads = 0;
};

struct EvalArgs {
  std::string instance, plan;
};

int RunEval(const EvalArgs& args) {
  const UmeInstance inst = LoadInstance(args.instance);
  const InterdictionPlan plan = LoadPlan(args.plan, inst);
  const std::vector<double> j = CaptureProbabilities(inst.evaders, plan);
  double total = 0.0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    total += inst.evaders.chains[k].weight * j[k];
  }
  std::cout << "objective " << Fixed12(total) << "\n";
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::cout << "evader " << k + 1 << " " << Fixed12(j[k]) << "\n";
  }
  if (!FitsBudget(plan, inst.budget)) {
    std::cerr << "warning: plan uses " << plan.cost() << " of budget "
              << inst.budget.limit << "\n";
  }
  return kExitOk;
}

struct SolveArgs {
  std::string instance, method = "exact", out;
  std::optional<int> budget;
  std::uint64_t subset_cap = kDefaultSubsetCap;
};

void OverrideBudget(UmeInstance& inst, const std::optional<int>& budget) {
  if (!budget) return;
  if (*budget < 0) throw InvalidArgument("budget must be non-negative");
  inst.budget.limit = *budget;
}

int RunSolve(const SolveArgs& args) {
  UmeInstance inst = LoadInstance(args.instance);
  OverrideBudget(inst, args.budget);
  SolveResult result;
  if (args.method == "exact") {
    result = SolveExact(inst, {args.subset_cap});
  } else {
    result = SolveGreedy(inst);
  }
  std::cerr << ToString(result.method) << " value " << Fixed12(result.value)
            << " (" << result.evaluations << " evaluations, "
            << FormatSignificant(result.elapsed.count(), 3) << " s)\n";
  Emit(args.out, Dump(SolveResultToJson(result)));
  return kExitOk;
}

struct DecideArgs {
  std::string instance, witness;
  std::optional<int> budget;
  double tol = kDefaultDecisionTolerance;
  std::uint64_t subset_cap = kDefaultSubsetCap;
  bool json = false;
};

int RunDecide(const DecideArgs& args) {
  UmeInstance inst = LoadInstance(args.instance);
  OverrideBudget(inst, args.budget);
  const Decision d = DecidePerfect(inst, args.tol, {args.subset_cap});
  if (args.json) {
    std::cout << Dump(DecisionToJson(d, args.tol));
  } else {
    std::cout << (d.yes ? "YES" : "NO") << " " << Fixed12(d.value) << "\n";
  }
  if (d.yes && !args.witness.empty()) {
    Emit(args.witness, Dump(PlanToJson(d.witness)));
  }
  return d.yes ? kExitOk : kExitNo;
}

struct ReduceArgs {
  std::string graph, coloring, out, artifacts;
  int budget = 0;
  std::uint64_t seed = 0;
  int time_budget_ms = 30'000;
};

int RunReduce(const ReduceArgs& args) {
  const UndirectedGraph g = LoadUndirectedEdgeList(args.graph);
  ReductionArtifacts art;
  if (!args.coloring.empty()) {
    art = BuildEvaders(g, LoadColoring(args.coloring, g.node_count()));
    art.bprime = args.budget;
    art.instance.budget.limit = args.budget;
  } else {
    art = ReducePvc(g, args.budget,
                    {std::chrono::milliseconds(args.time_budget_ms), args.seed});
  }
  Emit(args.out, InstanceToText(art.instance));
  if (!args.artifacts.empty()) {
    Emit(args.artifacts,
         Dump(ArtifactsToJson(art, EdgeTraversalReport(art))));
  }
  return kExitOk;
}

struct ColorArgs {
  std::string graph, out;
  std::uint64_t seed = 0;
  int time_budget_ms = 30'000;
};

int RunColor(const ColorArgs& args) {
  const UndirectedGraph g = LoadUndirectedEdgeList(args.graph);
  const ColorAssignment f =
      FourColor(g, {std::chrono::milliseconds(args.time_budget_ms), args.seed});
  Emit(args.out, ColoringText(f));
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> graphs;
  std::string budgets = "0..-1", report;
  double tol = kDefaultDecisionTolerance;
  std::uint64_t seed = 0;
  bool timing = false;
};

int RunVerify(const VerifyArgs& args) {
  Json reports = Json::array();
  bool all_passed = true;
  for (const std::string& path : args.graphs) {
    const UndirectedGraph g = LoadUndirectedEdgeList(path);
    auto [first, last] = ParseRange(args.budgets);
    if (last < 0) last = g.node_count();
    VerifyOptions options;
    options.tol = args.tol;
    options.coloring.seed = args.seed;
    const std::string id = std::filesystem::path(path).stem().string();
    const VerificationReport report =
        VerifyReduction(g, first, last, id, options);
    all_passed = all_passed && report.passed;
    reports.push_back(ReportToJson(report, args.timing));

    std::cout << id << "  n=" << report.node_count
              << " m=" << report.edge_count
              << " min_cover=" << report.cover.size << "\n";
    std::cout << "  budget  pvc  ume  agree  value\n";
    for (const VerificationRow& row : report.rows) {
      char line[128];
      std::snprintf(line, sizeof(line), "  %6d  %-3s  %-3s  %-5s  %s\n",
                    row.budget, row.pvc_yes ? "YES" : "NO",
                    row.ume_yes ? "YES" : "NO", row.agree ? "yes" : "NO",
                    Fixed12(row.ume_value).c_str());
      std::cout << line;
    }
    std::cout << "  " << (report.passed ? "PASS" : "FAIL");
    if (args.timing) {
      std::cout << "  " << FormatSignificant(report.elapsed.count(), 3) << " s";
    }
    std::cout << "\n";
  }
  if (!args.report.empty()) {
    Emit(args.report,
         Dump(reports.size() == 1 ? reports.front() : reports));
  }
  // A disagreement is a failed verification, not a NO answer.
  return all_passed ? kExitOk : kExitError;
}

struct SimulateArgs {
  std::string instance, plan;
  MonteCarloOptions mc;
};

int RunSimulate(const SimulateArgs& args) {
  const UmeInstance inst = LoadInstance(args.instance);
  const InterdictionPlan plan =
      args.plan.empty() ? EmptyPlan(inst) : LoadPlan(args.plan, inst);
  double total = 0.0, var = 0.0;
  std::vector<MonteCarloResult> results;
  for (const EvaderChain& chain : inst.evaders.chains) {
    results.push_back(OracleCaptureMonteCarlo(chain, plan, args.mc));
    total += chain.weight * results.back().estimate;
    var += chain.weight * chain.weight * results.back().standard_error *
           results.back().standard_error;
  }
  std::cout << "objective " << Fixed12(total) << " se "
            << Fixed12(std::sqrt(var)) << "\n";
  for (std::size_t k = 0; k < results.size(); ++k) {
    const MonteCarloResult& r = results[k];
    std::cout << "evader " << k + 1 << " " << Fixed12(r.estimate) << " se "
              << Fixed12(r.standard_error) << " captured " << r.captured
              << " vanished " << r.vanished << " reached " << r.reached
              << " truncated " << r.truncated << "\n";
  }
  return kExitOk;
}

int RunGenerateSuite(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const SuiteGraph& s : PlanarSuite()) {
    Emit((std::filesystem::path(dir) / (s.name + ".txt")).string(),
         ToEdgeListText(s.graph));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unreactive Markovian evader interdiction toolkit"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads,
                 "Cap on worker threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Capture probabilities of a plan");
  eval_cmd->add_option("instance", eval.instance, "instance-json")->required();
  eval_cmd->add_option("plan", eval.plan, "plan-json")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize a plan within budget");
  solve_cmd->add_option("instance", solve.instance, "instance-json")->required();
  solve_cmd->add_option("--method", solve.method)
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  solve_cmd->add_option("--budget", solve.budget, "Override the budget");
  solve_cmd->add_option("--subset-cap", solve.subset_cap)->capture_default_str();
  solve_cmd->add_option("-o,--out", solve.out, "Result JSON (default stdout)");

  DecideArgs decide;
  auto* decide_cmd =
      app.add_subcommand("decide", "Is <J> = 1 achievable within budget?");
  decide_cmd->add_option("instance", decide.instance, "instance-json")->required();
  decide_cmd->add_option("--budget", decide.budget, "Override the budget");
  decide_cmd->add_option("--tol", decide.tol)->capture_default_str();
  decide_cmd->add_option("--subset-cap", decide.subset_cap)->capture_default_str();
  decide_cmd->add_option("--witness", decide.witness, "Plan-json for a YES");
  decide_cmd->add_flag("--json", decide.json, "Print the decision as JSON");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "Build the 2-evader instance for a planar vertex cover input");
  reduce_cmd->add_option("graph", reduce.graph, "Undirected edge list")->required();
  reduce_cmd->add_option("--budget", reduce.budget, "Cover budget B'")
      ->check(CLI::NonNegativeNumber);
  reduce_cmd->add_option("--coloring", reduce.coloring,
                         "Use this 'node color' file instead of coloring");
  reduce_cmd->add_option("--seed", reduce.seed)->capture_default_str();
  reduce_cmd->add_option("--time-budget-ms", reduce.time_budget_ms)
      ->capture_default_str();
  reduce_cmd->add_option("-o,--out", reduce.out, "instance-json (default stdout)");
  reduce_cmd->add_option("--artifacts", reduce.artifacts, "artifacts-json");

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Four-color a planar graph");
  color_cmd->add_option("graph", color.graph, "Undirected edge list")->required();
  color_cmd->add_option("--seed", color.seed)->capture_default_str();
  color_cmd->add_option("--time-budget-ms", color.time_budget_ms)
      ->capture_default_str();
  color_cmd->add_option("-o,--out", color.out);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check PVC answers against UME decisions over a budget sweep");
  verify_cmd->add_option("graphs", verify.graphs, "Undirected edge lists")
      ->required();
  verify_cmd->add_option("--budgets", verify.budgets,
                         "A..B (default 0..node count)");
  verify_cmd->add_option("--tol", verify.tol)->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--report", verify.report, "report-json");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall-clock times");

  SimulateArgs simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo capture estimate");
  simulate_cmd->add_option("instance", simulate.instance, "instance-json")
      ->required();
  simulate_cmd->add_option("plan", simulate.plan, "plan-json (default empty)");
  simulate_cmd->add_option("--samples", simulate.mc.samples)
      ->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.mc.seed)->capture_default_str();
  simulate_cmd->add_option("--max-steps", simulate.mc.max_steps)
      ->capture_default_str();

  std::string suite_dir;
  auto* suite_cmd = app.add_subcommand(
      "generate-suite", "Write the planar test suite as edge lists");
  suite_cmd->add_option("dir", suite_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (common.threads > 0) omp_set_num_threads(common.threads);
  try {
    if (*eval_cmd) return RunEval(eval);
    if (*solve_cmd) return RunSolve(solve);
    if (*decide_cmd) return RunDecide(decide);
    if (*reduce_cmd) return RunReduce(reduce);
    if (*color_cmd) return RunColor(color);
    if (*verify_cmd) return RunVerify(verify);
    if (*simulate_cmd) return RunSimulate(simulate);
    if (*suite_cmd) return RunGenerateSuite(suite_dir);
  } catch (const std::exception& e) {
    std::cerr << "ume " << app.get_subcommands().front()->get_name()
              << ": error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
