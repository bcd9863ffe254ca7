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


// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Every expected value comes from an oracle independent of
// the code under test (path enumeration, Monte Carlo, exhaustive subset
// search, hand-unrolled closed forms).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.h"
#include "ume/coloring.h"
#include "ume/errors.h"
#include "ume/evader.h"
#include "ume/generators.h"
#include "ume/instance.h"
#include "ume/oracles.h"
#include "ume/reduction.h"
#include "ume/solvers.h"
#include "ume/transforms.h"

namespace ume {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects the first few failure messages of a criterion.
class Outcome {
 public:
  void Fail(const std::string& what) {
    if (failures_++ < 5) details_ += "\n    " + what;
  }
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) Fail(what);
  }
  bool passed() const { return failures_ == 0; }
  int checks() const { return checks_; }
  int failures() const { return failures_; }
  const std::string& details() const { return details_; }
  std::string note;

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string details_;
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome ObjectiveCorrectness() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 acyclic_rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const NodeId n = 2 + i % 9;  // 2..10
    const testing::ChainCase c = testing::RandomAcyclicCase(n, acyclic_rng);
    const double j = CaptureProbability(c.chain, c.plan);
    const PathOracleResult oracle = OracleCapturePaths(c.chain, c.plan, n);
    const double err = std::abs(j - oracle.capture);
    worst = std::max(worst, err);
    out.Check(err <= 1e-12 && oracle.truncation == 0.0,
              "acyclic #" + std::to_string(i) + Fmt(": |J - oracle| = %.3g", err));
  }

  std::mt19937_64 cyclic_rng(2002);
  int within_se = 0;
  double worst_tail = 0.0, worst_z = 0.0;
  for (int i = 0; i < 50; ++i) {
    const NodeId n = 3 + i % 8;  // 3..10
    const testing::ChainCase c = testing::RandomCyclicCase(n, cyclic_rng);
    const double j = CaptureProbability(c.chain, c.plan);
    const PathOracleResult paths =
        OracleCapturePaths(c.chain, c.plan, 2000, {200'000'000, 1e-11});
    // Every enumerated path reaching t is real, so the true value sits in
    // [capture - truncation, capture].
    const bool bracketed = j <= paths.capture + 1e-12 &&
                           j >= paths.capture - paths.truncation - 1e-12;
    worst_tail = std::max(worst_tail, paths.truncation);
    out.Check(bracketed, "cyclic #" + std::to_string(i) +
                             Fmt(": J = %.15g outside [%.15g, %.15g]", j,
                                 paths.capture - paths.truncation, paths.capture));
    const MonteCarloResult mc = OracleCaptureMonteCarlo(
        c.chain, c.plan, {100'000, 3000 + static_cast<std::uint64_t>(i), 1'000'000});
    const double gap = std::abs(mc.estimate - j);
    const bool ok = gap <= 3.0 * mc.standard_error;
    within_se += ok;
    if (mc.standard_error > 0) worst_z = std::max(worst_z, gap / mc.standard_error);
    out.Check(ok, "cyclic #" + std::to_string(i) +
                      Fmt(": Monte Carlo %.6f vs %.6f (se %.2g)", mc.estimate, j,
                          mc.standard_error));
  }
  const double elapsed = Seconds(start);
  out.Check(elapsed < 30.0, Fmt("runtime %.1f s exceeds 30 s", elapsed));
  out.note = Fmt("acyclic max err %.2g; cyclic max tail %.2g", worst, worst_tail) +
             Fmt(", max |z| %.2f, ", worst_z) + std::to_string(within_se) +
             "/50 within 3 SE; " + Fmt("%.1f s", elapsed);
  return out;
}

Outcome ClosedFormCyclic() {
  Outcome out;
  EvaderChain c;
  c.source = Eigen::Vector2d(1.0, 0.0);
  c.transition = Eigen::Matrix2d::Zero();
  c.transition(0, 0) = c.transition(0, 1) = 0.5;
  c.target = 1;
  const InterdictionPlan plan = UncheckedPlan(
      InterdictionMode::kEdge, {{0, 0}, {0, 1}}, {}, EfficiencyMap(0.5));
  // Reach undetected = sum_k 0.25^k * 0.25 = 1/3.
  double reach = 0.0, term = 0.25;
  for (int k = 0; k < 60; ++k, term *= 0.25) reach += term;
  const double j = CaptureProbability(c, plan);
  out.Check(std::abs(j - 2.0 / 3.0) <= 1e-12, Fmt("J = %.17g", j));
  out.Check(std::abs((1.0 - reach) - 2.0 / 3.0) <= 1e-15, "series oracle");
  out.note = Fmt("J = %.17g, |J - 2/3| = %.2g", j, std::abs(j - 2.0 / 3.0));
  return out;
}

Outcome TransformEquivalence() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(3003);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const NodeId n = 3 + i % 6;  // 3..8
    const UmeInstance node = testing::RandomNodeInstance(n, 0, rng);
    const UmeInstance edge = testing::RandomEdgeInstance(n, 0, rng);
    for (int b = 0; b <= 2; ++b) {
      UmeInstance a = node, a2 = NodeToEdgeInstance(node);
      UmeInstance e = edge, e2 = EdgeToNodeInstance(edge);
      a.budget.limit = a2.budget.limit = e.budget.limit = e2.budget.limit = b;
      const double d1 = std::abs(SolveExact(a).value - SolveExact(a2).value);
      const double d2 = std::abs(SolveExact(e).value - SolveExact(e2).value);
      worst = std::max({worst, d1, d2});
      const std::string tag = "#" + std::to_string(i) + " B=" + std::to_string(b);
      out.Check(d1 <= 1e-9, tag + Fmt(" node->edge gap %.3g", d1));
      out.Check(d2 <= 1e-9, tag + Fmt(" edge->node gap %.3g", d2));
    }
  }
  const double elapsed = Seconds(start);
  out.Check(elapsed < 120.0, Fmt("runtime %.1f s exceeds 120 s", elapsed));
  out.note = Fmt("max gap %.2g over 300 optima; %.1f s", worst, elapsed);
  return out;
}

Outcome ColoringContract() {
  Outcome out;
  double slowest = 0.0;
  int graphs = 0;
  for (const SuiteGraph& s : PlanarSuite()) {
    ++graphs;
    const auto start = Clock::now();
    ColorAssignment f;
    try {
      f = FourColor(s.graph);
    } catch (const Error& e) {
      out.Fail(s.name + ": " + e.what());
      continue;
    }
    const double t = Seconds(start);
    slowest = std::max(slowest, t);
    // Independent check, not VerifyColoring.
    bool proper = f.colors.size() == static_cast<std::size_t>(s.graph.node_count());
    for (const Edge& e : s.graph.edges()) {
      proper = proper && f.colors[e.from] != f.colors[e.to];
    }
    proper = proper && std::set<Color>(f.colors.begin(), f.colors.end()).size() <= 4;
    out.Check(proper, s.name + ": improper coloring");
    out.Check(t < 5.0, s.name + Fmt(": %.2f s", t));
  }
  out.note = std::to_string(graphs) + " graphs, slowest call " + Fmt("%.3f s", slowest);
  return out;
}

std::set<NodeId> Intersect(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::set<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

// Reductions of every suite graph under several coloring seeds, plus the
// hand-colored star and K3 fixtures.
std::vector<std::pair<std::string, ReductionArtifacts>> ConstructedInstances() {
  std::vector<std::pair<std::string, ReductionArtifacts>> all;
  for (const SuiteGraph& s : PlanarSuite()) {
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      all.emplace_back(s.name + "/seed" + std::to_string(seed),
                       ReducePvc(s.graph, 0, {std::chrono::seconds(5), seed}));
    }
  }
  ColorAssignment star{std::vector<Color>(6, Color::kWhite)};
  star.colors[0] = Color::kRed;
  all.emplace_back("star_hand", BuildEvaders(StarGraph(5), star));
  all.emplace_back("k3_hand", BuildEvaders(CompleteGraph(3), {{Color::kWhite, Color::kRed,
                                                               Color::kGreen}}));
  return all;
}

Outcome ReductionInvariants() {
  Outcome out;
  std::mt19937_64 rng(5005);
  double worst = 0.0;
  const auto instances = ConstructedInstances();
  for (const auto& [name, art] : instances) {
    const UndirectedGraph& g = art.gprime;
    std::set<NodeId> non_singleton;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (g.Degree(u) > 0) non_singleton.insert(u);
    }
    const auto& s = art.sources;
    const auto& p = art.penultimates;
    // No source set meets its own penultimate set.
    out.Check(Intersect(p[0], s[0]).empty() && Intersect(p[1], s[1]).empty(),
              name + ": a source set meets its penultimate set");
    // The four intersections partition the non-singletons and
    // match the colors.
    const std::set<NodeId> parts[4] = {Intersect(s[0], s[1]), Intersect(s[0], p[1]),
                                       Intersect(s[1], p[0]), Intersect(p[0], p[1])};
    const Color colors[4] = {Color::kWhite, Color::kRed, Color::kGreen, Color::kBlack};
    std::set<NodeId> uni;
    std::size_t total = 0;
    for (int k = 0; k < 4; ++k) {
      total += parts[k].size();
      uni.insert(parts[k].begin(), parts[k].end());
      for (NodeId u : parts[k]) {
        out.Check(art.coloring[u] == colors[k], name + ": node " +
                                                    std::to_string(u) +
                                                    " in the wrong class");
      }
    }
    out.Check(total == uni.size(), name + ": intersections overlap");
    out.Check(uni == non_singleton, name + ": intersections miss a node");
    // Adding t to a plan never changes <J>.
    const UmeInstance& inst = art.instance;
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<NodeId> q;
      for (NodeId u = 0; u < g.node_count(); ++u) {
        if (rng() % 3 == 0) q.push_back(u);
      }
      std::vector<NodeId> with_t = q;
      with_t.push_back(art.target);
      const double a = Evaluate(inst, PlanFromNodes(inst.graph, q, inst.efficiency));
      const double b = Evaluate(inst, PlanFromNodes(inst.graph, with_t, inst.efficiency));
      worst = std::max(worst, std::abs(a - b));
      out.Check(std::abs(a - b) <= 1e-12, name + Fmt(": t changes <J> by %.3g", a - b));
    }
  }
  out.note = std::to_string(instances.size()) + " instances, max <J> shift " +
             Fmt("%.2g", worst);
  return out;
}

Outcome EdgeCoverage() {
  Outcome out;
  int checked = 0;
  for (const auto& [name, art] : ConstructedInstances()) {
    for (const EvaderChain& c : art.instance.evaders.chains) {
      const Eigen::MatrixXd m3 = c.transition * c.transition * c.transition;
      out.Check(m3.isZero(0.0), name + ": M^3 != 0");
    }
    if (art.pathological) continue;
    ++checked;
    // Traversal probability of u -> v for evader i is visits(u) * M(u, v);
    // computed here from powers of M rather than the library's report.
    std::set<Edge> seen;
    for (const EvaderChain& c : art.instance.evaders.chains) {
      Eigen::RowVectorXd visits = c.source.transpose();
      Eigen::RowVectorXd step = visits;
      for (int k = 0; k < 3; ++k) {
        step = step * c.transition;
        visits += step;
      }
      for (const Edge& e : art.gprime.edges()) {
        if (visits(e.from) * c.transition(e.from, e.to) > 0.0 ||
            visits(e.to) * c.transition(e.to, e.from) > 0.0) {
          seen.insert(e);
        }
      }
    }
    out.Check(seen.size() == art.gprime.edge_count(),
              name + ": " + std::to_string(art.gprime.edge_count() - seen.size()) +
                  " edges never traversed");
    const auto report = EdgeTraversalReport(art);
    bool report_ok = report.size() == art.gprime.edge_count();
    for (const auto& t : report) report_ok = report_ok && !t.evaders.empty();
    out.Check(report_ok, name + ": traversal report has an empty entry");
  }
  out.note = std::to_string(checked) + " non-pathological instances";
  return out;
}

Outcome HeadlineEquivalence() {
  Outcome out;
  const auto start = Clock::now();
  int rows = 0, agree = 0, graphs = 0;
  for (const SuiteGraph& s : PlanarSuite()) {
    const NodeId n = s.graph.node_count();
    if (n > 12) continue;
    ++graphs;
    const int min_cover = testing::ExhaustiveCoverSize(s.graph);
    const ReductionArtifacts art = ReducePvc(s.graph, 0);
    for (int b = 0; b <= n; ++b) {
      UmeInstance inst = art.instance;
      inst.budget.limit = b;
      const Decision d = DecidePerfect(inst, 1e-9);
      const bool pvc = b >= min_cover;
      ++rows;
      agree += pvc == d.yes;
      out.Check(pvc == d.yes, s.name + " B'=" + std::to_string(b) + ": PVC " +
                                  (pvc ? "YES" : "NO") + ", UME " +
                                  (d.yes ? "YES" : "NO"));
    }
  }
  const double elapsed = Seconds(start);
  out.Check(elapsed < 600.0, Fmt("runtime %.1f s exceeds 600 s", elapsed));
  out.note = std::to_string(agree) + "/" + std::to_string(rows) + " rows agree on " +
             std::to_string(graphs) + " graphs; " + Fmt("%.1f s", elapsed);
  return out;
}

Outcome CornerCases() {
  Outcome out;
  for (NodeId n : {1, 3, 6}) {
    const UndirectedGraph g = EdgelessGraph(n);
    const bool pvc = testing::ExhaustiveCoverSize(g) <= 0;
    const ReductionArtifacts art = ReducePvc(g, 0);
    const Decision d = DecidePerfect(art.instance, 1e-9);
    out.Check(pvc && d.yes && art.pathological,
              std::to_string(n) + " singletons: not YES at B = 0 on both sides");
  }
  ColorAssignment f{std::vector<Color>(6, Color::kWhite)};
  f.colors[0] = Color::kRed;
  const ReductionArtifacts star = BuildEvaders(StarGraph(5), f);
  const InterdictionPlan none = EmptyPlan(star.instance);
  const std::vector<double> j = CaptureProbabilities(star.instance.evaders, none);
  out.Check(j[0] == 1.0, Fmt("star: J1 = %.17g under the empty plan", j[0]));
  // Evader 2 walks leaf -> center -> t and is never caught without sensors.
  out.Check(j[1] == 0.0, Fmt("star: J2 = %.17g under the empty plan", j[1]));
  for (const auto& t : EdgeTraversalReport(star)) {
    out.Check(t.evaders == std::vector<int>{1}, "star: an edge used by evader 1");
  }
  out.note = Fmt("star J1 = %g, J2 = %g", j[0], j[1]);
  return out;
}

Outcome SolverSanity() {
  Outcome out;
  int instances = 0;
  auto check = [&out](const std::string& name, UmeInstance inst, int max_budget) {
    double prev_exact = -1.0, prev_greedy = -1.0;
    for (int b = 0; b <= max_budget; ++b) {
      inst.budget.limit = b;
      const SolveResult exact = SolveExact(inst);
      const SolveResult greedy = SolveGreedy(inst);
      const std::string tag = name + " B=" + std::to_string(b);
      out.Check(greedy.value <= exact.value + 1e-12,
                tag + Fmt(": greedy %.15g > exact %.15g", greedy.value, exact.value));
      out.Check(exact.value >= prev_exact - 1e-12, tag + ": exact not monotone");
      out.Check(greedy.value >= prev_greedy - 1e-12, tag + ": greedy not monotone");
      out.Check(std::abs(Evaluate(inst, exact.plan) - exact.value) <= 1e-12 &&
                    std::abs(Evaluate(inst, greedy.plan) - greedy.value) <= 1e-12,
                tag + ": witness does not re-evaluate");
      out.Check(exact.plan.cost() <= static_cast<std::size_t>(b) &&
                    greedy.plan.cost() <= static_cast<std::size_t>(b),
                tag + ": over budget");
      prev_exact = exact.value;
      prev_greedy = greedy.value;
    }
  };
  for (const SuiteGraph& s : PlanarSuite()) {
    if (s.graph.node_count() > 12) continue;
    ++instances;
    check(s.name, ReducePvc(s.graph, 0).instance, s.graph.node_count());
  }
  std::mt19937_64 rng(9009);
  for (int i = 0; i < 20; ++i) {
    ++instances;
    check("random#" + std::to_string(i),
          i % 2 ? testing::RandomNodeInstance(7, 0, rng)
                : testing::RandomEdgeInstance(6, 0, rng),
          4);
  }
  out.note = std::to_string(instances) + " instances";
  return out;
}

}  // namespace
}  // namespace ume

int main() {
  using ume::Outcome;
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "objective vs path enumeration and Monte Carlo", ume::ObjectiveCorrectness},
      {2, "closed-form cyclic case J = 2/3", ume::ClosedFormCyclic},
      {3, "node/edge transform equivalence", ume::TransformEquivalence},
      {4, "four-coloring contract on the planar suite", ume::ColoringContract},
      {5, "reduction set identities and t-pruning", ume::ReductionInvariants},
      {6, "edge coverage and M^3 = 0", ume::EdgeCoverage},
      {7, "vertex cover iff perfect interdiction", ume::HeadlineEquivalence},
      {8, "corner cases", ume::CornerCases},
      {9, "solver sanity", ume::SolverSanity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s (%d checks; %s)%s\n",
                o.passed() ? "PASS" : "FAIL", c.id, c.title, o.checks(),
                o.note.c_str(), o.details().c_str());
    std::fflush(stdout);
    failed += !o.passed();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
