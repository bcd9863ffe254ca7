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

#include "ume/reduction.h"

#include <algorithm>

#include "ume/errors.h"

namespace ume {
namespace {

// Bit i of a color's two-bit code; 0 = source class, 1 = penultimate class.
bool PenultimateBit(Color c, int evader) {
  const int code = c == Color::kWhite  ? 0b00
                   : c == Color::kRed   ? 0b01
                   : c == Color::kGreen ? 0b10
                                        : 0b11;
  // evader 0 reads the high bit (green/black are P1), evader 1 the low bit.
  return ((code >> (1 - evader)) & 1) != 0;
}

}  // namespace

UmeGraph BuildUmeGraph(const UndirectedGraph& gprime) {
  const NodeId n = gprime.node_count();
  const NodeId t = n;
  std::vector<WeightedEdge> edges;
  edges.reserve(2 * gprime.edge_count() + static_cast<std::size_t>(n));
  for (const Edge& e : gprime.edges()) {
    edges.push_back({e.from, e.to, 1.0});
    edges.push_back({e.to, e.from, 1.0});
  }
  for (NodeId u = 0; u < n; ++u) {
    if (gprime.Degree(u) > 0) edges.push_back({u, t, 1.0});
  }
  return {DiGraph(n + 1, std::move(edges)), t};
}

ReductionArtifacts BuildEvaders(const UndirectedGraph& gprime,
                                const ColorAssignment& f) {
  const NodeId n = gprime.node_count();
  if (n == 0) {
    throw InvalidArgument("reduction needs a graph with at least one node");
  }
  if (f.colors.size() != static_cast<std::size_t>(n)) {
    throw MissingColorError("coloring covers " +
                            std::to_string(f.colors.size()) + " of " +
                            std::to_string(n) + " nodes");
  }
  if (ColoringCheck check = VerifyColoring(gprime, f); !check.proper) {
    const Edge& bad = check.violations.front();
    throw ImproperColoringError("edge (" + std::to_string(bad.from) + ", " +
                                std::to_string(bad.to) +
                                ") is monochromatic");
  }

  UmeGraph ume = BuildUmeGraph(gprime);
  ReductionArtifacts art;
  art.gprime = gprime;
  art.coloring = f;
  art.target = ume.target;
  const NodeId t = ume.target;
  const NodeId size = n + 1;

  art.pathological = gprime.edge_count() == 0;
  for (NodeId u = 0; u < n; ++u) {
    if (gprime.Degree(u) == 0) continue;
    for (int i = 0; i < kReductionEvaders; ++i) {
      if (PenultimateBit(f[u], i)) {
        art.penultimates[i].push_back(u);
      } else {
        art.sources[i].push_back(u);
      }
    }
  }

  UmeInstance& inst = art.instance;
  inst.graph = std::move(ume.graph);
  inst.efficiency = EfficiencyMap(1.0);
  inst.budget = Budget{0, BudgetUnit::kNodes};
  inst.mode = InterdictionMode::kNode;

  for (int i = 0; i < kReductionEvaders; ++i) {
    EvaderChain chain;
    chain.source = Eigen::VectorXd::Zero(size);
    chain.transition = Eigen::MatrixXd::Zero(size, size);
    chain.target = t;
    chain.weight = 1.0 / kReductionEvaders;
    const std::vector<NodeId>& sources = art.sources[i];
    // Pathological input, or a coloring with no source class for evader i
    // (e.g. only green/black used): the evader is a stationary point mass
    // on the lowest-index node and never reaches t. In the second case the
    // other evader already crosses every edge.
    if (art.pathological || sources.empty()) {
      chain.source(0) = 1.0;
      inst.evaders.chains.push_back(std::move(chain));
      continue;
    }
    for (NodeId u : sources) {
      chain.source(u) = 1.0 / static_cast<double>(sources.size());
    }
    for (NodeId u : sources) {
      int z = 0;
      for (NodeId v : gprime.Neighbors(u)) z += PenultimateBit(f[v], i) ? 1 : 0;
      art.normalizers[i].push_back({u, z});
      for (NodeId v : gprime.Neighbors(u)) {
        if (PenultimateBit(f[v], i)) chain.transition(u, v) = 1.0 / z;
      }
    }
    for (NodeId u : art.penultimates[i]) chain.transition(u, t) = 1.0;
    inst.evaders.chains.push_back(std::move(chain));
  }
  return art;
}

ReductionArtifacts ReducePvc(const UndirectedGraph& gprime, int bprime,
                             const ColoringOptions& coloring) {
  if (bprime < 0) throw InvalidArgument("budget must be non-negative");
  ReductionArtifacts art = BuildEvaders(gprime, FourColor(gprime, coloring));
  art.bprime = bprime;
  art.instance.budget = Budget{bprime, BudgetUnit::kNodes};
  return art;
}

std::vector<EdgeTraversal> EdgeTraversalReport(const ReductionArtifacts& art) {
  std::vector<EdgeTraversal> report;
  if (art.pathological) return report;
  const UmeInstance& inst = art.instance;
  const InterdictionPlan none = EmptyPlan(inst);
  std::vector<Eigen::VectorXd> visits;
  for (const EvaderChain& chain : inst.evaders.chains) {
    visits.push_back(ExpectedVisits(chain, none));
  }
  for (const Edge& e : art.gprime.edges()) {
    EdgeTraversal row{e, {}};
    for (int i = 0; i < static_cast<int>(visits.size()); ++i) {
      const Eigen::MatrixXd& m = inst.evaders.chains[i].transition;
      const double flow = visits[i](e.from) * m(e.from, e.to) +
                          visits[i](e.to) * m(e.to, e.from);
      if (flow > 0.0) row.evaders.push_back(i);
    }
    report.push_back(std::move(row));
  }
  return report;
}

}  // namespace ume
