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

#include "ume/transforms.h"

#include <algorithm>

#include "ume/errors.h"

namespace ume {
namespace {

bool IsTargetOfAll(const EvaderEnsemble& ensemble, NodeId u) {
  return !ensemble.chains.empty() &&
         std::all_of(ensemble.chains.begin(), ensemble.chains.end(),
                     [u](const EvaderChain& c) { return c.target == u; });
}

Eigen::VectorXd PadSource(const Eigen::VectorXd& source, NodeId size) {
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(size);
  padded.head(source.size()) = source;
  return padded;
}

}  // namespace

UmeInstance EdgeToNodeInstance(const UmeInstance& inst) {
  if (inst.mode != InterdictionMode::kEdge) {
    throw InvalidArgument("EdgeToNodeInstance expects an edge-mode instance");
  }
  ValidateInstance(inst);
  const NodeId n = inst.graph.node_count();
  const auto edges = inst.graph.edges();
  const NodeId size = n + static_cast<NodeId>(edges.size());

  std::vector<WeightedEdge> split;
  split.reserve(2 * edges.size());
  EfficiencyMap efficiency(0.0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const NodeId x = n + static_cast<NodeId>(i);
    split.push_back({edges[i].from, x, inst.graph.weight(i)});
    split.push_back({x, edges[i].to, 1.0});
    efficiency.Set(x, edges[i].to, inst.efficiency.at(edges[i].from,
                                                      edges[i].to));
  }

  UmeInstance out{DiGraph(size, std::move(split)), {}, std::move(efficiency),
                  Budget{inst.budget.limit, BudgetUnit::kNodes},
                  InterdictionMode::kNode};
  for (const EvaderChain& chain : inst.evaders.chains) {
    EvaderChain c;
    c.source = PadSource(chain.source, size);
    c.transition = Eigen::MatrixXd::Zero(size, size);
    c.target = chain.target;
    c.weight = chain.weight;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const NodeId x = n + static_cast<NodeId>(i);
      c.transition(edges[i].from, x) = chain.transition(edges[i].from,
                                                        edges[i].to);
      c.transition(x, edges[i].to) = 1.0;
    }
    out.evaders.chains.push_back(std::move(c));
  }
  return out;
}

UmeInstance NodeToEdgeInstance(const UmeInstance& inst) {
  if (inst.mode != InterdictionMode::kNode) {
    throw InvalidArgument("NodeToEdgeInstance expects a node-mode instance");
  }
  ValidateInstance(inst);
  const NodeId n = inst.graph.node_count();
  const NodeId size = 2 * n;

  std::vector<WeightedEdge> split;
  split.reserve(static_cast<std::size_t>(n) + inst.graph.edge_count());
  EfficiencyMap efficiency(0.0);
  for (NodeId u = 0; u < n; ++u) {
    double node_d = inst.efficiency.default_value();
    auto [begin, end] = inst.graph.OutEdgeRange(u);
    for (std::size_t i = begin; i < end; ++i) {
      const Edge& e = inst.graph.edges()[i];
      const double d = inst.efficiency.at(e.from, e.to);
      if (i == begin) {
        node_d = d;
      } else if (d != node_d) {
        throw InvalidArgument("node " + std::to_string(u) +
                              " has out-edges with different efficiencies");
      }
      split.push_back({n + u, e.to, inst.graph.weight(i)});
    }
    split.push_back({u, n + u, 1.0});
    if (!IsTargetOfAll(inst.evaders, u)) efficiency.Set(u, n + u, node_d);
  }

  UmeInstance out{DiGraph(size, std::move(split)), {}, std::move(efficiency),
                  Budget{inst.budget.limit, BudgetUnit::kEdges},
                  InterdictionMode::kEdge};
  for (const EvaderChain& chain : inst.evaders.chains) {
    EvaderChain c;
    c.source = PadSource(chain.source, size);
    c.transition = Eigen::MatrixXd::Zero(size, size);
    c.target = chain.target;
    c.weight = chain.weight;
    for (NodeId u = 0; u < n; ++u) {
      if (u == chain.target) continue;
      c.transition(u, n + u) = 1.0;
      c.transition.block(n + u, 0, 1, n) = chain.transition.row(u);
    }
    out.evaders.chains.push_back(std::move(c));
  }
  return out;
}

}  // namespace ume
