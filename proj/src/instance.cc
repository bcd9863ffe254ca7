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

#include "ume/instance.h"

#include <algorithm>

#include "ume/errors.h"

namespace ume {

void ValidateInstance(const UmeInstance& inst) {
  const ValidationReport report = ValidateEnsemble(inst.evaders);
  if (!report.empty()) throw InvalidArgument(report.front().message);
  const NodeId n = inst.graph.node_count();
  for (std::size_t k = 0; k < inst.evaders.chains.size(); ++k) {
    const EvaderChain& chain = inst.evaders.chains[k];
    if (chain.dimension() != n) {
      throw InvalidArgument("evader " + std::to_string(k + 1) +
                            " has dimension " +
                            std::to_string(chain.dimension()) +
                            " but the graph has " + std::to_string(n) +
                            " nodes");
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (chain.transition(u, v) != 0.0 && !inst.graph.HasEdge(u, v)) {
          throw InvalidArgument("evader " + std::to_string(k + 1) +
                                " moves along (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") which is not an edge");
        }
      }
    }
  }
  for (const Edge& e : inst.graph.edges()) {
    if (e.from != e.to) continue;
    bool used = std::any_of(
        inst.evaders.chains.begin(), inst.evaders.chains.end(),
        [&](const EvaderChain& c) { return c.transition(e.from, e.to) > 0.0; });
    if (!used) {
      throw InvalidArgument("self-loop at node " + std::to_string(e.from) +
                            " is not used by any evader");
    }
  }
  const BudgetUnit expected = inst.mode == InterdictionMode::kNode
                                  ? BudgetUnit::kNodes
                                  : BudgetUnit::kEdges;
  if (inst.budget.unit != expected) {
    throw InvalidArgument("budget unit " + ToString(inst.budget.unit) +
                          " does not match " + ToString(inst.mode) + " mode");
  }
  if (inst.budget.limit < 0) throw InvalidArgument("negative budget");
}

std::vector<NodeId> NodeCandidates(const UmeInstance& inst) {
  std::vector<NodeId> nodes;
  for (NodeId u = 0; u < inst.graph.node_count(); ++u) {
    const auto& chains = inst.evaders.chains;
    bool killing_for_all =
        !chains.empty() &&
        std::all_of(chains.begin(), chains.end(),
                    [u](const EvaderChain& c) { return c.target == u; });
    if (!killing_for_all) nodes.push_back(u);
  }
  return nodes;
}

std::vector<Edge> EdgeCandidates(const UmeInstance& inst) {
  std::vector<Edge> edges;
  for (const Edge& e : inst.graph.edges()) {
    if (inst.efficiency.at(e.from, e.to) > 0.0) edges.push_back(e);
  }
  return edges;
}

std::size_t CandidateCount(const UmeInstance& inst) {
  return inst.mode == InterdictionMode::kNode ? NodeCandidates(inst).size()
                                              : EdgeCandidates(inst).size();
}

InterdictionPlan PlanForCandidates(const UmeInstance& inst,
                                   std::span<const int> candidate_indices) {
  if (inst.mode == InterdictionMode::kNode) {
    const std::vector<NodeId> all = NodeCandidates(inst);
    std::vector<NodeId> chosen;
    chosen.reserve(candidate_indices.size());
    for (int i : candidate_indices) chosen.push_back(all.at(i));
    return PlanFromNodes(inst.graph, chosen, inst.efficiency);
  }
  const std::vector<Edge> all = EdgeCandidates(inst);
  std::vector<Edge> chosen;
  chosen.reserve(candidate_indices.size());
  for (int i : candidate_indices) chosen.push_back(all.at(i));
  return PlanFromEdges(inst.graph, chosen, inst.efficiency);
}

InterdictionPlan EmptyPlan(const UmeInstance& inst) {
  return PlanForCandidates(inst, {});
}

double Evaluate(const UmeInstance& inst, const InterdictionPlan& plan) {
  return WeightedCapture(inst.evaders, plan);
}

}  // namespace ume
