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

#include "ume/interdiction.h"

#include <algorithm>

#include "ume/errors.h"

namespace ume {
namespace {

void CheckProbability(double d, const char* what) {
  if (!(d >= 0.0 && d <= 1.0)) {
    throw InvalidArgument(std::string(what) + " must lie in [0, 1], got " +
                          std::to_string(d));
  }
}

template <typename T>
void SortUnique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string ToString(InterdictionMode mode) {
  return mode == InterdictionMode::kNode ? "node" : "edge";
}

std::string ToString(BudgetUnit unit) {
  return unit == BudgetUnit::kNodes ? "nodes" : "edges";
}

EfficiencyMap::EfficiencyMap(double default_value)
    : default_value_(default_value) {
  CheckProbability(default_value, "default efficiency");
}

double EfficiencyMap::at(NodeId from, NodeId to) const {
  auto it = entries_.find(Edge{from, to});
  return it == entries_.end() ? default_value_ : it->second;
}

void EfficiencyMap::Set(NodeId from, NodeId to, double d) {
  CheckProbability(d, "efficiency");
  entries_[Edge{from, to}] = d;
}

bool InterdictionPlan::HasSensor(NodeId from, NodeId to) const {
  return std::binary_search(sensors_.begin(), sensors_.end(), Edge{from, to});
}

InterdictionPlan PlanFromNodes(const DiGraph& g, std::span<const NodeId> nodes,
                               EfficiencyMap efficiency) {
  InterdictionPlan plan;
  plan.mode_ = InterdictionMode::kNode;
  plan.efficiency_ = std::move(efficiency);
  plan.nodes_.assign(nodes.begin(), nodes.end());
  SortUnique(plan.nodes_);
  for (NodeId u : plan.nodes_) {
    if (u < 0 || u >= g.node_count()) {
      throw UnknownNodeError("node " + std::to_string(u) +
                             " is not in the graph");
    }
    for (NodeId v : g.OutNeighbors(u)) plan.sensors_.push_back({u, v});
  }
  // Nodes are visited in increasing order and out-neighbors are sorted.
  return plan;
}

InterdictionPlan PlanFromEdges(const DiGraph& g, std::span<const Edge> sensors,
                               EfficiencyMap efficiency) {
  InterdictionPlan plan;
  plan.mode_ = InterdictionMode::kEdge;
  plan.efficiency_ = std::move(efficiency);
  plan.sensors_.assign(sensors.begin(), sensors.end());
  SortUnique(plan.sensors_);
  for (const Edge& e : plan.sensors_) {
    if (!g.HasEdge(e.from, e.to)) {
      throw InvalidArgument("sensor on (" + std::to_string(e.from) + ", " +
                            std::to_string(e.to) + ") which is not an edge");
    }
  }
  return plan;
}

InterdictionPlan UncheckedPlan(InterdictionMode mode, std::vector<Edge> sensors,
                               std::vector<NodeId> nodes,
                               EfficiencyMap efficiency) {
  InterdictionPlan plan;
  plan.mode_ = mode;
  plan.sensors_ = std::move(sensors);
  plan.nodes_ = std::move(nodes);
  plan.efficiency_ = std::move(efficiency);
  SortUnique(plan.sensors_);
  SortUnique(plan.nodes_);
  return plan;
}

bool FitsBudget(const InterdictionPlan& plan, const Budget& budget) {
  return static_cast<long long>(plan.cost()) <= budget.limit;
}

}  // namespace ume
