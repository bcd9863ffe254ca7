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

#ifndef UME_INTERDICTION_H_
#define UME_INTERDICTION_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ume/graph.h"

namespace ume {

enum class InterdictionMode { kNode, kEdge };

enum class BudgetUnit { kNodes, kEdges };

std::string ToString(InterdictionMode mode);
std::string ToString(BudgetUnit unit);

// Cardinality budget: |Q| <= limit in node mode, ||r|| <= limit in edge mode.
struct Budget {
  int limit = 0;
  BudgetUnit unit = BudgetUnit::kNodes;
  friend bool operator==(const Budget&, const Budget&) = default;
};

// Detection probability d_uv per directed edge. Direction-specific:
// at(u, v) and at(v, u) are independent entries.
class EfficiencyMap {
 public:
  explicit EfficiencyMap(double default_value = 1.0);

  double default_value() const { return default_value_; }
  double at(NodeId from, NodeId to) const;
  // Throws InvalidArgument unless d is in [0, 1].
  void Set(NodeId from, NodeId to, double d);
  const std::map<Edge, double>& entries() const { return entries_; }

  friend bool operator==(const EfficiencyMap&, const EfficiencyMap&) = default;

 private:
  double default_value_;
  std::map<Edge, double> entries_;
};

// Sensor indicator r (stored as the sorted set of edges with r_uv = 1)
// together with the efficiencies it is evaluated under.
class InterdictionPlan {
 public:
  InterdictionPlan() = default;

  InterdictionMode mode() const { return mode_; }
  std::span<const Edge> sensors() const { return sensors_; }
  // Interdicted node set Q; empty in edge mode.
  std::span<const NodeId> nodes() const { return nodes_; }
  const EfficiencyMap& efficiency() const { return efficiency_; }

  bool HasSensor(NodeId from, NodeId to) const;
  // Budget consumption: |Q| in node mode, number of sensors in edge mode.
  std::size_t cost() const {
    return mode_ == InterdictionMode::kNode ? nodes_.size() : sensors_.size();
  }

  friend InterdictionPlan PlanFromNodes(const DiGraph&, std::span<const NodeId>,
                                        EfficiencyMap);
  friend InterdictionPlan PlanFromEdges(const DiGraph&, std::span<const Edge>,
                                        EfficiencyMap);
  friend InterdictionPlan UncheckedPlan(InterdictionMode, std::vector<Edge>,
                                        std::vector<NodeId>, EfficiencyMap);

 private:
  InterdictionMode mode_ = InterdictionMode::kEdge;
  std::vector<Edge> sensors_;
  std::vector<NodeId> nodes_;
  EfficiencyMap efficiency_;
};

// Node interdiction: r_ij = 1 exactly for (i, j) in E with i in Q.
// Throws UnknownNodeError when Q names a node outside the graph.
InterdictionPlan PlanFromNodes(const DiGraph& g, std::span<const NodeId> nodes,
                               EfficiencyMap efficiency);

// Edge interdiction. Throws InvalidArgument for a sensor on a non-edge.
InterdictionPlan PlanFromEdges(const DiGraph& g, std::span<const Edge> sensors,
                               EfficiencyMap efficiency);

// Sensors given directly, no graph check. Used where the chain itself is the
// only structure (evaluating a bare EvaderChain).
InterdictionPlan UncheckedPlan(InterdictionMode mode, std::vector<Edge> sensors,
                               std::vector<NodeId> nodes,
                               EfficiencyMap efficiency);

bool FitsBudget(const InterdictionPlan& plan, const Budget& budget);

}  // namespace ume

#endif  // UME_INTERDICTION_H_
