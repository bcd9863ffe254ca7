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

#ifndef UME_INSTANCE_H_
#define UME_INSTANCE_H_

#include <span>
#include <vector>

#include "ume/evader.h"
#include "ume/graph.h"
#include "ume/interdiction.h"

namespace ume {

// The unit of solving and serialization.
struct UmeInstance {
  DiGraph graph;
  EvaderEnsemble evaders;
  EfficiencyMap efficiency;
  Budget budget;
  InterdictionMode mode = InterdictionMode::kNode;
};

// Throws InvalidArgument naming the first problem: ensemble violations,
// dimension != node count, transitions off the graph, a self-loop edge no
// evader uses, or a budget unit that does not match the mode.
void ValidateInstance(const UmeInstance& inst);

// Sensor sites. Node mode: every node except those that are the target of every evader
// (interdicting a killing state does nothing). Edge mode: edges with d > 0.
// Node candidates are in increasing order, edge candidates lexicographic.
std::vector<NodeId> NodeCandidates(const UmeInstance& inst);
std::vector<Edge> EdgeCandidates(const UmeInstance& inst);
std::size_t CandidateCount(const UmeInstance& inst);

// Plan that interdicts the candidates with the given indices into
// NodeCandidates / EdgeCandidates.
InterdictionPlan PlanForCandidates(const UmeInstance& inst,
                                   std::span<const int> candidate_indices);

InterdictionPlan EmptyPlan(const UmeInstance& inst);

double Evaluate(const UmeInstance& inst, const InterdictionPlan& plan);

}  // namespace ume

#endif  // UME_INSTANCE_H_
