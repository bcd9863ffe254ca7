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

// Planar Vertex Cover -> 2-evader node-interdiction instance.
//
// A 4-coloring of G' encodes each non-singleton node as two bits, one per
// evader: bit i = 0 makes the node a source of evader i, bit i = 1 makes it
// a penultimate node of evader i.
//
//   color   bits  classes
//   white   00    S1 & S2
//   red     01    S1 & P2
//   green   10    P1 & S2
//   black   11    P1 & P2
//
// Evader i starts uniformly on S_i, steps to an adjacent P_i node, then to
// the added target t. Adjacent nodes differ in at least one bit, so every
// edge of G' is traversed by some evader, and <J> = 1 exactly when the
// interdicted set is a vertex cover.

#ifndef UME_REDUCTION_H_
#define UME_REDUCTION_H_

#include <array>
#include <vector>

#include "ume/coloring.h"
#include "ume/graph.h"
#include "ume/instance.h"

namespace ume {

inline constexpr int kReductionEvaders = 2;

struct UmeGraph {
  DiGraph graph;
  NodeId target = 0;
};

// V = V' + {t} with t = |V'|; both directions of each edge of G' plus (u, t)
// for every non-singleton u.
UmeGraph BuildUmeGraph(const UndirectedGraph& gprime);

struct ReductionArtifacts {
  UndirectedGraph gprime;
  int bprime = 0;
  ColorAssignment coloring;
  std::array<std::vector<NodeId>, kReductionEvaders> sources;      // S1, S2
  std::array<std::vector<NodeId>, kReductionEvaders> penultimates;  // P1, P2
  // z_u for u in S_i: number of P_i neighbors.
  std::array<std::vector<std::pair<NodeId, int>>, kReductionEvaders>
      normalizers;
  NodeId target = 0;
  bool pathological = false;  // every node of G' is a singleton
  UmeInstance instance;
};

// Evaders (w = 1/2 each) for a proper coloring. Sets budget 0; reduce_pvc
// fills it in. Throws ImproperColoringError (including colorings that do
// not cover every node) and InvalidArgument for a graph without nodes.
ReductionArtifacts BuildEvaders(const UndirectedGraph& gprime,
                                const ColorAssignment& f);

// Full pipeline: FourColor -> BuildUmeGraph -> BuildEvaders, budget B = B'.
ReductionArtifacts ReducePvc(const UndirectedGraph& gprime, int bprime,
                             const ColoringOptions& coloring = {});

struct EdgeTraversal {
  Edge edge;                 // original edge of G', from < to
  std::vector<int> evaders;  // 0-based evader indices, increasing
};

// Evaders that cross each original edge (either direction) with positive
// probability under the empty plan. Empty for the pathological instance.
std::vector<EdgeTraversal> EdgeTraversalReport(const ReductionArtifacts& art);

}  // namespace ume

#endif  // UME_REDUCTION_H_
