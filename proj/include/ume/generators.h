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

// Planar graph families for fixtures and sweeps. All generators are
// deterministic in their seed.

#ifndef UME_GENERATORS_H_
#define UME_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ume/graph.h"

namespace ume {

// Maximal planar graph on n >= 3 nodes (3n - 6 edges): incremental face
// insertion followed by `flips` random edge flips.
UndirectedGraph RandomPlanarTriangulation(NodeId n, std::uint64_t seed,
                                          int flips = -1);

// Removes `count` distinct edges chosen uniformly.
UndirectedGraph DeleteRandomEdges(const UndirectedGraph& g, std::size_t count,
                                  std::uint64_t seed);

UndirectedGraph GridGraph(NodeId rows, NodeId cols);
// Hub 0 joined to a cycle 1..spokes.
UndirectedGraph WheelGraph(NodeId spokes);
UndirectedGraph CompleteGraph(NodeId n);
UndirectedGraph StarGraph(NodeId leaves);  // center 0
UndirectedGraph PathGraph(NodeId n);
UndirectedGraph CycleGraph(NodeId n);
UndirectedGraph EdgelessGraph(NodeId n);
// Cycle 0..n-1 plus a random non-crossing set of chords.
UndirectedGraph RandomOuterplanar(NodeId n, std::uint64_t seed,
                                  double chord_keep = 0.6);
UndirectedGraph DisjointUnion(const UndirectedGraph& a, const UndirectedGraph& b);

struct SuiteGraph {
  std::string name;
  UndirectedGraph graph;
};

// The committed planar suite (data/suite/<name>.txt): grids, wheels, K4,
// outerplanar graphs, random triangulations with and without deletions up
// to 30 nodes, and small corner cases.
std::vector<SuiteGraph> PlanarSuite();

}  // namespace ume

#endif  // UME_GENERATORS_H_
