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


#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "test_support.h"
#include "ume/errors.h"
#include "ume/generators.h"
#include "ume/graph.h"

namespace ume {
namespace {

TEST_CASE("undirected edge list parses with comments and blank lines") {
  const UndirectedGraph g = ParseUndirectedEdgeList(
      "# triangle\n3\n\n0 1\n2 1  # reversed is fine\n0 2\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.HasEdge(1, 2));
  CHECK(g.HasEdge(2, 1));
  CHECK(g.Degree(0) == 2);
}

TEST_CASE("edge list errors carry line numbers") {
  SUBCASE("duplicate in either orientation") {
    try {
      ParseUndirectedEdgeList("3\n0 1\n1 0\n");
      FAIL("expected DuplicateEdgeError");
    } catch (const DuplicateEdgeError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("dangling endpoint") {
    try {
      ParseUndirectedEdgeList("2\n0 1\n1 5\n");
      FAIL("expected DanglingEndpointError");
    } catch (const DanglingEndpointError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("garbage") {
    CHECK_THROWS_AS(ParseUndirectedEdgeList("2\n0 x\n"), ParseError);
    CHECK_THROWS_AS(ParseUndirectedEdgeList("0 1\n"), ParseError);
  }
  SUBCASE("self-loop") {
    CHECK_THROWS_AS(ParseUndirectedEdgeList("2\n1 1\n"), Error);
  }
}

TEST_CASE("directed edge list keeps direction and weight") {
  const DiGraph g = ParseDirectedEdgeList("3\n0 1 0.5\n1 0\n1 2 2\n");
  CHECK(g.edge_count() == 3);
  CHECK(g.HasEdge(0, 1));
  CHECK(g.HasEdge(1, 0));
  CHECK_FALSE(g.HasEdge(2, 1));
  CHECK(g.weight(*g.EdgeIndex(0, 1)) == 0.5);
  CHECK(g.weight(*g.EdgeIndex(1, 0)) == 1.0);
  const auto out = g.OutNeighbors(1);
  CHECK(std::vector<NodeId>(out.begin(), out.end()) == std::vector<NodeId>{0, 2});
  CHECK_THROWS_AS(ParseDirectedEdgeList("2\n0 1\n0 1\n"), DuplicateEdgeError);
  CHECK_THROWS_AS(DiGraph(2, {{0, 1, -1.0}}), InvalidArgument);
  CHECK_THROWS_AS(DiGraph(2, {{1, 1, 1.0}}), InvalidArgument);
  CHECK_NOTHROW(DiGraph(2, {{1, 1, 1.0}}, SelfLoops::kAllow));
}

TEST_CASE("DiGraph edges are sorted and out-ranges contiguous") {
  const DiGraph g(4, {{3, 0, 1}, {0, 2, 1}, {0, 1, 1}, {2, 3, 1}});
  std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}, {3, 0}};
  CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expected);
  CHECK(g.OutEdgeRange(0) == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(g.OutEdgeRange(1) == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("ToDirected adds both orientations") {
  const DiGraph d = ToDirected(CompleteGraph(3));
  CHECK(d.edge_count() == 6);
  for (NodeId u = 0; u < 3; ++u) {
    for (NodeId v = 0; v < 3; ++v) CHECK(d.HasEdge(u, v) == (u != v));
  }
}

TEST_CASE("edge list text round-trips") {
  for (const SuiteGraph& s : PlanarSuite()) {
    CAPTURE(s.name);
    CHECK(ParseUndirectedEdgeList(ToEdgeListText(s.graph)) == s.graph);
    std::ostringstream out;
    WriteEdgeList(out, ToDirected(s.graph));
    CHECK(ParseDirectedEdgeList(out.str()) == ToDirected(s.graph));
  }
}

TEST_CASE("committed suite files match the generators") {
  for (const SuiteGraph& s : PlanarSuite()) {
    CAPTURE(s.name);
    const std::string path = testing::DataPath("suite/" + s.name + ".txt");
    REQUIRE(std::filesystem::exists(path));
    CHECK(LoadUndirectedEdgeList(path) == s.graph);
  }
}

TEST_CASE("triangulations are maximal planar") {
  for (NodeId n : {3, 4, 5, 10, 30}) {
    CHECK(RandomPlanarTriangulation(n, 7).edge_count() ==
          static_cast<std::size_t>(3 * n - 6));
  }
  // Fixed fixture: the committed tri10 has 3 * 10 - 6 edges.
  CHECK(LoadUndirectedEdgeList(testing::DataPath("suite/tri10.txt")).edge_count() == 24);
  CHECK(RandomPlanarTriangulation(12, 5) == RandomPlanarTriangulation(12, 5));
}

TEST_CASE("family sizes") {
  CHECK(GridGraph(3, 4).edge_count() == 17);
  CHECK(WheelGraph(8).edge_count() == 16);
  CHECK(StarGraph(5).edge_count() == 5);
  CHECK(CycleGraph(7).edge_count() == 7);
  CHECK(CompleteGraph(4).edge_count() == 6);
  CHECK(DisjointUnion(CompleteGraph(4), PathGraph(3)).node_count() == 7);
  const UndirectedGraph op = RandomOuterplanar(12, 3, 1.0);
  CHECK(op.edge_count() == static_cast<std::size_t>(2 * 12 - 3));
  CHECK(DeleteRandomEdges(CompleteGraph(5), 4, 1).edge_count() == 6);
}

}  // namespace
}  // namespace ume
