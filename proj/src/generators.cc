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

#include "ume/generators.h"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>

#include "ume/errors.h"

namespace ume {
namespace {

using Face = std::array<NodeId, 3>;  // counter-clockwise

// Uniform integer in [0, bound) without relying on the distribution
// objects, whose output differs between standard libraries.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Edge Normalized(NodeId a, NodeId b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

UndirectedGraph RandomPlanarTriangulation(NodeId n, std::uint64_t seed,
                                          int flips) {
  if (n < 3) throw InvalidArgument("a triangulation needs at least 3 nodes");
  if (flips < 0) flips = 2 * n;
  std::mt19937_64 rng(seed);
  // Both sides of the initial triangle are faces of the sphere embedding.
  std::vector<Face> faces{{0, 1, 2}, {0, 2, 1}};
  for (NodeId k = 3; k < n; ++k) {
    const std::size_t f = Below(rng, faces.size());
    const auto [a, b, c] = faces[f];
    faces[f] = {a, b, k};
    faces.push_back({b, c, k});
    faces.push_back({c, a, k});
  }

  std::set<Edge> edges;
  for (const Face& f : faces) {
    for (int i = 0; i < 3; ++i) edges.insert(Normalized(f[i], f[(i + 1) % 3]));
  }
  for (int step = 0; step < flips && n > 4; ++step) {
    // Directed edge a -> b of face f1; its twin b -> a lives in face f2.
    const std::size_t f1 = Below(rng, faces.size());
    const int side = static_cast<int>(Below(rng, 3));
    const NodeId a = faces[f1][side];
    const NodeId b = faces[f1][(side + 1) % 3];
    const NodeId c = faces[f1][(side + 2) % 3];
    std::size_t f2 = faces.size();
    NodeId d = -1;
    for (std::size_t g = 0; g < faces.size() && f2 == faces.size(); ++g) {
      for (int i = 0; i < 3; ++i) {
        if (faces[g][i] == b && faces[g][(i + 1) % 3] == a) {
          f2 = g;
          d = faces[g][(i + 2) % 3];
          break;
        }
      }
    }
    if (f2 == faces.size() || c == d || edges.count(Normalized(c, d))) continue;
    edges.erase(Normalized(a, b));
    edges.insert(Normalized(c, d));
    faces[f1] = {c, a, d};
    faces[f2] = {d, b, c};
  }
  return UndirectedGraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

UndirectedGraph DeleteRandomEdges(const UndirectedGraph& g, std::size_t count,
                                  std::uint64_t seed) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::mt19937_64 rng(seed);
  count = std::min(count, edges.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = Below(rng, edges.size());
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return UndirectedGraph(g.node_count(), edges);
}

UndirectedGraph GridGraph(NodeId rows, NodeId cols) {
  std::vector<Edge> edges;
  auto id = [cols](NodeId r, NodeId c) { return r * cols + c; };
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return UndirectedGraph(rows * cols, edges);
}

UndirectedGraph WheelGraph(NodeId spokes) {
  if (spokes < 3) throw InvalidArgument("a wheel needs at least 3 spokes");
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= spokes; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, i == spokes ? 1 : i + 1});
  }
  return UndirectedGraph(spokes + 1, edges);
}

UndirectedGraph CompleteGraph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return UndirectedGraph(n, edges);
}

UndirectedGraph StarGraph(NodeId leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return UndirectedGraph(leaves + 1, edges);
}

UndirectedGraph PathGraph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return UndirectedGraph(n, edges);
}

UndirectedGraph CycleGraph(NodeId n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, edges);
}

UndirectedGraph EdgelessGraph(NodeId n) { return UndirectedGraph(n, {}); }

UndirectedGraph RandomOuterplanar(NodeId n, std::uint64_t seed,
                                  double chord_keep) {
  if (n < 3) throw InvalidArgument("an outerplanar cycle needs 3 nodes");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back(Normalized(i, (i + 1) % n));
  // Random triangulation of the polygon lo..hi by picking an apex; chords
  // never cross because each recursion stays inside its sub-polygon.
  std::function<void(NodeId, NodeId)> split = [&](NodeId lo, NodeId hi) {
    if (hi - lo < 2) return;
    const NodeId apex = lo + 1 + static_cast<NodeId>(Below(rng, hi - lo - 1));
    const std::uint64_t keep = static_cast<std::uint64_t>(chord_keep * 1000);
    if (apex - lo > 1 && Below(rng, 1000) < keep) edges.push_back({lo, apex});
    if (hi - apex > 1 && Below(rng, 1000) < keep) edges.push_back({apex, hi});
    split(lo, apex);
    split(apex, hi);
  };
  split(0, n - 1);
  return UndirectedGraph(n, edges);
}

UndirectedGraph DisjointUnion(const UndirectedGraph& a,
                              const UndirectedGraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) {
    edges.push_back({e.from + a.node_count(), e.to + a.node_count()});
  }
  return UndirectedGraph(a.node_count() + b.node_count(), edges);
}

std::vector<SuiteGraph> PlanarSuite() {
  std::vector<SuiteGraph> suite;
  auto add = [&suite](std::string name, UndirectedGraph g) {
    suite.push_back({std::move(name), std::move(g)});
  };
  add("singleton1", EdgelessGraph(1));
  add("singletons3", EdgelessGraph(3));
  add("k2", PathGraph(2));
  add("k3", CompleteGraph(3));
  add("k4", CompleteGraph(4));
  add("path5", PathGraph(5));
  add("cycle7", CycleGraph(7));
  add("star5", StarGraph(5));
  add("star_plus_singletons", DisjointUnion(StarGraph(4), EdgelessGraph(2)));
  add("k4_plus_path", DisjointUnion(CompleteGraph(4), PathGraph(3)));
  add("grid2x3", GridGraph(2, 3));
  add("grid3x3", GridGraph(3, 3));
  add("grid3x4", GridGraph(3, 4));
  add("grid5x6", GridGraph(5, 6));
  add("wheel5", WheelGraph(5));
  add("wheel8", WheelGraph(8));
  add("wheel11", WheelGraph(11));
  add("wheel20", WheelGraph(20));
  add("outerplanar8", RandomOuterplanar(8, 11));
  add("outerplanar10", RandomOuterplanar(10, 12));
  add("outerplanar12", RandomOuterplanar(12, 13, 1.0));
  add("outerplanar24", RandomOuterplanar(24, 14));
  for (NodeId n : {6, 8, 10, 12}) {
    const std::uint64_t seed = 100 + static_cast<std::uint64_t>(n);
    UndirectedGraph tri = RandomPlanarTriangulation(n, seed);
    add("tri" + std::to_string(n), tri);
    add("tri" + std::to_string(n) + "_del",
        DeleteRandomEdges(tri, static_cast<std::size_t>(n / 2), seed + 1));
  }
  for (NodeId n : {20, 25, 30}) {
    const std::uint64_t seed = 200 + static_cast<std::uint64_t>(n);
    add("tri" + std::to_string(n), RandomPlanarTriangulation(n, seed));
  }
  return suite;
}

}  // namespace ume
