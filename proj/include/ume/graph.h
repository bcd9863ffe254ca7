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

// Graph representations shared by every module. Nodes are dense indices
// 0..n-1; both graph types are immutable once constructed.

#ifndef UME_GRAPH_H_
#define UME_GRAPH_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ume {

using NodeId = std::int32_t;

// Ordered pair (from, to). For undirected graphs from < to.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  auto operator<=>(const Edge&) const = default;
};

struct WeightedEdge {
  NodeId from = 0;
  NodeId to = 0;
  double weight = 1.0;
};

enum class SelfLoops { kForbid, kAllow };

class DiGraph {
 public:
  DiGraph() = default;

  // Validates endpoints, duplicates, negative weights and (unless allowed)
  // self-loops. Throws DanglingEndpointError, DuplicateEdgeError or
  // InvalidArgument.
  DiGraph(NodeId node_count, std::vector<WeightedEdge> edges,
          SelfLoops self_loops = SelfLoops::kForbid);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted lexicographically by (from, to).
  std::span<const Edge> edges() const { return edges_; }
  double weight(std::size_t edge_index) const { return weights_[edge_index]; }

  std::optional<std::size_t> EdgeIndex(NodeId from, NodeId to) const;
  bool HasEdge(NodeId from, NodeId to) const {
    return EdgeIndex(from, to).has_value();
  }

  // Out-neighbors of u in increasing order.
  std::span<const NodeId> OutNeighbors(NodeId u) const;
  // Edge indices of u's out-edges; contiguous because edges are sorted.
  std::pair<std::size_t, std::size_t> OutEdgeRange(NodeId u) const {
    return {offsets_[u], offsets_[u + 1]};
  }

  bool allows_self_loops() const { return self_loops_ == SelfLoops::kAllow; }

  const std::map<NodeId, std::string>& labels() const { return labels_; }
  void set_labels(std::map<NodeId, std::string> labels);

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_ &&
           a.weights_ == b.weights_;
  }

 private:
  NodeId node_count_ = 0;
  SelfLoops self_loops_ = SelfLoops::kForbid;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> heads_;
  std::map<NodeId, std::string> labels_;
};

// Simple undirected graph; edges are stored normalized with from < to.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  // Throws InvalidArgument on self-loops, DuplicateEdgeError on parallel
  // edges (in either orientation), DanglingEndpointError on bad endpoints.
  UndirectedGraph(NodeId node_count, const std::vector<Edge>& edges);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> Neighbors(NodeId u) const;
  std::size_t Degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
  bool HasEdge(NodeId u, NodeId v) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

// Each {u, v} yields (u, v) and (v, u) with weight 1.
DiGraph ToDirected(const UndirectedGraph& g);

// Edge-list text: first significant line is the node count, then one
// "u v [weight]" line per edge. '#' starts a comment. Errors carry the
// 1-based line number.
UndirectedGraph ParseUndirectedEdgeList(std::string_view text);
DiGraph ParseDirectedEdgeList(std::string_view text,
                              SelfLoops self_loops = SelfLoops::kForbid);
UndirectedGraph LoadUndirectedEdgeList(const std::string& path);
DiGraph LoadDirectedEdgeList(const std::string& path);

void WriteEdgeList(std::ostream& out, const UndirectedGraph& g);
void WriteEdgeList(std::ostream& out, const DiGraph& g);
std::string ToEdgeListText(const UndirectedGraph& g);

std::string ReadTextFile(const std::string& path);

}  // namespace ume

#endif  // UME_GRAPH_H_
