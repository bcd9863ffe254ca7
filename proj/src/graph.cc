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

#include "ume/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ume/decimal.h"
#include "ume/errors.h"

namespace ume {
namespace {

std::string EdgeText(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void CheckEndpoint(NodeId node_count, NodeId u, std::size_t line) {
  if (u < 0 || u >= node_count) {
    throw DanglingEndpointError(line, "endpoint " + std::to_string(u) +
                                          " outside 0.." +
                                          std::to_string(node_count - 1));
  }
}

// Builds CSR offsets for edges sorted by `from`.
std::vector<std::size_t> BuildOffsets(NodeId node_count,
                                      std::span<const Edge> sorted) {
  std::vector<std::size_t> offsets(static_cast<std::size_t>(node_count) + 1, 0);
  for (const Edge& e : sorted) ++offsets[e.from + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return offsets;
}

struct EdgeLine {
  std::size_t line;
  NodeId u;
  NodeId v;
  double weight;
};

struct ParsedEdgeList {
  NodeId node_count = 0;
  std::vector<EdgeLine> edges;
};

std::optional<long long> ParseInteger(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> SplitTokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == ',')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != ',') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

ParsedEdgeList ParseEdgeListText(std::string_view text) {
  ParsedEdgeList parsed;
  bool have_count = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = SplitTokens(line);
    if (tokens.empty()) continue;
    if (!have_count) {
      auto n = tokens.size() == 1 ? ParseInteger(tokens[0]) : std::nullopt;
      if (!n || *n < 0 || *n > INT32_MAX) {
        throw ParseError(line_no, "expected a non-negative node count");
      }
      parsed.node_count = static_cast<NodeId>(*n);
      have_count = true;
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected 'u v [weight]'");
    }
    auto u = ParseInteger(tokens[0]);
    auto v = ParseInteger(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "endpoints must be integers");
    double weight = 1.0;
    if (tokens.size() == 3) {
      auto w = ParseDecimal(tokens[2]);
      if (!w) throw ParseError(line_no, "malformed weight");
      if (*w < 0.0) throw ParseError(line_no, "negative weight");
      weight = *w;
    }
    if (*u < 0 || *u >= parsed.node_count || *v < 0 ||
        *v >= parsed.node_count) {
      throw DanglingEndpointError(
          line_no, "edge " + EdgeText(static_cast<NodeId>(*u),
                                      static_cast<NodeId>(*v)) +
                       " has an endpoint outside 0.." +
                       std::to_string(parsed.node_count - 1));
    }
    parsed.edges.push_back({line_no, static_cast<NodeId>(*u),
                            static_cast<NodeId>(*v), weight});
  }
  if (!have_count) throw ParseError(0, "missing node count line");
  return parsed;
}

}  // namespace

DiGraph::DiGraph(NodeId node_count, std::vector<WeightedEdge> edges,
                 SelfLoops self_loops)
    : node_count_(node_count), self_loops_(self_loops) {
  if (node_count < 0) throw InvalidArgument("negative node count");
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  edges_.reserve(edges.size());
  weights_.reserve(edges.size());
  for (const WeightedEdge& e : edges) {
    CheckEndpoint(node_count, e.from, 0);
    CheckEndpoint(node_count, e.to, 0);
    if (e.from == e.to && self_loops == SelfLoops::kForbid) {
      throw InvalidArgument("self-loop " + EdgeText(e.from, e.to));
    }
    if (!(e.weight >= 0.0)) {
      throw InvalidArgument("negative weight on " + EdgeText(e.from, e.to));
    }
    Edge key{e.from, e.to};
    if (!edges_.empty() && edges_.back() == key) {
      throw DuplicateEdgeError(0, "duplicate edge " + EdgeText(e.from, e.to));
    }
    edges_.push_back(key);
    weights_.push_back(e.weight);
  }
  offsets_ = BuildOffsets(node_count, edges_);
  heads_.reserve(edges_.size());
  for (const Edge& e : edges_) heads_.push_back(e.to);
}

std::optional<std::size_t> DiGraph::EdgeIndex(NodeId from, NodeId to) const {
  if (from < 0 || from >= node_count_) return std::nullopt;
  auto begin = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[from]);
  auto end = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[from + 1]);
  auto it = std::lower_bound(begin, end, to);
  if (it == end || *it != to) return std::nullopt;
  return static_cast<std::size_t>(it - heads_.begin());
}

std::span<const NodeId> DiGraph::OutNeighbors(NodeId u) const {
  return std::span<const NodeId>(heads_).subspan(
      offsets_[u], offsets_[u + 1] - offsets_[u]);
}

void DiGraph::set_labels(std::map<NodeId, std::string> labels) {
  for (const auto& [node, label] : labels) CheckEndpoint(node_count_, node, 0);
  labels_ = std::move(labels);
}

UndirectedGraph::UndirectedGraph(NodeId node_count,
                                 const std::vector<Edge>& edges)
    : node_count_(node_count) {
  if (node_count < 0) throw InvalidArgument("negative node count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    CheckEndpoint(node_count, e.from, 0);
    CheckEndpoint(node_count, e.to, 0);
    if (e.from == e.to) {
      throw InvalidArgument("self-loop " + EdgeText(e.from, e.to));
    }
    edges_.push_back({std::min(e.from, e.to), std::max(e.from, e.to)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw DuplicateEdgeError(0, "duplicate edge " + EdgeText(dup->from, dup->to));
  }
  std::vector<std::size_t> degree(static_cast<std::size_t>(node_count) + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[e.from + 1];
    ++degree[e.to + 1];
  }
  std::partial_sum(degree.begin(), degree.end(), degree.begin());
  offsets_ = degree;
  adjacency_.assign(2 * edges_.size(), 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.from]++] = e.to;
    adjacency_[fill[e.to]++] = e.from;
  }
  for (NodeId u = 0; u < node_count; ++u) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]));
  }
}

std::span<const NodeId> UndirectedGraph::Neighbors(NodeId u) const {
  return std::span<const NodeId>(adjacency_).subspan(
      offsets_[u], offsets_[u + 1] - offsets_[u]);
}

bool UndirectedGraph::HasEdge(NodeId u, NodeId v) const {
  if (u < 0 || u >= node_count_ || v < 0 || v >= node_count_) return false;
  auto nbrs = Neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

DiGraph ToDirected(const UndirectedGraph& g) {
  std::vector<WeightedEdge> edges;
  edges.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back({e.from, e.to, 1.0});
    edges.push_back({e.to, e.from, 1.0});
  }
  return DiGraph(g.node_count(), std::move(edges));
}

UndirectedGraph ParseUndirectedEdgeList(std::string_view text) {
  ParsedEdgeList parsed = ParseEdgeListText(text);
  std::vector<std::pair<Edge, std::size_t>> keyed;
  keyed.reserve(parsed.edges.size());
  for (const EdgeLine& e : parsed.edges) {
    if (e.u == e.v) throw ParseError(e.line, "self-loop " + EdgeText(e.u, e.v));
    keyed.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, e.line});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      std::size_t line = std::max(keyed[i].second, keyed[i - 1].second);
      throw DuplicateEdgeError(
          line, "duplicate edge " +
                    EdgeText(keyed[i].first.from, keyed[i].first.to));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(keyed.size());
  for (const auto& [edge, line] : keyed) edges.push_back(edge);
  return UndirectedGraph(parsed.node_count, edges);
}

DiGraph ParseDirectedEdgeList(std::string_view text, SelfLoops self_loops) {
  ParsedEdgeList parsed = ParseEdgeListText(text);
  std::map<Edge, std::size_t> seen;
  std::vector<WeightedEdge> edges;
  edges.reserve(parsed.edges.size());
  for (const EdgeLine& e : parsed.edges) {
    if (e.u == e.v && self_loops == SelfLoops::kForbid) {
      throw ParseError(e.line, "self-loop " + EdgeText(e.u, e.v));
    }
    if (!seen.emplace(Edge{e.u, e.v}, e.line).second) {
      throw DuplicateEdgeError(e.line, "duplicate edge " + EdgeText(e.u, e.v));
    }
    edges.push_back({e.u, e.v, e.weight});
  }
  return DiGraph(parsed.node_count, std::move(edges), self_loops);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

UndirectedGraph LoadUndirectedEdgeList(const std::string& path) {
  return ParseUndirectedEdgeList(ReadTextFile(path));
}

DiGraph LoadDirectedEdgeList(const std::string& path) {
  return ParseDirectedEdgeList(ReadTextFile(path));
}

void WriteEdgeList(std::ostream& out, const UndirectedGraph& g) {
  out << g.node_count() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

void WriteEdgeList(std::ostream& out, const DiGraph& g) {
  out << g.node_count() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    out << e.from << ' ' << e.to;
    if (g.weight(i) != 1.0) out << ' ' << FormatDecimal(g.weight(i));
    out << '\n';
  }
}

std::string ToEdgeListText(const UndirectedGraph& g) {
  std::ostringstream out;
  WriteEdgeList(out, g);
  return out.str();
}

}  // namespace ume
