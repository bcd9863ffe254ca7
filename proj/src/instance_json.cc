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

#include "ume/instance_json.h"

#include "ume/decimal.h"
#include "ume/errors.h"

namespace ume {
namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ParseError(0, "instance-json " + where + ": " + what);
}

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) Fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double Probability(const Json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    if (auto d = ParseDecimal(value.get<std::string>())) return *d;
  }
  Fail(where, "expected a decimal string or number");
}

long long Integer(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) Fail(where, "expected an integer");
  return value.get<long long>();
}

NodeId Node(const Json& value, NodeId n, const std::string& where) {
  const long long u = Integer(value, where);
  if (u < 0 || u >= n) {
    Fail(where, "node " + std::to_string(u) + " outside 0.." +
                    std::to_string(n - 1));
  }
  return static_cast<NodeId>(u);
}

const Json& Array(const Json& value, const std::string& where) {
  if (!value.is_array()) Fail(where, "expected an array");
  return value;
}

Json NodeList(std::span<const NodeId> nodes) {
  Json out = Json::array();
  for (NodeId u : nodes) out.push_back(u);
  return out;
}

}  // namespace

Json InstanceToJson(const UmeInstance& inst) {
  Json doc;
  doc["version"] = kInstanceVersion;

  Json graph;
  graph["node_count"] = inst.graph.node_count();
  Json edges = Json::array();
  for (std::size_t i = 0; i < inst.graph.edge_count(); ++i) {
    const Edge& e = inst.graph.edges()[i];
    Json entry = Json::array({e.from, e.to});
    if (inst.graph.weight(i) != 1.0) {
      entry.push_back(FormatDecimal(inst.graph.weight(i)));
    }
    edges.push_back(std::move(entry));
  }
  graph["edges"] = std::move(edges);
  if (!inst.graph.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [node, label] : inst.graph.labels()) {
      labels[std::to_string(node)] = label;
    }
    graph["labels"] = std::move(labels);
  }
  doc["graph"] = std::move(graph);

  Json evaders = Json::array();
  for (const EvaderChain& chain : inst.evaders.chains) {
    Json ev;
    ev["weight"] = FormatDecimal(chain.weight);
    ev["target"] = chain.target;
    Json source = Json::array();
    for (NodeId u = 0; u < chain.dimension(); ++u) {
      if (chain.source(u) != 0.0) {
        source.push_back(Json::array({u, FormatDecimal(chain.source(u))}));
      }
    }
    ev["source"] = std::move(source);
    Json rows = Json::array();
    for (NodeId u = 0; u < chain.transition.rows(); ++u) {
      Json row = Json::array();
      for (NodeId v = 0; v < chain.transition.cols(); ++v) {
        if (chain.transition(u, v) != 0.0) {
          row.push_back(Json::array({v, FormatDecimal(chain.transition(u, v))}));
        }
      }
      if (!row.empty()) rows.push_back(Json::array({u, std::move(row)}));
    }
    ev["transitions"] = std::move(rows);
    evaders.push_back(std::move(ev));
  }
  doc["evaders"] = std::move(evaders);

  Json efficiency;
  efficiency["default"] = FormatDecimal(inst.efficiency.default_value());
  Json entries = Json::array();
  for (const auto& [edge, d] : inst.efficiency.entries()) {
    entries.push_back(Json::array({edge.from, edge.to, FormatDecimal(d)}));
  }
  efficiency["entries"] = std::move(entries);
  doc["efficiency"] = std::move(efficiency);

  doc["budget"] = {{"limit", inst.budget.limit},
                   {"unit", ToString(inst.budget.unit)}};
  doc["mode"] = ToString(inst.mode);
  return doc;
}

UmeInstance InstanceFromJson(const Json& doc) {
  const Json& version = Field(doc, "version", "document");
  if (!version.is_string() || version.get<std::string>() != kInstanceVersion) {
    Fail("version", std::string("expected \"") + kInstanceVersion + "\"");
  }

  const Json& graph = Field(doc, "graph", "document");
  const long long count = Integer(Field(graph, "node_count", "graph"),
                                  "graph.node_count");
  if (count < 0 || count > INT32_MAX) Fail("graph.node_count", "out of range");
  const NodeId n = static_cast<NodeId>(count);

  std::vector<WeightedEdge> edges;
  bool self_loops = false;
  const Json& edge_list = Array(Field(graph, "edges", "graph"), "graph.edges");
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    const Json& e = Array(edge_list[i], where);
    if (e.size() != 2 && e.size() != 3) Fail(where, "expected [u, v] or [u, v, w]");
    WeightedEdge we{Node(e[0], n, where), Node(e[1], n, where), 1.0};
    if (e.size() == 3) we.weight = Probability(e[2], where);
    self_loops = self_loops || we.from == we.to;
    edges.push_back(we);
  }

  UmeInstance inst;
  try {
    inst.graph = DiGraph(n, std::move(edges),
                         self_loops ? SelfLoops::kAllow : SelfLoops::kForbid);
  } catch (const Error& e) {
    Fail("graph", e.what());
  }
  if (auto it = graph.find("labels"); it != graph.end()) {
    std::map<NodeId, std::string> labels;
    for (const auto& [key, value] : it->items()) {
      auto id = ParseDecimal(key);
      if (!id || *id != static_cast<NodeId>(*id) || !value.is_string()) {
        Fail("graph.labels", "expected {\"<node>\": \"<label>\"}");
      }
      labels[static_cast<NodeId>(*id)] = value.get<std::string>();
    }
    try {
      inst.graph.set_labels(std::move(labels));
    } catch (const Error& e) {
      Fail("graph.labels", e.what());
    }
  }

  const Json& evaders = Array(Field(doc, "evaders", "document"), "evaders");
  for (std::size_t k = 0; k < evaders.size(); ++k) {
    const std::string where = "evaders[" + std::to_string(k) + "]";
    const Json& ev = evaders[k];
    EvaderChain chain;
    chain.weight = Probability(Field(ev, "weight", where), where + ".weight");
    chain.target = Node(Field(ev, "target", where), n, where + ".target");
    chain.source = Eigen::VectorXd::Zero(n);
    chain.transition = Eigen::MatrixXd::Zero(n, n);
    for (const Json& entry : Array(Field(ev, "source", where), where + ".source")) {
      if (!entry.is_array() || entry.size() != 2) {
        Fail(where + ".source", "expected [node, probability]");
      }
      chain.source(Node(entry[0], n, where + ".source")) =
          Probability(entry[1], where + ".source");
    }
    for (const Json& row :
         Array(Field(ev, "transitions", where), where + ".transitions")) {
      if (!row.is_array() || row.size() != 2) {
        Fail(where + ".transitions", "expected [node, [[node, probability]...]]");
      }
      const NodeId u = Node(row[0], n, where + ".transitions");
      for (const Json& entry : Array(row[1], where + ".transitions")) {
        if (!entry.is_array() || entry.size() != 2) {
          Fail(where + ".transitions", "expected [node, probability]");
        }
        chain.transition(u, Node(entry[0], n, where + ".transitions")) =
            Probability(entry[1], where + ".transitions");
      }
    }
    inst.evaders.chains.push_back(std::move(chain));
  }

  const Json& efficiency = Field(doc, "efficiency", "document");
  try {
    inst.efficiency = EfficiencyMap(
        Probability(Field(efficiency, "default", "efficiency"),
                    "efficiency.default"));
    for (const Json& entry :
         Array(Field(efficiency, "entries", "efficiency"), "efficiency.entries")) {
      if (!entry.is_array() || entry.size() != 3) {
        Fail("efficiency.entries", "expected [u, v, d]");
      }
      inst.efficiency.Set(Node(entry[0], n, "efficiency.entries"),
                          Node(entry[1], n, "efficiency.entries"),
                          Probability(entry[2], "efficiency.entries"));
    }
  } catch (const InvalidArgument& e) {
    Fail("efficiency", e.what());
  }

  const Json& budget = Field(doc, "budget", "document");
  const long long limit = Integer(Field(budget, "limit", "budget"), "budget.limit");
  if (limit < 0 || limit > INT32_MAX) Fail("budget.limit", "out of range");
  inst.budget.limit = static_cast<int>(limit);
  const Json& unit = Field(budget, "unit", "budget");
  if (unit == "nodes") {
    inst.budget.unit = BudgetUnit::kNodes;
  } else if (unit == "edges") {
    inst.budget.unit = BudgetUnit::kEdges;
  } else {
    Fail("budget.unit", "expected \"nodes\" or \"edges\"");
  }
  const Json& mode = Field(doc, "mode", "document");
  if (mode == "node") {
    inst.mode = InterdictionMode::kNode;
  } else if (mode == "edge") {
    inst.mode = InterdictionMode::kEdge;
  } else {
    Fail("mode", "expected \"node\" or \"edge\"");
  }

  ValidateInstance(inst);
  return inst;
}

std::string InstanceToText(const UmeInstance& inst) {
  return InstanceToJson(inst).dump(2) + "\n";
}

UmeInstance ParseInstance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("instance-json: ") + e.what());
  }
  return InstanceFromJson(doc);
}

UmeInstance LoadInstance(const std::string& path) {
  return ParseInstance(ReadTextFile(path));
}

Json PlanToJson(const InterdictionPlan& plan) {
  Json doc;
  doc["version"] = kPlanVersion;
  doc["mode"] = ToString(plan.mode());
  if (plan.mode() == InterdictionMode::kNode) {
    doc["nodes"] = NodeList(plan.nodes());
  } else {
    Json edges = Json::array();
    for (const Edge& e : plan.sensors()) edges.push_back(Json::array({e.from, e.to}));
    doc["edges"] = std::move(edges);
  }
  return doc;
}

InterdictionPlan PlanFromJson(const Json& doc, const UmeInstance& inst) {
  const Json& mode = Field(doc, "mode", "plan");
  const NodeId n = inst.graph.node_count();
  if (mode == "node") {
    std::vector<NodeId> nodes;
    for (const Json& u : Array(Field(doc, "nodes", "plan"), "plan.nodes")) {
      nodes.push_back(Node(u, n, "plan.nodes"));
    }
    return PlanFromNodes(inst.graph, nodes, inst.efficiency);
  }
  if (mode == "edge") {
    std::vector<Edge> edges;
    for (const Json& e : Array(Field(doc, "edges", "plan"), "plan.edges")) {
      if (!e.is_array() || e.size() != 2) Fail("plan.edges", "expected [u, v]");
      edges.push_back({Node(e[0], n, "plan.edges"), Node(e[1], n, "plan.edges")});
    }
    return PlanFromEdges(inst.graph, edges, inst.efficiency);
  }
  Fail("plan.mode", "expected \"node\" or \"edge\"");
}

InterdictionPlan LoadPlan(const std::string& path, const UmeInstance& inst) {
  Json doc;
  try {
    doc = Json::parse(ReadTextFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("plan-json: ") + e.what());
  }
  return PlanFromJson(doc, inst);
}

Json SolveResultToJson(const SolveResult& result) {
  Json doc;
  doc["method"] = ToString(result.method);
  doc["value"] = FormatDecimal(result.value);
  doc["evaluations"] = result.evaluations;
  doc["plan"] = PlanToJson(result.plan);
  return doc;
}

Json DecisionToJson(const Decision& decision, double tol) {
  Json doc;
  doc["answer"] = decision.yes ? "YES" : "NO";
  doc["tolerance"] = FormatDecimal(tol);
  doc["value"] = FormatDecimal(decision.value);
  doc["evaluations"] = decision.evaluations;
  if (decision.yes) doc["witness"] = PlanToJson(decision.witness);
  return doc;
}

Json ArtifactsToJson(const ReductionArtifacts& art,
                     const std::vector<EdgeTraversal>& traversal) {
  Json doc;
  doc["version"] = kArtifactsVersion;
  Json provenance;
  provenance["node_count"] = art.gprime.node_count();
  Json edges = Json::array();
  for (const Edge& e : art.gprime.edges()) edges.push_back(Json::array({e.from, e.to}));
  provenance["edges"] = std::move(edges);
  provenance["budget"] = art.bprime;
  doc["provenance"] = std::move(provenance);
  doc["target"] = art.target;
  doc["pathological"] = art.pathological;
  Json coloring = Json::array();
  for (NodeId u = 0; u < art.gprime.node_count(); ++u) {
    coloring.push_back(Json::array({u, ToString(art.coloring[u])}));
  }
  doc["coloring"] = std::move(coloring);
  doc["S1"] = NodeList(art.sources[0]);
  doc["S2"] = NodeList(art.sources[1]);
  doc["P1"] = NodeList(art.penultimates[0]);
  doc["P2"] = NodeList(art.penultimates[1]);
  Json normalizers = Json::array();
  for (const auto& per_evader : art.normalizers) {
    Json z = Json::array();
    for (const auto& [u, count] : per_evader) z.push_back(Json::array({u, count}));
    normalizers.push_back(std::move(z));
  }
  doc["normalizers"] = std::move(normalizers);
  Json report = Json::array();
  for (const EdgeTraversal& row : traversal) {
    Json evaders = Json::array();
    // 1-based evader numbers, matching S1/S2 and P1/P2.
    for (int i : row.evaders) evaders.push_back(i + 1);
    report.push_back(Json::array({row.edge.from, row.edge.to, std::move(evaders)}));
  }
  doc["traversal"] = std::move(report);
  return doc;
}

Json ReportToJson(const VerificationReport& report, bool include_timing) {
  Json doc;
  doc["version"] = kReportVersion;
  doc["graph_id"] = report.graph_id;
  doc["node_count"] = report.node_count;
  doc["edge_count"] = report.edge_count;
  doc["min_cover_size"] = report.cover.size;
  doc["cover_witness"] = NodeList(report.cover.witness);
  Json coloring = Json::array();
  for (Color c : report.coloring) coloring.push_back(ToString(c));
  doc["coloring"] = std::move(coloring);
  Json rows = Json::array();
  for (const VerificationRow& row : report.rows) {
    Json r;
    r["budget"] = row.budget;
    r["pvc"] = row.pvc_yes ? "YES" : "NO";
    r["ume"] = row.ume_yes ? "YES" : "NO";
    r["agree"] = row.agree;
    r["ume_value"] = FormatDecimal(row.ume_value);
    if (row.ume_yes) r["ume_witness"] = NodeList(row.ume_witness);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  if (include_timing) doc["elapsed_seconds"] = report.elapsed.count();
  doc["passed"] = report.passed;
  return doc;
}

std::variant<UndirectedGraph, DiGraph> LoadGraph(const std::string& path,
                                                 GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return LoadUndirectedEdgeList(path);
  return LoadInstance(path).graph;
}

}  // namespace ume
