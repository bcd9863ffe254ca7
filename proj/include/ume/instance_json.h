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

// JSON documents exchanged by the CLI: instance-json, plan-json,
// artifacts-json and report-json. Schemas live in docs/schemas/.
//
// Probabilities are written as decimal strings holding the shortest
// representation that parses back to the same double; sparse entries are
// sorted by index. Readers also accept plain JSON numbers.

#ifndef UME_INSTANCE_JSON_H_
#define UME_INSTANCE_JSON_H_

#include <string>
#include <variant>

#include "json.hpp"
#include "ume/instance.h"
#include "ume/oracles.h"
#include "ume/reduction.h"
#include "ume/solvers.h"

namespace ume {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceVersion = "ume-instance/1";
inline constexpr const char* kPlanVersion = "ume-plan/1";
inline constexpr const char* kArtifactsVersion = "ume-artifacts/1";
inline constexpr const char* kReportVersion = "ume-report/1";

Json InstanceToJson(const UmeInstance& inst);
// Throws ParseError for malformed documents and InvalidArgument (via
// ValidateInstance) for documents that parse but violate an invariant.
UmeInstance InstanceFromJson(const Json& doc);

std::string InstanceToText(const UmeInstance& inst);
UmeInstance ParseInstance(const std::string& text);
UmeInstance LoadInstance(const std::string& path);

// {"version", "mode", "nodes": [...]} or {"version", "mode", "edges": [[u, v]]}.
// Efficiencies always come from the instance.
Json PlanToJson(const InterdictionPlan& plan);
InterdictionPlan PlanFromJson(const Json& doc, const UmeInstance& inst);
InterdictionPlan LoadPlan(const std::string& path, const UmeInstance& inst);

Json SolveResultToJson(const SolveResult& result);
Json DecisionToJson(const Decision& decision, double tol);

Json ArtifactsToJson(const ReductionArtifacts& art,
                     const std::vector<EdgeTraversal>& traversal);
// Timing is left out by default so reports are byte-reproducible.
Json ReportToJson(const VerificationReport& report, bool include_timing = false);

enum class GraphFormat { kEdgeList, kInstanceJson };

// Edge lists load as undirected graphs, instance documents as the instance's
// directed graph.
std::variant<UndirectedGraph, DiGraph> LoadGraph(const std::string& path,
                                                 GraphFormat format);

}  // namespace ume

#endif  // UME_INSTANCE_JSON_H_
