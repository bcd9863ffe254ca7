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

// Brute-force references that share no code path with the linear solve:
// trajectory enumeration, Monte Carlo simulation, exact minimum vertex
// cover, and the end-to-end check that the reduction answers the vertex
// cover question.

#ifndef UME_ORACLES_H_
#define UME_ORACLES_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ume/coloring.h"
#include "ume/evader.h"
#include "ume/graph.h"
#include "ume/interdiction.h"
#include "ume/solvers.h"

namespace ume {

struct PathOracleOptions {
  // Maximum number of partial trajectories expanded.
  std::uint64_t branch_cap = 50'000'000;
  // Partial trajectories whose undetected probability falls below this are
  // dropped and counted as truncation mass. 0 keeps everything.
  double prune_below = 0.0;
};

struct PathOracleResult {
  double capture = 0.0;     // 1 - sum over enumerated paths reaching t
  double truncation = 0.0;  // undetected mass still in transit at the cutoff
  std::uint64_t expanded = 0;
};

// Enumerates every trajectory of at most max_hops steps from the source
// support. The exact J lies in [capture - truncation, capture].
// Throws InvalidArgument for max_hops < 1 and PathExplosionError above the
// branch cap.
PathOracleResult OracleCapturePaths(const EvaderChain& chain,
                                    const InterdictionPlan& plan, int max_hops,
                                    const PathOracleOptions& options = {});

struct MonteCarloOptions {
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 1'000'000;  // per trajectory
};

struct MonteCarloResult {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t captured = 0;   // detected by a sensor
  std::uint64_t vanished = 0;   // lost to a substochastic row
  std::uint64_t reached = 0;    // arrived at t undetected
  std::uint64_t truncated = 0;  // hit max_steps; counted as not reaching t
};

// Simulates trajectories: step along a row of M, then detection with
// probability r_uv d_uv. The estimate is the fraction that never arrive at
// t undetected. Deterministic in the seed and independent of the thread
// count: samples are drawn in fixed blocks, each with its own seeded stream.
MonteCarloResult OracleCaptureMonteCarlo(const EvaderChain& chain,
                                         const InterdictionPlan& plan,
                                         const MonteCarloOptions& options = {});
MonteCarloResult OracleCaptureMonteCarloSerial(
    const EvaderChain& chain, const InterdictionPlan& plan,
    const MonteCarloOptions& options = {});

inline constexpr NodeId kDefaultCoverNodeCap = 20;

struct VertexCover {
  int size = 0;
  std::vector<NodeId> witness;  // sorted
};

// Exact minimum vertex cover by branching on an uncovered edge.
// Throws InstanceTooLargeError when the graph has more than cap nodes.
VertexCover MinVertexCover(const UndirectedGraph& g,
                           NodeId cap = kDefaultCoverNodeCap);

bool IsVertexCover(const UndirectedGraph& g, const std::vector<NodeId>& cover);

struct VerificationRow {
  int budget = 0;
  bool pvc_yes = false;
  bool ume_yes = false;
  bool agree = false;
  double ume_value = 0.0;         // <J> at the witness, or the best value
  std::vector<NodeId> ume_witness;  // interdicted nodes when ume_yes
};

struct VerificationReport {
  std::string graph_id;
  NodeId node_count = 0;
  std::size_t edge_count = 0;
  std::vector<VerificationRow> rows;
  VertexCover cover;
  std::vector<Color> coloring;
  std::chrono::duration<double> elapsed{0.0};
  bool passed = false;
};

struct VerifyOptions {
  double tol = kDefaultDecisionTolerance;
  NodeId cover_cap = kDefaultCoverNodeCap;
  ExactOptions exact;
  ColoringOptions coloring;
};

// For each B' in [first_budget, last_budget]: vertex-cover answer by exact
// search, UME answer by reducing G' and deciding <J> = 1 on the instance.
// Errors are rethrown with the failing budget attached.
VerificationReport VerifyReduction(const UndirectedGraph& gprime,
                                   int first_budget, int last_budget,
                                   const std::string& graph_id = "",
                                   const VerifyOptions& options = {});

}  // namespace ume

#endif  // UME_ORACLES_H_
