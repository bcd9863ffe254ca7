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

#include "ume/oracles.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ume/errors.h"
#include "ume/reduction.h"

namespace ume {
namespace {

struct Step {
  NodeId to;
  double cumulative;  // running sum of the row up to and including `to`
  double detect;      // r_uv d_uv
};

// Sparse view of a chain shared by both J oracles.
struct SparseChain {
  std::vector<std::vector<Step>> rows;
  std::vector<std::pair<NodeId, double>> source_cdf;
};

SparseChain Sparsify(const EvaderChain& chain, const InterdictionPlan& plan) {
  const NodeId n = chain.dimension();
  if (chain.transition.rows() != n || chain.transition.cols() != n) {
    throw DimensionMismatchError("transition matrix does not match the source");
  }
  SparseChain s;
  s.rows.resize(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    double acc = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      const double m = chain.transition(u, v);
      if (m <= 0.0) continue;
      acc += m;
      const double detect =
          plan.HasSensor(u, v) ? plan.efficiency().at(u, v) : 0.0;
      s.rows[u].push_back({v, acc, detect});
    }
  }
  double acc = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    if (chain.source(u) <= 0.0) continue;
    acc += chain.source(u);
    s.source_cdf.push_back({u, acc});
  }
  return s;
}

constexpr std::uint64_t kBlockSize = 4096;

struct Tally {
  std::uint64_t captured = 0;
  std::uint64_t vanished = 0;
  std::uint64_t reached = 0;
  std::uint64_t truncated = 0;

  Tally& operator+=(const Tally& o) {
    captured += o.captured;
    vanished += o.vanished;
    reached += o.reached;
    truncated += o.truncated;
    return *this;
  }
};

Tally SimulateBlock(const SparseChain& s, NodeId target,
                    const MonteCarloOptions& options, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  const std::uint64_t begin = block * kBlockSize;
  const std::uint64_t end = std::min(options.samples, begin + kBlockSize);
  Tally tally;
  for (std::uint64_t i = begin; i < end; ++i) {
    const double x = uniform(rng) * s.source_cdf.back().second;
    auto it = std::upper_bound(
        s.source_cdf.begin(), s.source_cdf.end(), x,
        [](double value, const auto& entry) { return value < entry.second; });
    NodeId u = it == s.source_cdf.end() ? s.source_cdf.back().first : it->first;
    std::uint64_t steps = 0;
    for (;;) {
      if (u == target) {
        ++tally.reached;
        break;
      }
      if (steps++ == options.max_steps) {
        ++tally.truncated;
        break;
      }
      const double y = uniform(rng);
      const auto& row = s.rows[u];
      auto next = std::upper_bound(
          row.begin(), row.end(), y,
          [](double value, const Step& step) { return value < step.cumulative; });
      if (next == row.end()) {
        ++tally.vanished;
        break;
      }
      if (next->detect > 0.0 && uniform(rng) < next->detect) {
        ++tally.captured;
        break;
      }
      u = next->to;
    }
  }
  return tally;
}

MonteCarloResult Summarize(const Tally& tally, std::uint64_t samples) {
  MonteCarloResult r;
  r.samples = samples;
  r.captured = tally.captured;
  r.vanished = tally.vanished;
  r.reached = tally.reached;
  r.truncated = tally.truncated;
  if (samples == 0) return r;
  const double n = static_cast<double>(samples);
  r.estimate = static_cast<double>(samples - tally.reached) / n;
  r.standard_error = std::sqrt(r.estimate * (1.0 - r.estimate) / n);
  return r;
}

void CheckMonteCarloInput(const EvaderChain& chain,
                          const MonteCarloOptions& options,
                          const SparseChain& s) {
  if (options.samples < 1) throw InvalidArgument("samples must be >= 1");
  if (s.source_cdf.empty()) {
    throw InvalidArgument("source distribution has no positive entry");
  }
  if (chain.target < 0 || chain.target >= chain.dimension()) {
    throw DimensionMismatchError("target outside the chain");
  }
}

// Branching on the uncovered vertex of maximum remaining degree: either it
// joins the cover, or all its uncovered neighbors do.
class CoverSearch {
 public:
  explicit CoverSearch(const UndirectedGraph& g)
      : g_(g), in_cover_(static_cast<std::size_t>(g.node_count()), 0) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (g.Degree(u) > 0) best_.push_back(u);
    }
  }

  std::vector<NodeId> Run() {
    Branch(0);
    return best_;
  }

 private:
  std::size_t UncoveredDegree(NodeId u) const {
    std::size_t d = 0;
    for (NodeId w : g_.Neighbors(u)) d += in_cover_[w] ? 0 : 1;
    return d;
  }

  // Greedy maximal matching on uncovered edges: a lower bound on the cover
  // still needed.
  int MatchingBound() const {
    std::vector<char> used(in_cover_.size(), 0);
    int m = 0;
    for (const Edge& e : g_.edges()) {
      if (in_cover_[e.from] || in_cover_[e.to] || used[e.from] || used[e.to]) {
        continue;
      }
      used[e.from] = used[e.to] = 1;
      ++m;
    }
    return m;
  }

  void Branch(int size) {
    if (size + MatchingBound() >= static_cast<int>(best_.size())) return;
    NodeId pick = -1;
    std::size_t pick_degree = 0;
    for (NodeId u = 0; u < g_.node_count(); ++u) {
      if (in_cover_[u]) continue;
      const std::size_t d = UncoveredDegree(u);
      if (d > pick_degree) {
        pick = u;
        pick_degree = d;
      }
    }
    if (pick < 0) {
      best_.clear();
      for (NodeId u = 0; u < g_.node_count(); ++u) {
        if (in_cover_[u]) best_.push_back(u);
      }
      return;
    }
    in_cover_[pick] = 1;
    Branch(size + 1);
    in_cover_[pick] = 0;

    std::vector<NodeId> added;
    for (NodeId w : g_.Neighbors(pick)) {
      if (!in_cover_[w]) {
        in_cover_[w] = 1;
        added.push_back(w);
      }
    }
    Branch(size + static_cast<int>(added.size()));
    for (NodeId w : added) in_cover_[w] = 0;
  }

  const UndirectedGraph& g_;
  std::vector<char> in_cover_;
  std::vector<NodeId> best_;
};

}  // namespace

PathOracleResult OracleCapturePaths(const EvaderChain& chain,
                                    const InterdictionPlan& plan, int max_hops,
                                    const PathOracleOptions& options) {
  if (max_hops < 1) throw InvalidArgument("max_hops must be >= 1");
  const SparseChain s = Sparsify(chain, plan);
  struct Partial {
    NodeId node;
    int hops;
    double mass;
  };
  double reached = 0.0;
  PathOracleResult result;
  std::vector<Partial> stack;
  for (const auto& [u, cdf] : s.source_cdf) {
    const double a = chain.source(u);
    if (u == chain.target) {
      reached += a;
    } else {
      stack.push_back({u, 0, a});
    }
  }
  while (!stack.empty()) {
    const Partial p = stack.back();
    stack.pop_back();
    if (++result.expanded > options.branch_cap) {
      throw PathExplosionError("path enumeration expanded more than " +
                               std::to_string(options.branch_cap) +
                               " partial trajectories");
    }
    for (const Step& step : s.rows[p.node]) {
      const double q = p.mass * chain.transition(p.node, step.to) *
                       (1.0 - step.detect);
      if (q <= 0.0) continue;
      if (step.to == chain.target) {
        reached += q;
      } else if (p.hops + 1 >= max_hops || q < options.prune_below) {
        result.truncation += q;
      } else {
        stack.push_back({step.to, p.hops + 1, q});
      }
    }
  }
  result.capture = 1.0 - reached;
  return result;
}

MonteCarloResult OracleCaptureMonteCarlo(const EvaderChain& chain,
                                         const InterdictionPlan& plan,
                                         const MonteCarloOptions& options) {
  const SparseChain s = Sparsify(chain, plan);
  CheckMonteCarloInput(chain, options, s);
  const std::int64_t blocks =
      static_cast<std::int64_t>((options.samples + kBlockSize - 1) / kBlockSize);
  std::vector<Tally> per_block(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < blocks; ++b) {
    per_block[b] = SimulateBlock(s, chain.target, options,
                                 static_cast<std::uint64_t>(b));
  }
  Tally total;
  for (const Tally& t : per_block) total += t;
  return Summarize(total, options.samples);
}

MonteCarloResult OracleCaptureMonteCarloSerial(
    const EvaderChain& chain, const InterdictionPlan& plan,
    const MonteCarloOptions& options) {
  const SparseChain s = Sparsify(chain, plan);
  CheckMonteCarloInput(chain, options, s);
  const std::uint64_t blocks = (options.samples + kBlockSize - 1) / kBlockSize;
  Tally total;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    total += SimulateBlock(s, chain.target, options, b);
  }
  return Summarize(total, options.samples);
}

VertexCover MinVertexCover(const UndirectedGraph& g, NodeId cap) {
  if (g.node_count() > cap) {
    throw InstanceTooLargeError("exact vertex cover is limited to " +
                                std::to_string(cap) + " nodes, graph has " +
                                std::to_string(g.node_count()));
  }
  VertexCover cover;
  cover.witness = CoverSearch(g).Run();
  cover.size = static_cast<int>(cover.witness.size());
  return cover;
}

bool IsVertexCover(const UndirectedGraph& g, const std::vector<NodeId>& cover) {
  std::vector<char> in(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId u : cover) {
    if (u >= 0 && u < g.node_count()) in[u] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.from] || in[e.to]; });
}

VerificationReport VerifyReduction(const UndirectedGraph& gprime,
                                   int first_budget, int last_budget,
                                   const std::string& graph_id,
                                   const VerifyOptions& options) {
  if (first_budget < 0 || last_budget < first_budget) {
    throw InvalidArgument("budget range must satisfy 0 <= first <= last");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.graph_id = graph_id;
  report.node_count = gprime.node_count();
  report.edge_count = gprime.edge_count();
  report.cover = MinVertexCover(gprime, options.cover_cap);

  ReductionArtifacts art = ReducePvc(gprime, first_budget, options.coloring);
  report.coloring = art.coloring.colors;
  report.passed = true;
  for (int b = first_budget; b <= last_budget; ++b) {
    VerificationRow row;
    row.budget = b;
    row.pvc_yes = report.cover.size <= b;
    try {
      art.instance.budget = Budget{b, BudgetUnit::kNodes};
      const Decision d = DecidePerfect(art.instance, options.tol, options.exact);
      row.ume_yes = d.yes;
      row.ume_value = d.value;
      if (d.yes) {
        row.ume_witness.assign(d.witness.nodes().begin(),
                               d.witness.nodes().end());
      }
    } catch (const Error& e) {
      throw Error("budget " + std::to_string(b) + ": " + e.what());
    }
    row.agree = row.pvc_yes == row.ume_yes;
    report.passed = report.passed && row.agree;
    report.rows.push_back(std::move(row));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace ume
