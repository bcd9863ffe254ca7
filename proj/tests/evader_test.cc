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


#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.h"
#include "ume/errors.h"
#include "ume/evader.h"
#include "ume/interdiction.h"
#include "ume/oracles.h"

namespace ume {
namespace {

EvaderChain TwoNode(double stay, double go) {
  EvaderChain c;
  c.source = Eigen::Vector2d(1.0, 0.0);
  c.transition = Eigen::Matrix2d::Zero();
  c.transition(0, 0) = stay;
  c.transition(0, 1) = go;
  c.target = 1;
  return c;
}

InterdictionPlan Sensors(std::vector<Edge> edges, double d) {
  EfficiencyMap eff(d);
  return UncheckedPlan(InterdictionMode::kEdge, std::move(edges), {}, eff);
}

TEST_CASE("two-node chain") {
  const EvaderChain c = TwoNode(0.0, 1.0);
  CHECK(CaptureProbability(c, Sensors({}, 1.0)) == 0.0);
  CHECK(CaptureProbability(c, Sensors({{0, 1}}, 1.0)) == 1.0);
  CHECK(CaptureProbability(c, Sensors({{0, 1}}, 0.3)) ==
        doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("self-loop chain with half efficiency gives two thirds") {
  // Each step: detected 1/2, loops undetected 1/4, reaches t undetected 1/4,
  // so reach = (1/4) / (1 - 1/4) = 1/3.
  const EvaderChain c = TwoNode(0.5, 0.5);
  const double j = CaptureProbability(c, Sensors({{0, 0}, {0, 1}}, 0.5));
  CHECK(std::abs(j - 2.0 / 3.0) <= 1e-12);
}

TEST_CASE("source at the target is never captured") {
  EvaderChain c = TwoNode(0.0, 1.0);
  c.source = Eigen::Vector2d(0.0, 1.0);
  CHECK(CaptureProbability(c, Sensors({{0, 1}}, 1.0)) == 0.0);
}

TEST_CASE("leaking rows count as capture") {
  const EvaderChain c = TwoNode(0.0, 0.4);
  CHECK(CaptureProbability(c, Sensors({}, 0.0)) == doctest::Approx(0.6));
  // No path to t at all.
  CHECK(CaptureProbability(TwoNode(0.0, 0.0), Sensors({}, 0.0)) == 1.0);
}

TEST_CASE("weighted capture is the convex combination") {
  EvaderEnsemble e;
  e.chains = {TwoNode(0.0, 1.0), TwoNode(0.0, 1.0)};
  e.chains[0].weight = 0.5;
  e.chains[1].weight = 0.5;
  e.chains[1].source = Eigen::Vector2d(0.0, 1.0);  // starts at t
  const InterdictionPlan plan = Sensors({{0, 1}}, 1.0);
  CHECK(CaptureProbabilities(e, plan) == std::vector<double>{1.0, 0.0});
  CHECK(WeightedCapture(e, plan) == 0.5);
  EvaderEnsemble single;
  single.chains = {TwoNode(0.5, 0.5)};
  const InterdictionPlan half = Sensors({{0, 0}, {0, 1}}, 0.5);
  CHECK(WeightedCapture(single, half) == CaptureProbability(single.chains[0], half));
}

TEST_CASE("recurrent class without leakage is singular") {
  EvaderChain c;
  c.source = Eigen::Vector3d(1.0, 0.0, 0.0);
  c.transition = Eigen::Matrix3d::Zero();
  c.transition(0, 1) = 1.0;
  c.transition(1, 0) = 1.0;
  c.target = 2;
  CHECK_THROWS_AS(CaptureProbability(c, Sensors({}, 1.0)), SingularSystemError);
  // A sensor on the cycle makes it leak again.
  CHECK(CaptureProbability(c, Sensors({{0, 1}}, 0.5)) == doctest::Approx(1.0));
  EvaderEnsemble e;
  e.chains = {TwoNode(0.0, 1.0), c};
  e.chains[0].weight = e.chains[1].weight = 0.5;
  try {
    WeightedCapture(e, Sensors({}, 1.0));
    FAIL("expected SingularSystemError");
  } catch (const SingularSystemError& err) {
    CHECK(std::string(err.what()).find("evader 2") != std::string::npos);
  }
}

TEST_CASE("dimension mismatch") {
  EvaderChain c = TwoNode(0.0, 1.0);
  c.source = Eigen::Vector3d(1.0, 0.0, 0.0);
  CHECK_THROWS_AS(CaptureProbability(c, Sensors({}, 1.0)), DimensionMismatchError);
  CHECK_THROWS_AS(CaptureProbability(TwoNode(0.0, 1.0), Sensors({{0, 5}}, 1.0)),
                  DimensionMismatchError);
}

TEST_CASE("validation names the offending node") {
  CHECK(ValidateChain(TwoNode(0.5, 0.5)).empty());
  EvaderChain c;
  c.source = Eigen::VectorXd::Zero(5);
  c.source(0) = 1.0;
  c.transition = Eigen::MatrixXd::Zero(5, 5);
  c.transition(3, 1) = 1.0;
  c.transition(3, 2) = 0.5;
  c.target = 4;
  const ValidationReport report = ValidateChain(c);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == ChainViolation::Kind::kRowSum);
  CHECK(report[0].row == 3);

  EvaderChain bad = TwoNode(0.5, 0.5);
  bad.source = Eigen::Vector2d(0.5, 0.2);
  bad.transition(1, 0) = 0.1;
  bad.transition(0, 0) = -0.1;
  std::vector<ChainViolation::Kind> kinds;
  for (const ChainViolation& v : ValidateChain(bad)) kinds.push_back(v.kind);
  CHECK(std::count(kinds.begin(), kinds.end(), ChainViolation::Kind::kSourceSum) == 1);
  CHECK(std::count(kinds.begin(), kinds.end(), ChainViolation::Kind::kTargetRowNonzero) == 1);
  CHECK(std::count(kinds.begin(), kinds.end(), ChainViolation::Kind::kNegativeEntry) == 1);
}

TEST_CASE("acyclic chains agree with path enumeration") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const NodeId n = 2 + trial % 8;
    const testing::ChainCase c = testing::RandomAcyclicCase(n, rng);
    const double j = CaptureProbability(c.chain, c.plan);
    const PathOracleResult oracle = OracleCapturePaths(c.chain, c.plan, n);
    CHECK(oracle.truncation == 0.0);
    CHECK(std::abs(j - oracle.capture) <= 1e-12);
    CHECK(j >= 0.0);
    CHECK(j <= 1.0);
  }
}

TEST_CASE("zero efficiency equals the empty plan") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const testing::ChainCase c = testing::RandomCyclicCase(6, rng);
    std::vector<Edge> all(c.plan.sensors().begin(), c.plan.sensors().end());
    const double empty = CaptureProbability(c.chain, Sensors({}, 0.7));
    CHECK(CaptureProbability(c.chain, Sensors(all, 0.0)) == doctest::Approx(empty).epsilon(1e-14));
  }
}

TEST_CASE("adding a sensor never decreases capture") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const NodeId n = 3 + trial % 4;  // n <= 6
    const testing::ChainCase c = trial % 2 ? testing::RandomCyclicCase(n, rng)
                                           : testing::RandomAcyclicCase(n, rng);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (c.chain.transition(u, v) > 0.0) edges.push_back({u, v});
      }
    }
    if (edges.size() > 10) edges.resize(10);
    const auto m = static_cast<std::uint32_t>(edges.size());
    std::vector<double> value(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Edge> on;
      for (std::uint32_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1u) on.push_back(edges[i]);
      }
      value[mask] = CaptureProbability(
          c.chain, UncheckedPlan(InterdictionMode::kEdge, on, {},
                                 c.plan.efficiency()));
    }
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      for (std::uint32_t i = 0; i < m; ++i) {
        if (!((mask >> i) & 1u)) {
          CHECK(value[mask | (1u << i)] >= value[mask] - 1e-12);
        }
      }
    }
  }
}

}  // namespace
}  // namespace ume
