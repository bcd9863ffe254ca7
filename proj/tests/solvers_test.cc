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


#include <omp.h>

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.h"
#include "ume/errors.h"
#include "ume/generators.h"
#include "ume/reduction.h"
#include "ume/solvers.h"

namespace ume {
namespace {

TEST_CASE("subset counts") {
  CHECK(SubsetCount(5, 0) == 1);
  CHECK(SubsetCount(5, 2) == 1 + 5 + 10);
  CHECK(SubsetCount(3, 7) == 8);
  CHECK(SubsetCount(200, 100) == UINT64_MAX);
}

TEST_CASE("exact matches brute force on random instances") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int budget = trial % 4;
    const UmeInstance inst = trial % 2 ? testing::RandomNodeInstance(6, budget, rng)
                                       : testing::RandomEdgeInstance(5, budget, rng);
    const SolveResult r = SolveExact(inst);
    CHECK(r.value == doctest::Approx(testing::BruteForceOptimum(inst)).epsilon(1e-12));
    CHECK(r.plan.cost() <= static_cast<std::size_t>(budget));
    CHECK(std::abs(Evaluate(inst, r.plan) - r.value) <= 1e-12);
    CHECK(r.evaluations == SubsetCount(static_cast<int>(CandidateCount(inst)), budget));
  }
}

TEST_CASE("parallel and serial exact agree exactly") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 15; ++trial) {
    const UmeInstance inst = testing::RandomNodeInstance(8, 1 + trial % 3, rng);
    const SolveResult serial = SolveExactSerial(inst);
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      const SolveResult parallel = SolveExact(inst);
      CHECK(parallel.value == serial.value);
      CHECK(parallel.chosen == serial.chosen);
      CHECK(parallel.evaluations == serial.evaluations);
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("ties pick the lexicographically smallest set") {
  // Two identical parallel routes: either node alone captures half.
  UmeInstance inst;
  inst.graph = DiGraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  inst.efficiency = EfficiencyMap(1.0);
  EvaderChain c;
  c.source = Eigen::Vector4d(1, 0, 0, 0);
  c.transition = Eigen::Matrix4d::Zero();
  c.transition(0, 1) = c.transition(0, 2) = 0.5;
  c.transition(1, 3) = c.transition(2, 3) = 1.0;
  c.target = 3;
  inst.evaders.chains = {c};
  inst.budget = {1, BudgetUnit::kNodes};
  const SolveResult r = SolveExact(inst);
  CHECK(r.value == 1.0);
  CHECK(std::vector<NodeId>(r.plan.nodes().begin(), r.plan.nodes().end()) ==
        std::vector<NodeId>{0});
  inst.efficiency.Set(0, 1, 0.0);
  inst.efficiency.Set(0, 2, 0.0);
  const SolveResult tie = SolveExact(inst);
  CHECK(tie.value == 0.5);
  CHECK(std::vector<NodeId>(tie.plan.nodes().begin(), tie.plan.nodes().end()) ==
        std::vector<NodeId>{1});
}

TEST_CASE("subset cap") {
  std::mt19937_64 rng(23);
  const UmeInstance inst = testing::RandomNodeInstance(8, 3, rng);
  CHECK_THROWS_AS(SolveExact(inst, {10}), SearchSpaceTooLargeError);
  CHECK_THROWS_AS(DecidePerfect(inst, 1e-9, {10}), SearchSpaceTooLargeError);
}

TEST_CASE("greedy is bounded by exact and monotone") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    UmeInstance inst = testing::RandomNodeInstance(7, 0, rng);
    double prev_exact = -1.0, prev_greedy = -1.0;
    for (int b = 0; b <= 4; ++b) {
      inst.budget.limit = b;
      const SolveResult exact = SolveExact(inst);
      const SolveResult greedy = SolveGreedy(inst);
      CHECK(greedy.value <= exact.value + 1e-12);
      CHECK(exact.value >= prev_exact - 1e-12);
      CHECK(greedy.value >= prev_greedy - 1e-12);
      CHECK(std::abs(Evaluate(inst, greedy.plan) - greedy.value) <= 1e-12);
      CHECK(greedy.plan.cost() <= static_cast<std::size_t>(b));
      prev_exact = exact.value;
      prev_greedy = greedy.value;
    }
  }
}

TEST_CASE("K3 reduction decisions") {
  const ReductionArtifacts art = ReducePvc(CompleteGraph(3), 2);
  const Decision yes = DecidePerfect(art.instance);
  CHECK(yes.yes);
  CHECK(yes.witness.cost() == 2);
  CHECK(std::abs(Evaluate(art.instance, yes.witness) - 1.0) <= 1e-9);
  UmeInstance smaller = art.instance;
  smaller.budget.limit = 1;
  const Decision no = DecidePerfect(smaller);
  CHECK_FALSE(no.yes);
  CHECK(no.value < 1.0 - 1e-9);
  CHECK(DecidePerfectSerial(art.instance).chosen == yes.chosen);
  CHECK_FALSE(DecidePerfectSerial(smaller).yes);
}

TEST_CASE("decision witnesses are the smallest perfect sets") {
  const ReductionArtifacts art = ReducePvc(WheelGraph(5), 6);
  const Decision d = DecidePerfect(art.instance);
  REQUIRE(d.yes);
  CHECK(d.witness.cost() == 4);  // minimum cover of the 5-wheel
  CHECK(DecidePerfectSerial(art.instance).chosen == d.chosen);
}

}  // namespace
}  // namespace ume
