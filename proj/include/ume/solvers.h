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

// Budget-constrained maximization of <J>.
//
// The exhaustive kernels come in two flavors: an OpenMP version that fans
// subsets out to workers, and a serial reference with the same contract.
// Both reduce with an order-independent rule, so they return identical
// plans.

#ifndef UME_SOLVERS_H_
#define UME_SOLVERS_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ume/instance.h"

namespace ume {

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;
inline constexpr double kTieTolerance = 1e-12;
inline constexpr double kGreedyMinGain = 1e-12;
inline constexpr double kDefaultDecisionTolerance = 1e-9;

enum class SolveMethod { kExact, kGreedy };
std::string ToString(SolveMethod method);

struct SolveResult {
  InterdictionPlan plan;
  double value = 0.0;
  SolveMethod method = SolveMethod::kExact;
  std::uint64_t evaluations = 0;
  std::chrono::duration<double> elapsed{0.0};
  // Indices into NodeCandidates / EdgeCandidates, increasing.
  std::vector<int> chosen;
};

struct ExactOptions {
  std::uint64_t subset_cap = kDefaultSubsetCap;
};

// sum_{k <= budget} C(candidates, k), saturating at UINT64_MAX.
std::uint64_t SubsetCount(int candidates, int budget);

// Global optimum over all candidate subsets of size <= budget. Among plans
// within kTieTolerance of the best value, the lexicographically smallest
// sorted candidate list wins. Throws SearchSpaceTooLargeError above the cap.
SolveResult SolveExact(const UmeInstance& inst, const ExactOptions& options = {});
SolveResult SolveExactSerial(const UmeInstance& inst,
                             const ExactOptions& options = {});

// Adds the candidate with the largest marginal gain until the budget is
// spent or no gain exceeds kGreedyMinGain. Ties go to the lowest index.
SolveResult SolveGreedy(const UmeInstance& inst);

struct Decision {
  bool yes = false;
  InterdictionPlan witness;  // meaningful only when yes
  double value = 0.0;        // <J> at the witness, or the best value seen
  std::vector<int> chosen;
  std::uint64_t evaluations = 0;
};

// Is there a budget-feasible plan with <J> >= 1 - tol? The witness is the
// smallest such set, lexicographically first among sets of that size.
Decision DecidePerfect(const UmeInstance& inst,
                       double tol = kDefaultDecisionTolerance,
                       const ExactOptions& options = {});
Decision DecidePerfectSerial(const UmeInstance& inst,
                             double tol = kDefaultDecisionTolerance,
                             const ExactOptions& options = {});

}  // namespace ume

#endif  // UME_SOLVERS_H_
