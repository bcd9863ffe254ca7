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

// Markovian evaders and the closed-form capture probability
//
//   J = 1 - ( a [I - (M - M.r.d)]^{-1} )_t
//
// where . is the element-wise product. The target t is a killing state
// (row t of M is zero). Rows may be substochastic: the missing mass is an
// evader that vanishes before reaching t, which counts as captured.

#ifndef UME_EVADER_H_
#define UME_EVADER_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ume/graph.h"
#include "ume/interdiction.h"

namespace ume {

inline constexpr double kDistributionTolerance = 1e-12;
inline constexpr double kClampTolerance = 1e-9;
inline constexpr double kSingularRcond = 1e-12;

struct EvaderChain {
  Eigen::VectorXd source;      // a, length n
  Eigen::MatrixXd transition;  // M, n x n, row-substochastic
  NodeId target = 0;
  double weight = 1.0;  // scenario probability w^(k)

  NodeId dimension() const { return static_cast<NodeId>(source.size()); }
};

struct EvaderEnsemble {
  std::vector<EvaderChain> chains;
};

struct ChainViolation {
  enum class Kind {
    kDimension,
    kTargetOutOfRange,
    kNegativeSource,
    kSourceSum,
    kNegativeEntry,
    kRowSum,
    kTargetRowNonzero,
    kWeight,
  };
  Kind kind;
  NodeId row = -1;  // node index the violation is attached to, -1 if global
  NodeId col = -1;
  double value = 0.0;
  std::string message;
};

using ValidationReport = std::vector<ChainViolation>;

// Lists every violated invariant; empty means the chain is valid.
ValidationReport ValidateChain(const EvaderChain& chain);

// Chain reports (messages prefixed with the evader index) plus the
// ensemble-level checks: shared dimension and weights summing to 1.
ValidationReport ValidateEnsemble(const EvaderEnsemble& ensemble);

// Expected number of visits to each node, x = a [I - M']^{-1} with
// M' = M - M.r.d. Solved as the transposed system, never via an inverse.
// Throws DimensionMismatchError and SingularSystemError.
Eigen::VectorXd ExpectedVisits(const EvaderChain& chain,
                               const InterdictionPlan& plan);

// J for one evader.
double CaptureProbability(const EvaderChain& chain,
                          const InterdictionPlan& plan);

// J^(k) for every evader; errors are rethrown with the evader index.
std::vector<double> CaptureProbabilities(const EvaderEnsemble& ensemble,
                                         const InterdictionPlan& plan);

// <J> = sum_k w^(k) J^(k).
double WeightedCapture(const EvaderEnsemble& ensemble,
                       const InterdictionPlan& plan);

}  // namespace ume

#endif  // UME_EVADER_H_
