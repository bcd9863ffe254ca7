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

#include "ume/evader.h"

#include <cmath>

#include "ume/errors.h"

namespace ume {
namespace {

using Kind = ChainViolation::Kind;

void CheckPlanDimensions(const EvaderChain& chain,
                         const InterdictionPlan& plan) {
  const NodeId n = chain.dimension();
  if (chain.transition.rows() != n || chain.transition.cols() != n) {
    throw DimensionMismatchError(
        "transition matrix is " + std::to_string(chain.transition.rows()) +
        "x" + std::to_string(chain.transition.cols()) +
        " but the source distribution has length " + std::to_string(n));
  }
  if (chain.target < 0 || chain.target >= n) {
    throw DimensionMismatchError("target " + std::to_string(chain.target) +
                                 " outside 0.." + std::to_string(n - 1));
  }
  for (const Edge& e : plan.sensors()) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw DimensionMismatchError(
          "sensor (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
          ") outside a chain of dimension " + std::to_string(n));
    }
  }
}

}  // namespace

ValidationReport ValidateChain(const EvaderChain& chain) {
  ValidationReport report;
  const NodeId n = chain.dimension();
  if (chain.transition.rows() != n || chain.transition.cols() != n) {
    report.push_back({Kind::kDimension, -1, -1, 0.0,
                      "transition matrix is not " + std::to_string(n) + "x" +
                          std::to_string(n)});
    return report;
  }
  if (chain.target < 0 || chain.target >= n) {
    report.push_back({Kind::kTargetOutOfRange, chain.target, -1, 0.0,
                      "target outside the node range"});
  }
  if (!(chain.weight > 0.0 && chain.weight <= 1.0)) {
    report.push_back({Kind::kWeight, -1, -1, chain.weight,
                      "weight must lie in (0, 1]"});
  }
  for (NodeId u = 0; u < n; ++u) {
    if (chain.source(u) < 0.0) {
      report.push_back({Kind::kNegativeSource, u, -1, chain.source(u),
                        "negative source probability at node " +
                            std::to_string(u)});
    }
  }
  const double total = chain.source.sum();
  if (std::abs(total - 1.0) > kDistributionTolerance) {
    report.push_back({Kind::kSourceSum, -1, -1, total,
                      "source distribution sums to " + std::to_string(total)});
  }
  for (NodeId u = 0; u < n; ++u) {
    double row_sum = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      const double m = chain.transition(u, v);
      if (m < 0.0) {
        report.push_back({Kind::kNegativeEntry, u, v, m,
                          "negative transition (" + std::to_string(u) + ", " +
                              std::to_string(v) + ")"});
      }
      row_sum += m;
    }
    if (row_sum > 1.0 + kDistributionTolerance) {
      report.push_back({Kind::kRowSum, u, -1, row_sum,
                        "row " + std::to_string(u) + " sums to " +
                            std::to_string(row_sum)});
    }
    if (u == chain.target && chain.transition.row(u).cwiseAbs().sum() != 0.0) {
      report.push_back({Kind::kTargetRowNonzero, u, -1, row_sum,
                        "target row " + std::to_string(u) + " is not zero"});
    }
  }
  return report;
}

ValidationReport ValidateEnsemble(const EvaderEnsemble& ensemble) {
  ValidationReport report;
  double weight_sum = 0.0;
  for (std::size_t k = 0; k < ensemble.chains.size(); ++k) {
    const EvaderChain& chain = ensemble.chains[k];
    for (ChainViolation v : ValidateChain(chain)) {
      v.message = "evader " + std::to_string(k + 1) + ": " + v.message;
      report.push_back(std::move(v));
    }
    if (chain.dimension() != ensemble.chains.front().dimension()) {
      report.push_back({Kind::kDimension, -1, -1, 0.0,
                        "evader " + std::to_string(k + 1) +
                            " has a different dimension than evader 1"});
    }
    weight_sum += chain.weight;
  }
  if (ensemble.chains.empty() ||
      std::abs(weight_sum - 1.0) > kDistributionTolerance) {
    report.push_back({Kind::kWeight, -1, -1, weight_sum,
                      "evader weights sum to " + std::to_string(weight_sum)});
  }
  return report;
}

Eigen::VectorXd ExpectedVisits(const EvaderChain& chain,
                               const InterdictionPlan& plan) {
  CheckPlanDimensions(chain, plan);
  const NodeId n = chain.dimension();
  Eigen::MatrixXd leaky = chain.transition;
  const EfficiencyMap& d = plan.efficiency();
  for (const Edge& e : plan.sensors()) {
    leaky(e.from, e.to) *= 1.0 - d.at(e.from, e.to);
  }
  // x (I - M') = a  <=>  (I - M')^T x^T = a^T.
  Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - leaky.transpose();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  if (n > 0 && !(lu.rcond() >= kSingularRcond)) {
    throw SingularSystemError(
        "I - (M - M.r.d) is singular (rcond " + std::to_string(lu.rcond()) +
        "): a recurrent class never leaks under this plan");
  }
  return lu.solve(chain.source);
}

double CaptureProbability(const EvaderChain& chain,
                          const InterdictionPlan& plan) {
  const Eigen::VectorXd visits = ExpectedVisits(chain, plan);
  double j = 1.0 - visits(chain.target);
  if (j < 0.0 && j > -kClampTolerance) j = 0.0;
  if (j > 1.0 && j < 1.0 + kClampTolerance) j = 1.0;
  return j;
}

std::vector<double> CaptureProbabilities(const EvaderEnsemble& ensemble,
                                         const InterdictionPlan& plan) {
  std::vector<double> values;
  values.reserve(ensemble.chains.size());
  for (std::size_t k = 0; k < ensemble.chains.size(); ++k) {
    try {
      values.push_back(CaptureProbability(ensemble.chains[k], plan));
    } catch (const SingularSystemError& e) {
      throw SingularSystemError("evader " + std::to_string(k + 1) + ": " +
                                e.what());
    } catch (const DimensionMismatchError& e) {
      throw DimensionMismatchError("evader " + std::to_string(k + 1) + ": " +
                                   e.what());
    }
  }
  return values;
}

double WeightedCapture(const EvaderEnsemble& ensemble,
                       const InterdictionPlan& plan) {
  const std::vector<double> per_evader = CaptureProbabilities(ensemble, plan);
  double total = 0.0;
  for (std::size_t k = 0; k < per_evader.size(); ++k) {
    total += ensemble.chains[k].weight * per_evader[k];
  }
  return total;
}

}  // namespace ume
