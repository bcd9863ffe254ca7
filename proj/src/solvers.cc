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

#include "ume/solvers.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>

#include "ume/errors.h"

namespace ume {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (result > kSaturated / num) return kSaturated;
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

// k-subset of {0..n-1} with the given rank in lexicographic order.
void UnrankCombination(int n, int k, std::uint64_t rank, std::vector<int>& out) {
  out.resize(static_cast<std::size_t>(k));
  int x = 0;
  for (int i = 0; i < k; ++i) {
    for (;;) {
      const std::uint64_t block = Binomial(n - x - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    out[i] = x++;
  }
}

// Advances to the next k-subset in lexicographic order.
bool NextCombination(int n, std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// Caches the candidate list so each subset evaluation only builds a plan.
class SubsetEvaluator {
 public:
  explicit SubsetEvaluator(const UmeInstance& inst) : inst_(inst) {
    ValidateInstance(inst);
    if (inst.mode == InterdictionMode::kNode) {
      nodes_ = NodeCandidates(inst);
    } else {
      edges_ = EdgeCandidates(inst);
    }
  }

  int candidate_count() const {
    return static_cast<int>(inst_.mode == InterdictionMode::kNode
                                ? nodes_.size()
                                : edges_.size());
  }

  int budget() const {
    return std::min(inst_.budget.limit, candidate_count());
  }

  InterdictionPlan Plan(const std::vector<int>& chosen) const {
    if (inst_.mode == InterdictionMode::kNode) {
      std::vector<NodeId> q;
      q.reserve(chosen.size());
      for (int i : chosen) q.push_back(nodes_[i]);
      return PlanFromNodes(inst_.graph, q, inst_.efficiency);
    }
    std::vector<Edge> r;
    r.reserve(chosen.size());
    for (int i : chosen) r.push_back(edges_[i]);
    return PlanFromEdges(inst_.graph, r, inst_.efficiency);
  }

  double Value(const std::vector<int>& chosen) const {
    return WeightedCapture(inst_.evaders, Plan(chosen));
  }

 private:
  const UmeInstance& inst_;
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
};

void CheckCap(int candidates, int budget, std::uint64_t cap) {
  const std::uint64_t count = SubsetCount(candidates, budget);
  if (count > cap) {
    throw SearchSpaceTooLargeError(
        "exhaustive search over " + std::to_string(candidates) +
        " candidates with budget " + std::to_string(budget) + " needs " +
        (count == kSaturated ? std::string("more than 2^64")
                             : std::to_string(count)) +
        " subsets, above the cap of " + std::to_string(cap));
  }
}

// Collects the first exception thrown inside a parallel region.
class ErrorSlot {
 public:
  void Capture() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!error_) error_ = std::current_exception();
  }
  void RethrowIfAny() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

// Evaluates every k-subset; values[rank] in lexicographic rank order.
void EvaluateAllParallel(const SubsetEvaluator& eval, int k,
                         std::vector<double>& values) {
  const int n = eval.candidate_count();
  const std::uint64_t total = Binomial(n, k);
  values.assign(total, 0.0);
  ErrorSlot errors;
#pragma omp parallel
  {
    const std::uint64_t workers = static_cast<std::uint64_t>(omp_get_num_threads());
    const std::uint64_t id = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t lo = total * id / workers;
    const std::uint64_t hi = total * (id + 1) / workers;
    if (lo < hi) {
      try {
        std::vector<int> subset;
        UnrankCombination(n, k, lo, subset);
        for (std::uint64_t r = lo; r < hi; ++r) {
          values[r] = eval.Value(subset);
          NextCombination(n, subset);
        }
      } catch (...) {
        errors.Capture();
      }
    }
  }
  errors.RethrowIfAny();
}

void EvaluateAllSerial(const SubsetEvaluator& eval, int k,
                       std::vector<double>& values) {
  const int n = eval.candidate_count();
  const std::uint64_t total = Binomial(n, k);
  values.assign(total, 0.0);
  std::vector<int> subset;
  UnrankCombination(n, k, 0, subset);
  for (std::uint64_t r = 0; r < total; ++r) {
    values[r] = eval.Value(subset);
    NextCombination(n, subset);
  }
}

using EvaluateAllFn = void (*)(const SubsetEvaluator&, int,
                               std::vector<double>&);

SolveResult SolveExactWith(const UmeInstance& inst, const ExactOptions& options,
                           EvaluateAllFn evaluate_all) {
  const auto start = Clock::now();
  SubsetEvaluator eval(inst);
  const int n = eval.candidate_count();
  const int budget = eval.budget();
  CheckCap(n, budget, options.subset_cap);

  std::vector<std::vector<double>> values(static_cast<std::size_t>(budget) + 1);
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t evaluations = 0;
  for (int k = 0; k <= budget; ++k) {
    evaluate_all(eval, k, values[k]);
    evaluations += values[k].size();
    for (double v : values[k]) best = std::max(best, v);
  }

  // Lexicographically smallest sorted subset within tolerance of the best.
  std::vector<int> chosen;
  bool found = false;
  std::vector<int> subset;
  for (int k = 0; k <= budget; ++k) {
    for (std::uint64_t r = 0; r < values[k].size(); ++r) {
      if (values[k][r] < best - kTieTolerance) continue;
      UnrankCombination(n, k, r, subset);
      if (!found || std::lexicographical_compare(subset.begin(), subset.end(),
                                                 chosen.begin(), chosen.end())) {
        chosen = subset;
        found = true;
      }
    }
  }

  SolveResult result;
  result.plan = eval.Plan(chosen);
  result.value = eval.Value(chosen);
  result.method = SolveMethod::kExact;
  result.evaluations = evaluations;
  result.chosen = std::move(chosen);
  result.elapsed = Clock::now() - start;
  return result;
}

// Lowest rank r with values[r] >= threshold, or nothing.
std::optional<std::uint64_t> FirstReaching(const std::vector<double>& values,
                                           double threshold) {
  for (std::uint64_t r = 0; r < values.size(); ++r) {
    if (values[r] >= threshold) return r;
  }
  return std::nullopt;
}

}  // namespace

std::string ToString(SolveMethod method) {
  return method == SolveMethod::kExact ? "exact" : "greedy";
}

std::uint64_t SubsetCount(int candidates, int budget) {
  std::uint64_t total = 0;
  for (int k = 0; k <= std::min(budget, candidates); ++k) {
    const std::uint64_t c = Binomial(candidates, k);
    if (c == kSaturated || total > kSaturated - c) return kSaturated;
    total += c;
  }
  return total;
}

SolveResult SolveExact(const UmeInstance& inst, const ExactOptions& options) {
  return SolveExactWith(inst, options, &EvaluateAllParallel);
}

SolveResult SolveExactSerial(const UmeInstance& inst,
                             const ExactOptions& options) {
  return SolveExactWith(inst, options, &EvaluateAllSerial);
}

SolveResult SolveGreedy(const UmeInstance& inst) {
  const auto start = Clock::now();
  SubsetEvaluator eval(inst);
  const int n = eval.candidate_count();
  const int budget = eval.budget();

  std::vector<int> chosen;
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  double current = eval.Value(chosen);
  std::uint64_t evaluations = 1;
  std::vector<double> gains(static_cast<std::size_t>(n));
  while (static_cast<int>(chosen.size()) < budget) {
    ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < n; ++c) {
      if (taken[c]) continue;
      try {
        std::vector<int> trial = chosen;
        trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
        gains[c] = eval.Value(trial) - current;
      } catch (...) {
        errors.Capture();
      }
    }
    errors.RethrowIfAny();
    evaluations += static_cast<std::uint64_t>(n) - chosen.size();

    int pick = -1;
    for (int c = 0; c < n; ++c) {
      if (!taken[c] && (pick < 0 || gains[c] > gains[pick])) pick = c;
    }
    if (pick < 0 || gains[pick] <= kGreedyMinGain) break;
    taken[pick] = 1;
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), pick), pick);
    current = eval.Value(chosen);
    ++evaluations;
  }

  SolveResult result;
  result.plan = eval.Plan(chosen);
  result.value = current;
  result.method = SolveMethod::kGreedy;
  result.evaluations = evaluations;
  result.chosen = std::move(chosen);
  result.elapsed = Clock::now() - start;
  return result;
}

Decision DecidePerfect(const UmeInstance& inst, double tol,
                       const ExactOptions& options) {
  SubsetEvaluator eval(inst);
  const int n = eval.candidate_count();
  const int budget = eval.budget();
  CheckCap(n, budget, options.subset_cap);

  Decision decision;
  decision.value = -std::numeric_limits<double>::infinity();
  std::vector<double> values;
  for (int k = 0; k <= budget; ++k) {
    EvaluateAllParallel(eval, k, values);
    decision.evaluations += values.size();
    for (double v : values) decision.value = std::max(decision.value, v);
    if (auto r = FirstReaching(values, 1.0 - tol)) {
      UnrankCombination(n, k, *r, decision.chosen);
      decision.yes = true;
      decision.value = values[*r];
      decision.witness = eval.Plan(decision.chosen);
      return decision;
    }
  }
  decision.witness = eval.Plan({});
  return decision;
}

Decision DecidePerfectSerial(const UmeInstance& inst, double tol,
                             const ExactOptions& options) {
  SubsetEvaluator eval(inst);
  const int n = eval.candidate_count();
  const int budget = eval.budget();
  CheckCap(n, budget, options.subset_cap);

  Decision decision;
  decision.value = -std::numeric_limits<double>::infinity();
  std::vector<int> subset;
  for (int k = 0; k <= budget; ++k) {
    UnrankCombination(n, k, 0, subset);
    do {
      const double v = eval.Value(subset);
      ++decision.evaluations;
      decision.value = std::max(decision.value, v);
      if (v >= 1.0 - tol) {
        decision.yes = true;
        decision.value = v;
        decision.chosen = subset;
        decision.witness = eval.Plan(subset);
        return decision;
      }
    } while (NextCombination(n, subset));
  }
  decision.witness = eval.Plan({});
  return decision;
}

}  // namespace ume
