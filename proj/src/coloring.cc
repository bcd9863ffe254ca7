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

#include "ume/coloring.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "ume/errors.h"

namespace ume {
namespace {

constexpr int kUncolored = -1;

class DsaturSearch {
 public:
  DsaturSearch(const UndirectedGraph& g, const ColoringOptions& options)
      : g_(g),
        n_(g.node_count()),
        color_(static_cast<std::size_t>(n_), kUncolored),
        around_(static_cast<std::size_t>(n_), {0, 0, 0, 0}),
        rank_(static_cast<std::size_t>(n_)),
        deadline_(std::chrono::steady_clock::now() + options.time_budget) {
    std::iota(rank_.begin(), rank_.end(), 0);
    std::mt19937_64 rng(options.seed);
    std::shuffle(rank_.begin(), rank_.end(), rng);
    for (NodeId u = 0; u < n_; ++u) {
      if (g_.Degree(u) == 0) {
        color_[u] = 0;
      } else {
        ++remaining_;
      }
    }
  }

  std::vector<int> Run() {
    if (!Search()) {
      // A complete search that fails means the graph needs five colors.
      throw ColoringTimeoutError("graph is not 4-colorable");
    }
    return color_;
  }

 private:
  int Saturation(NodeId u) const {
    int s = 0;
    for (int c = 0; c < kColorCount; ++c) s += around_[u][c] > 0 ? 1 : 0;
    return s;
  }

  std::size_t UncoloredDegree(NodeId u) const {
    std::size_t d = 0;
    for (NodeId w : g_.Neighbors(u)) d += color_[w] == kUncolored ? 1 : 0;
    return d;
  }

  NodeId PickVertex() const {
    NodeId best = -1;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (NodeId u = 0; u < n_; ++u) {
      if (color_[u] != kUncolored) continue;
      const int sat = Saturation(u);
      const std::size_t deg = UncoloredDegree(u);
      if (best < 0 || sat > best_sat || (sat == best_sat && deg > best_deg) ||
          (sat == best_sat && deg == best_deg && rank_[u] < rank_[best])) {
        best = u;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void Assign(NodeId u, int c) {
    color_[u] = c;
    for (NodeId w : g_.Neighbors(u)) ++around_[w][c];
  }

  void Unassign(NodeId u) {
    const int c = color_[u];
    for (NodeId w : g_.Neighbors(u)) --around_[w][c];
    color_[u] = kUncolored;
  }

  void Recolor(NodeId u, int c) {
    Unassign(u);
    Assign(u, c);
  }

  void CheckDeadline() {
    if ((++steps_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw ColoringTimeoutError("no 4-coloring found within the time budget");
    }
  }

  // Colored vertices reachable from the seeds through colors {a, b}.
  std::vector<NodeId> KempeComponent(const std::vector<NodeId>& seeds, int a,
                                     int b) const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<NodeId> stack = seeds;
    std::vector<NodeId> component;
    for (NodeId s : seeds) seen[s] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (NodeId w : g_.Neighbors(u)) {
        if (!seen[w] && (color_[w] == a || color_[w] == b)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return component;
  }

  // Tries to free color a at v by swapping a <-> b on the Kempe chains of
  // v's a-colored neighbors. Returns the swapped vertices, or nothing when
  // the chains also reach a b-colored neighbor of v.
  std::optional<std::vector<NodeId>> TryKempe(NodeId v, int a, int b) {
    std::vector<NodeId> seeds;
    for (NodeId w : g_.Neighbors(v)) {
      if (color_[w] == a) seeds.push_back(w);
    }
    std::vector<NodeId> chain = KempeComponent(seeds, a, b);
    for (NodeId u : chain) {
      if (color_[u] == b && g_.HasEdge(u, v)) return std::nullopt;
    }
    for (NodeId u : chain) Recolor(u, color_[u] == a ? b : a);
    return chain;
  }

  bool Search() {
    if (remaining_ == 0) return true;
    CheckDeadline();
    const NodeId v = PickVertex();
    --remaining_;
    bool any_free = false;
    for (int c = 0; c < kColorCount; ++c) {
      if (around_[v][c] != 0) continue;
      any_free = true;
      Assign(v, c);
      if (Search()) return true;
      Unassign(v);
    }
    if (!any_free) {
      for (int a = 0; a < kColorCount; ++a) {
        for (int b = 0; b < kColorCount; ++b) {
          if (a == b) continue;
          auto swapped = TryKempe(v, a, b);
          if (!swapped) continue;
          Assign(v, a);
          if (Search()) return true;
          Unassign(v);
          for (NodeId u : *swapped) Recolor(u, color_[u] == a ? b : a);
        }
      }
    }
    ++remaining_;
    return false;
  }

  const UndirectedGraph& g_;
  NodeId n_;
  std::vector<int> color_;
  std::vector<std::array<int, kColorCount>> around_;
  std::vector<NodeId> rank_;
  std::chrono::steady_clock::time_point deadline_;
  NodeId remaining_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace

std::string ToString(Color c) {
  switch (c) {
    case Color::kWhite:
      return "white";
    case Color::kRed:
      return "red";
    case Color::kGreen:
      return "green";
    case Color::kBlack:
      return "black";
  }
  return "?";
}

std::optional<Color> ParseColor(std::string_view text) {
  if (text == "white" || text == "w") return Color::kWhite;
  if (text == "red" || text == "r") return Color::kRed;
  if (text == "green" || text == "g") return Color::kGreen;
  if (text == "black" || text == "b") return Color::kBlack;
  return std::nullopt;
}

ColorAssignment FourColor(const UndirectedGraph& g,
                          const ColoringOptions& options) {
  DsaturSearch search(g, options);
  const std::vector<int> raw = search.Run();
  ColorAssignment f;
  f.colors.reserve(raw.size());
  for (int c : raw) f.colors.push_back(static_cast<Color>(c));
  // The search never returns an improper assignment; keep it that way.
  if (!VerifyColoring(g, f).proper) {
    throw ImproperColoringError("internal error: improper coloring produced");
  }
  return f;
}

ColoringCheck VerifyColoring(const UndirectedGraph& g,
                             const ColorAssignment& f) {
  if (f.colors.size() != static_cast<std::size_t>(g.node_count())) {
    throw MissingColorError("coloring covers " +
                            std::to_string(f.colors.size()) + " of " +
                            std::to_string(g.node_count()) + " nodes");
  }
  ColoringCheck check;
  for (const Edge& e : g.edges()) {
    if (f[e.from] == f[e.to]) check.violations.push_back(e);
  }
  check.proper = check.violations.empty();
  return check;
}

int ColorsUsed(const ColorAssignment& f) {
  std::array<bool, kColorCount> used{};
  for (Color c : f.colors) used[static_cast<int>(c)] = true;
  return static_cast<int>(std::count(used.begin(), used.end(), true));
}

}  // namespace ume
