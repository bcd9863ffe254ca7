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

#ifndef UME_COLORING_H_
#define UME_COLORING_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ume/graph.h"

namespace ume {

enum class Color : std::uint8_t { kWhite = 0, kRed = 1, kGreen = 2, kBlack = 3 };

inline constexpr int kColorCount = 4;

std::string ToString(Color c);
std::optional<Color> ParseColor(std::string_view text);

struct ColorAssignment {
  std::vector<Color> colors;  // indexed by node

  Color operator[](NodeId u) const { return colors[u]; }
  friend bool operator==(const ColorAssignment&,
                         const ColorAssignment&) = default;
};

struct ColoringOptions {
  std::chrono::milliseconds time_budget{30'000};
  std::uint64_t seed = 0;  // permutes DSATUR tie-breaking
};

// Proper coloring with at most four colors. Exact DSATUR backtracking; a
// vertex with all four colors in its neighborhood first tries a Kempe-chain
// interchange before the search backtracks. Singletons are white.
// Throws ColoringTimeoutError when no coloring is found within the budget.
ColorAssignment FourColor(const UndirectedGraph& g,
                          const ColoringOptions& options = {});

struct ColoringCheck {
  bool proper = true;
  std::vector<Edge> violations;  // monochromatic edges
};

// Throws MissingColorError unless f assigns a color to every node.
ColoringCheck VerifyColoring(const UndirectedGraph& g, const ColorAssignment& f);

int ColorsUsed(const ColorAssignment& f);

}  // namespace ume

#endif  // UME_COLORING_H_
