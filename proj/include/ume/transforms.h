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

// Node <-> edge interdiction equivalence. Both transforms preserve the
// optimal objective for equal budgets. Sites that must not be interdicted
// are given d = 0, which leaves M - M.r.d unchanged.

#ifndef UME_TRANSFORMS_H_
#define UME_TRANSFORMS_H_

#include "ume/instance.h"

namespace ume {

// Subdivides every edge i = (u, v) with a fresh node n + i. Evaders move
// u -> x with the original probability M_uv, then x -> v with probability 1.
// The hop x -> v carries d_uv; the original nodes' out-edges get d = 0.
// Throws InvalidArgument unless inst is a valid edge-mode instance.
UmeInstance EdgeToNodeInstance(const UmeInstance& inst);

// Splits every node u into u_in = u and u_out = n + u joined by an internal
// edge carrying u's interdiction. Former out-edges leave u_out with the
// original probabilities; only internal edges are sensor-eligible.
//
// Node interdiction detects on each out-edge with its own d_uv, which one
// internal edge can reproduce only when all of u's out-edges share one
// efficiency. Throws InvalidArgument when that does not hold, or unless inst
// is a valid node-mode instance.
UmeInstance NodeToEdgeInstance(const UmeInstance& inst);

}  // namespace ume

#endif  // UME_TRANSFORMS_H_
