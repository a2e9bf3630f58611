// Copyright 2026 The whtree Authors
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

#pragma once

#include <utility>
#include <vector>

#include "whtree/tree.hpp"

namespace wht {

// Arc-rewiring exchange operations. Each preserves every vertex's weight
// and degree; structurally invalid specs are refused rather than repaired
// (PreconditionViolated names the failed clause).
enum class SwapKind {
  // Swap the outbound arcs of two vertices on disjoint root paths.
  OutboundExchange,
  // Exchange the tree positions of two vertices. Equal degrees swap every
  // incident arc (the vertices may lie on a common root path); when
  // degree(b) > degree(a), all of a's children move to b and degree(a)-1 of
  // b's children (smallest ids) move to a, so both keep their degrees.
  PositionExchange,
  // Reverse the arc a->b (parent b) when degree(a) > degree(b), rebalancing
  // children between the two so the degree sequence is preserved.
  ArcReversalRebalance,
};

struct SwapSpec {
  SwapKind kind;
  VertexId a = -1;
  VertexId b = -1;
};

struct RollupResult {
  RootedTree reduced;
  GeneratingTuple induced;
  // old_ids[new dense id] = vertex id in the input rooted tree.
  std::vector<VertexId> old_ids;
};

// Definition 13: delete the subordinate group of m except m itself and give
// m the group's weight. Throws NotInternal for pendent m, CannotRollupRoot
// for m == root (the result would not be a tree on >= 2 vertices).
RollupResult rollup(const RootedTree& rooted, VertexId m);

RootedTree apply_swap(const RootedTree& rooted, const SwapSpec& spec);

// Proper tree: every f-vector entry is at most half the total weight.
bool is_proper(const RootedTree& rooted);

// Smallest-id internal vertex whose rooting is proper; existence is
// guaranteed for |V| >= 3 (weighted-centroid argument).
VertexId proper_root(const WeightedTree& tree);

}  // namespace wht
