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

#include "whtree/tree.hpp"

namespace wht {

// chi(x) = x * (mu_bar - x). Throws OutOfRange unless 0 <= x <= mu_bar.
IndexValue chi(const Weight& x, const Weight& mu_bar);

// Vertex-weighted Wiener index 1/2 * sum_{u,v} mu(u) mu(v) d(u,v), computed
// from the definition by one BFS per vertex. The O(|V|^2) reference route.
IndexValue vwwi_pairwise(const WeightedTree& tree);

// Same index via the edge-cut identity: every edge contributes the product
// of the total weights of its two sides. O(|V|), the fast route.
IndexValue vwwi_edge_cut(const WeightedTree& tree);

// Same index via the rooted formula: sum of chi(f(v)) over non-root v.
// Agrees with vwwi_pairwise for every admissible root.
IndexValue vwwi_rooted(const RootedTree& rooted);

// Classical Wiener index: all weights forced to 1.
IndexValue wiener_index(const WeightedTree& tree);
IndexValue wiener_index(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

// Gutman index: each weight replaced by the vertex's degree in the tree.
IndexValue gutman_index(const WeightedTree& tree);

}  // namespace wht
