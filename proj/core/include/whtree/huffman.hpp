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

#include <vector>

#include "whtree/indices.hpp"
#include "whtree/tree.hpp"

namespace wht {

// One construction step: a star merged around `center`. At steps 1..q-1 the
// star has degree(center)-1 leaves; the final star uses the full degree.
// total_weight is the star's vertex weight sum under the step's tuple.
struct Star {
  VertexId center;
  std::vector<VertexId> leaves;
  Weight total_weight;
};

// The construction trace S_1..S_q. intermediate_tuples holds the tuple
// snapshots <mu^i, d^i> for i = 1..q (index 0 = the input tuple) and is
// only populated when build_huffman is asked to record it; the snapshots
// cost O(q * |V|) memory.
struct StarSequence {
  std::vector<Star> stars;
  std::vector<GeneratingTuple> intermediate_tuples;
};

struct HuffmanResult {
  WeightedTree tree;
  RootedTree rooted;   // directed toward the final star's center
  StarSequence sequence;
  FVector fvec;        // star totals of S_1..S_{q-1}, non-decreasing
  IndexValue vwwi;
  // Optimality holds only for degree-monotone tuples; the construction
  // itself is well defined either way.
  bool optimality_guaranteed;
};

// Definition 6. Center: the internal vertex minimizing (weight, degree, id)
// lexicographically; leaves: the degree(center)-1 pendent vertices
// minimizing (weight, id). Throws NoInternalVertex when q = 0.
Star minimal_star(const GeneratingTuple& tuple);

// The generalized Huffman construction. Deterministic under the id
// tie-breaks; O(|V| log |V|) with lazy-deletion heaps. A 2-vertex tuple
// (q = 0) short-circuits to the single-edge tree.
HuffmanResult build_huffman(const GeneratingTuple& tuple, bool record_trace = false);

// Huffman membership via f-vector equality: every Huffman tree of a tuple
// has the same f-vector, and any tree attaining it is itself Huffman, so
// the test is whether some internal rooting of `tree` produces that vector.
// Throws TupleMismatch if the tree does not match the tuple.
bool is_huffman(const WeightedTree& tree, const GeneratingTuple& tuple);

}  // namespace wht
