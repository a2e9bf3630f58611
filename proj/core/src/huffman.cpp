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

#include "whtree/huffman.hpp"

#include <algorithm>
#include <memory>
#include <queue>
#include <string>
#include <utility>

#include "whtree/error.hpp"

namespace wht {

namespace {

// Heap entries hold vertex ids only; keys live in the shared weight array.
// A vertex's weight mutates exactly once, between leaving the internal heap
// and entering the pendent pool, so no live entry's key ever changes.
struct PendentGreater {
  const std::vector<Weight>* weight;
  bool operator()(VertexId a, VertexId b) const {
    if (auto c = (*weight)[a] <=> (*weight)[b]; c != 0) return c > 0;
    return a > b;
  }
};

struct InternalGreater {
  const std::vector<Weight>* weight;
  const std::vector<int>* degree;
  bool operator()(VertexId a, VertexId b) const {
    if (auto c = (*weight)[a] <=> (*weight)[b]; c != 0) return c > 0;
    if ((*degree)[a] != (*degree)[b]) return (*degree)[a] > (*degree)[b];
    return a > b;
  }
};

GeneratingTuple snapshot_tuple(const GeneratingTuple& input,
                               const std::vector<char>& alive,
                               const std::vector<Weight>& cur_weight,
                               const std::vector<char>& merged) {
  std::vector<RawVertex> raw;
  for (VertexId v = 0; v < input.size(); ++v) {
    if (!alive[v]) continue;
    int degree = merged[v] ? 1 : input.degree(v);
    raw.push_back({input.original_id(v), cur_weight[v], degree});
  }
  return GeneratingTuple::validate(std::move(raw));
}

}  // namespace

Star minimal_star(const GeneratingTuple& tuple) {
  if (tuple.num_internal() == 0)
    throw Error(ErrorCode::NoInternalVertex, "tuple has no internal vertex");
  VertexId center = tuple.internals().front();
  for (VertexId m : tuple.internals()) {
    if (tuple.weight(m) < tuple.weight(center) ||
        (tuple.weight(m) == tuple.weight(center) &&
         (tuple.degree(m) < tuple.degree(center) ||
          (tuple.degree(m) == tuple.degree(center) && m < center))))
      center = m;
  }
  const int want = tuple.degree(center) - 1;
  if (want > tuple.num_pendent())
    throw Error(ErrorCode::NotEnoughPendents,
                "center of degree " + std::to_string(tuple.degree(center)) +
                    " needs " + std::to_string(want) + " pendent leaves, only " +
                    std::to_string(tuple.num_pendent()) + " available");
  std::vector<VertexId> pendents = tuple.pendents();
  std::sort(pendents.begin(), pendents.end(), [&](VertexId a, VertexId b) {
    if (auto c = tuple.weight(a) <=> tuple.weight(b); c != 0) return c < 0;
    return a < b;
  });
  Star star;
  star.center = center;
  star.total_weight = tuple.weight(center);
  star.leaves.assign(pendents.begin(), pendents.begin() + want);
  for (VertexId leaf : star.leaves) star.total_weight += tuple.weight(leaf);
  return star;
}

HuffmanResult build_huffman(const GeneratingTuple& tuple, bool record_trace) {
  const int n = tuple.size();
  const int q = tuple.num_internal();
  const bool monotone = is_degree_monotone(tuple);

  if (q == 0) {
    // |V| = 2: the class holds exactly one tree, a single edge. The rooted
    // form takes vertex 0 as root even though it is pendent.
    auto tree = std::make_shared<const WeightedTree>(
        tuple.weights(), std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
    RootedTree rooted = reroot_with_parents(tree, 0, {-1, 0});
    IndexValue vwwi = vwwi_rooted(rooted);
    return HuffmanResult{*tree, std::move(rooted), {}, {}, std::move(vwwi), monotone};
  }

  // cur_weight[v] is the step weight: merged centers re-enter as pendents
  // carrying their star's total weight.
  std::vector<Weight> cur_weight = tuple.weights();
  std::vector<char> alive(n, 1), merged(n, 0), consumed(n, 0);
  std::vector<VertexId> parent(n, -1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);

  std::priority_queue<VertexId, std::vector<VertexId>, InternalGreater> internal_heap(
      InternalGreater{&cur_weight, &tuple.degrees()},
      std::vector<VertexId>(tuple.internals()));
  std::priority_queue<VertexId, std::vector<VertexId>, PendentGreater> pendent_heap(
      PendentGreater{&cur_weight}, std::vector<VertexId>(tuple.pendents()));

  StarSequence sequence;
  sequence.stars.reserve(q);
  if (record_trace) {
    sequence.intermediate_tuples.reserve(q);
    sequence.intermediate_tuples.push_back(tuple);
  }

  auto pop_pendent = [&]() -> VertexId {
    while (!pendent_heap.empty()) {
      VertexId v = pendent_heap.top();
      pendent_heap.pop();
      if (!consumed[v]) return v;
    }
    throw Error(ErrorCode::NotEnoughPendents,
                "pendent pool exhausted mid-construction (corrupted state)");
  };

  for (int step = 1; step < q; ++step) {
    VertexId center = internal_heap.top();
    internal_heap.pop();
    const int center_degree = tuple.degree(center);

    Star star;
    star.center = center;
    star.total_weight = cur_weight[center];
    star.leaves.reserve(center_degree - 1);
    for (int k = 0; k + 1 < center_degree; ++k) {
      VertexId leaf = pop_pendent();
      consumed[leaf] = 1;
      alive[leaf] = 0;
      star.total_weight += cur_weight[leaf];
      parent[leaf] = center;
      edges.emplace_back(leaf, center);
      star.leaves.push_back(leaf);
    }

    merged[center] = 1;
    cur_weight[center] = star.total_weight;
    pendent_heap.push(center);
    sequence.stars.push_back(std::move(star));
    if (record_trace)
      sequence.intermediate_tuples.push_back(
          snapshot_tuple(tuple, alive, cur_weight, merged));
  }

  // Final star: the last internal vertex takes every remaining pendent.
  VertexId last = internal_heap.top();
  internal_heap.pop();
  Star final_star;
  final_star.center = last;
  final_star.total_weight = cur_weight[last];
  while (true) {
    while (!pendent_heap.empty() && consumed[pendent_heap.top()]) pendent_heap.pop();
    if (pendent_heap.empty()) break;
    VertexId leaf = pendent_heap.top();
    pendent_heap.pop();
    consumed[leaf] = 1;
    final_star.total_weight += cur_weight[leaf];
    parent[leaf] = last;
    edges.emplace_back(leaf, last);
    final_star.leaves.push_back(leaf);
  }
  if (static_cast<int>(final_star.leaves.size()) != tuple.degree(last))
    throw Error(ErrorCode::NotEnoughPendents,
                "final star has " + std::to_string(final_star.leaves.size()) +
                    " leaves, expected " + std::to_string(tuple.degree(last)));
  sequence.stars.push_back(std::move(final_star));

  FVector fvec;
  fvec.reserve(q - 1);
  for (int i = 0; i + 1 < q; ++i) fvec.push_back(sequence.stars[i].total_weight);
  // Non-decreasing already (star weights grow along the sequence); the sort
  // pins the FVector contract.
  std::sort(fvec.begin(), fvec.end());

  cur_weight.clear();
  cur_weight.shrink_to_fit();
  auto tree = std::make_shared<const WeightedTree>(tuple.weights(), std::move(edges));
  RootedTree rooted = reroot_with_parents(tree, last, std::move(parent));
  IndexValue vwwi = vwwi_rooted(rooted);

  return HuffmanResult{*tree,           std::move(rooted), std::move(sequence),
                       std::move(fvec), std::move(vwwi),   monotone};
}

bool is_huffman(const WeightedTree& tree, const GeneratingTuple& tuple) {
  if (!tree_matches_tuple(tree, tuple))
    throw Error(ErrorCode::TupleMismatch,
                "tree does not induce the given generating tuple");
  if (tuple.num_internal() == 0) return true;  // |V| = 2, unique tree
  FVector huffman_fvec = build_huffman(tuple).fvec;
  // The f-vector excludes whichever internal vertex is the root, so try
  // every internal rooting; a non-member cannot attain the vector under any
  // of them.
  for (VertexId r : tuple.internals()) {
    if (f_vector(root_tree(tree, r)) == huffman_fvec) return true;
  }
  return false;
}

}  // namespace wht
