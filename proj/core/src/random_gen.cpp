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

#include "whtree/random_gen.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "whtree/error.hpp"

namespace wht {

std::vector<int> random_degree_sequence(Rng& rng, int n) {
  std::vector<int> deg(n, 1);
  for (int i = 0; i < n - 2; ++i) ++deg[rng.below(n)];
  return deg;
}

namespace {

Weight random_weight(Rng& rng, const TupleGenOptions& opt, bool strictly_positive) {
  if (opt.force_ties) {
    // Tiny integer alphabet; repeats are the point.
    int lo = strictly_positive ? 1 : 0;
    return Weight(rng.range(lo, 3));
  }
  int den = rng.range(1, opt.max_denominator);
  long long max_num = static_cast<long long>(opt.max_weight) * den;
  long long lo = strictly_positive ? 1 : 0;
  long long num = lo + static_cast<long long>(rng.below(max_num - lo + 1));
  return Weight(BigInt(num), BigInt(static_cast<long long>(den)));
}

GeneratingTuple assemble(const std::vector<int>& deg, std::vector<Weight> internal_w,
                         Rng& rng, const TupleGenOptions& opt) {
  const int n = static_cast<int>(deg.size());
  std::vector<int> internals;
  for (int v = 0; v < n; ++v)
    if (deg[v] > 1) internals.push_back(v);
  // Pair ascending degrees with ascending weights.
  std::sort(internals.begin(), internals.end(),
            [&](int a, int b) { return deg[a] < deg[b]; });
  std::sort(internal_w.begin(), internal_w.end());

  std::vector<RawVertex> raw(n);
  for (int v = 0; v < n; ++v) raw[v] = {v, Weight{}, deg[v]};
  for (std::size_t i = 0; i < internals.size(); ++i)
    raw[internals[i]].weight = std::move(internal_w[i]);
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) raw[v].weight = random_weight(rng, opt, /*strictly_positive=*/true);
  return GeneratingTuple::validate(std::move(raw));
}

}  // namespace

GeneratingTuple random_monotone_tuple(Rng& rng, const TupleGenOptions& opt) {
  const int n = rng.range(opt.min_vertices, opt.max_vertices);
  std::vector<int> deg = random_degree_sequence(rng, n);
  int q = 0;
  for (int d : deg) q += d > 1;
  std::vector<Weight> internal_w;
  internal_w.reserve(q);
  for (int i = 0; i < q; ++i)
    internal_w.push_back(random_weight(rng, opt, /*strictly_positive=*/false));
  return assemble(deg, std::move(internal_w), rng, opt);
}

GeneratingTuple random_nonmonotone_tuple(Rng& rng, const TupleGenOptions& opt) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int n = rng.range(std::max(opt.min_vertices, 5), opt.max_vertices);
    std::vector<int> deg = random_degree_sequence(rng, n);
    std::vector<int> internals;
    for (int v = 0; v < n; ++v)
      if (deg[v] > 1) internals.push_back(v);
    std::sort(internals.begin(), internals.end(),
              [&](int a, int b) { return deg[a] < deg[b]; });
    if (internals.size() < 2 || deg[internals.front()] == deg[internals.back()])
      continue;  // an inversion needs two distinct internal degrees

    const int q = static_cast<int>(internals.size());
    std::vector<RawVertex> raw(n);
    for (int v = 0; v < n; ++v) raw[v] = {v, Weight{}, deg[v]};
    // Give the smallest-degree internal vertex a strictly larger weight than
    // some larger-degree one: weight q-1-i puts weights in strictly
    // descending degree order.
    for (int i = 0; i < q; ++i)
      raw[internals[i]].weight = Weight(q - 1 - i) + random_weight(rng, opt, false) * Weight(BigInt(1), BigInt(100));
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) raw[v].weight = random_weight(rng, opt, true);
    GeneratingTuple t = GeneratingTuple::validate(std::move(raw));
    if (!is_degree_monotone(t)) return t;
  }
  throw Error(ErrorCode::InvalidArgument,
              "could not build a non-monotone tuple within the attempt budget");
}

WeightedTree prufer_decode(const std::vector<VertexId>& seq,
                           const std::vector<Weight>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<int> deg(n, 1);
  for (VertexId v : seq) ++deg[v];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  for (VertexId a : seq) {
    VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, a);
    if (--deg[a] == 1) leaves.push(a);
  }
  VertexId u = leaves.top();
  leaves.pop();
  VertexId v = leaves.top();
  edges.emplace_back(u, v);
  return WeightedTree(weights, std::move(edges));
}

WeightedTree random_tree(Rng& rng, const GeneratingTuple& tuple) {
  std::vector<VertexId> seq;
  seq.reserve(tuple.size() - 2);
  for (VertexId m : tuple.internals())
    for (int k = 1; k < tuple.degree(m); ++k) seq.push_back(m);
  rng.shuffle(seq);
  return prufer_decode(seq, tuple.weights());
}

}  // namespace wht
