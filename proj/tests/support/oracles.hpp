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

// Test-only oracles. These deliberately use different algorithms than the
// library (Floyd-Warshall distances, path-membership subtree sums) so the
// values they produce are independent checks, not echoes.

#include <string>
#include <tuple>
#include <vector>

#include "whtree/rational.hpp"
#include "whtree/tree.hpp"
#include "whtree/tuple.hpp"

namespace wht::test {

inline std::vector<std::vector<int>> floyd_distances(const WeightedTree& t) {
  const int n = t.size();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : t.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Direct definition: sum mu(u) mu(v) d(u,v) over unordered pairs.
inline IndexValue naive_vwwi(const WeightedTree& t) {
  auto d = floyd_distances(t);
  IndexValue total;
  for (int u = 0; u < t.size(); ++u)
    for (int v = u + 1; v < t.size(); ++v)
      total += t.weight(u) * t.weight(v) * Weight(d[u][v]);
  return total;
}

// Subordinate-group weight of v under `root` by path membership: collect
// every vertex whose BFS path to the root passes through v.
inline Weight naive_subtree_weight(const WeightedTree& t, VertexId root, VertexId v) {
  const int n = t.size();
  Weight sum;
  for (VertexId u = 0; u < n; ++u) {
    // BFS path u -> root.
    std::vector<VertexId> pred(n, -2);
    std::vector<VertexId> queue{u};
    pred[u] = -1;
    for (std::size_t i = 0; i < queue.size() && pred[root] == -2; ++i) {
      for (VertexId w : t.neighbors(queue[i])) {
        if (pred[w] == -2) {
          pred[w] = queue[i];
          queue.push_back(w);
        }
      }
    }
    for (VertexId x = root; x != -1; x = pred[x]) {
      if (x == v) {
        sum += t.weight(u);
        break;
      }
    }
  }
  return sum;
}

inline GeneratingTuple quick_tuple(
    const std::vector<std::tuple<long long, std::string, int>>& entries) {
  std::vector<RawVertex> raw;
  for (const auto& [id, w, d] : entries) raw.push_back({id, Rational::parse(w), d});
  return GeneratingTuple::validate(std::move(raw));
}

inline WeightedTree quick_tree(const std::vector<std::string>& weights,
                               const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Weight> w;
  for (const std::string& s : weights) w.push_back(Rational::parse(s));
  return WeightedTree(std::move(w), edges);
}

inline WeightedTree unit_path(int n) {
  std::vector<Weight> w(n, Weight(1));
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return WeightedTree(std::move(w), std::move(e));
}

inline WeightedTree unit_star(int leaves) {
  std::vector<Weight> w(leaves + 1, Weight(1));
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return WeightedTree(std::move(w), std::move(e));
}

// The worked 5-vertex fixture: internals m1=(1,d3) id 0, m2=(1,d2) id 1,
// pendents 1,2,3 at ids 2,3,4.
inline GeneratingTuple worked_tuple() {
  return quick_tuple({{0, "1", 3}, {1, "1", 2}, {2, "1", 1}, {3, "2", 1}, {4, "3", 1}});
}

}  // namespace wht::test
