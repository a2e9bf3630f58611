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

#include "whtree/indices.hpp"

#include <algorithm>
#include <vector>

#include "whtree/error.hpp"

namespace wht {

IndexValue chi(const Weight& x, const Weight& mu_bar) {
  if (x.sign() < 0 || x > mu_bar)
    throw Error(ErrorCode::OutOfRange,
                "chi argument " + x.to_string() + " outside [0, " +
                    mu_bar.to_string() + "]");
  return x * (mu_bar - x);
}

IndexValue vwwi_pairwise(const WeightedTree& tree) {
  const int n = tree.size();
  IndexValue total;
  std::vector<int> dist(n);
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    // BFS distances from s.
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    order.push_back(s);
    dist[s] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      VertexId v = order[i];
      for (VertexId u : tree.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          order.push_back(u);
        }
      }
    }
    IndexValue inner;
    for (VertexId u = 0; u < n; ++u)
      inner += tree.weight(u) * Weight(dist[u]);
    total += tree.weight(s) * inner;
  }
  return total / IndexValue(2);
}

IndexValue vwwi_edge_cut(const WeightedTree& tree) {
  const int n = tree.size();
  // Subtree sums from an arbitrary anchor; the edge to the parent separates
  // the subtree from the rest.
  std::vector<VertexId> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  order.reserve(n);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    for (VertexId u : tree.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        order.push_back(u);
      }
    }
  }
  std::vector<Weight> sub(tree.weights());
  for (std::size_t i = order.size(); i-- > 1;) {
    VertexId v = order[i];
    sub[parent[v]] += sub[v];
  }
  const Weight& mu_bar = tree.total_weight();
  IndexValue total;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Weight& s = sub[order[i]];
    total += s * (mu_bar - s);
  }
  return total;
}

IndexValue vwwi_rooted(const RootedTree& rooted) {
  const Weight& mu_bar = rooted.tree().total_weight();
  IndexValue total;
  for (VertexId v = 0; v < rooted.size(); ++v) {
    if (v == rooted.root()) continue;
    total += chi(rooted.f(v), mu_bar);
  }
  return total;
}

IndexValue wiener_index(const WeightedTree& tree) {
  std::vector<Weight> unit(tree.size(), Weight(1));
  return vwwi_pairwise(WeightedTree(std::move(unit), tree.edges()));
}

IndexValue wiener_index(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Weight> unit(n, Weight(1));
  return vwwi_pairwise(WeightedTree(std::move(unit), edges));
}

IndexValue gutman_index(const WeightedTree& tree) {
  std::vector<Weight> degw;
  degw.reserve(tree.size());
  for (VertexId v = 0; v < tree.size(); ++v) degw.emplace_back(tree.degree(v));
  return vwwi_pairwise(WeightedTree(std::move(degw), tree.edges()));
}

}  // namespace wht
