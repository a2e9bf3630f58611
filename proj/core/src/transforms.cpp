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

#include "whtree/transforms.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "whtree/error.hpp"

namespace wht {

namespace {

void require(bool condition, const std::string& clause) {
  if (!condition)
    throw Error(ErrorCode::PreconditionViolated, "precondition violated: " + clause);
}

void check_vertex(const RootedTree& rooted, VertexId v) {
  if (v < 0 || v >= rooted.size())
    throw Error(ErrorCode::VertexNotInTree,
                "vertex " + std::to_string(v) + " is not in the tree");
}

// Rebuilds the rooted tree from a parent array, verifying that per-vertex
// degrees are unchanged (the exchanges must not alter the tuple).
RootedTree rebuild(const RootedTree& before, const std::vector<VertexId>& parent,
                   VertexId root) {
  const int n = before.size();
  std::vector<int> new_degree(n, 0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (parent[v] < 0 || parent[v] >= n)
      throw Error(ErrorCode::PreconditionViolated,
                  "vertex " + std::to_string(v) + " lost its outbound arc");
    edges.emplace_back(v, parent[v]);
    ++new_degree[v];
    ++new_degree[parent[v]];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (new_degree[v] != before.tree().degree(v))
      throw Error(ErrorCode::WouldChangeDegrees,
                  "vertex " + std::to_string(v) + " would change degree from " +
                      std::to_string(before.tree().degree(v)) + " to " +
                      std::to_string(new_degree[v]));
  }
  auto tree = std::make_shared<const WeightedTree>(before.tree().weights(),
                                                   std::move(edges));
  return reroot_with_parents(std::move(tree), root, parent);
}

RootedTree outbound_exchange(const RootedTree& rooted, VertexId v, VertexId w) {
  require(v != w, "OutboundExchange needs two distinct vertices");
  require(!rooted.is_root(v) && !rooted.is_root(w),
          "OutboundExchange vertices must not be the root");
  require(!rooted.is_ancestor(v, w) && !rooted.is_ancestor(w, v),
          "OutboundExchange paths to the meet vertex must be disjoint");
  std::vector<VertexId> parent = rooted.parents();
  std::swap(parent[v], parent[w]);
  return rebuild(rooted, parent, rooted.root());
}

RootedTree position_exchange(const RootedTree& rooted, VertexId v, VertexId w) {
  require(v != w, "PositionExchange needs two distinct vertices");
  const int dv = rooted.tree().degree(v);
  const int dw = rooted.tree().degree(w);

  if (dv == dw) {
    // Swap every incident arc: relabel positions by the transposition (v w).
    auto sigma = [&](VertexId x) { return x == v ? w : x == w ? v : x; };
    std::vector<VertexId> parent(rooted.size(), -1);
    VertexId root = sigma(rooted.root());
    for (VertexId x = 0; x < rooted.size(); ++x) {
      if (rooted.is_root(x)) continue;
      parent[sigma(x)] = sigma(rooted.parent(x));
    }
    return rebuild(rooted, parent, root);
  }

  require(dw > dv,
          "PositionExchange with unequal degrees needs degree(b) > degree(a)");
  require(dv > 1 && dw > 1, "PositionExchange vertices must be internal");
  require(!rooted.is_root(v) && !rooted.is_root(w),
          "PositionExchange vertices must not be the root");
  require(!rooted.is_ancestor(v, w) && !rooted.is_ancestor(w, v),
          "PositionExchange paths to the meet vertex must be disjoint");

  std::vector<VertexId> parent = rooted.parents();
  std::swap(parent[v], parent[w]);
  // All of v's children move to w; the degree(v)-1 smallest-id children of w
  // move to v, the rest keep their arcs into w.
  for (VertexId c : rooted.children(v)) parent[c] = w;
  std::vector<VertexId> wc(rooted.children(w).begin(), rooted.children(w).end());
  std::sort(wc.begin(), wc.end());
  for (int i = 0; i < dv - 1; ++i) parent[wc[i]] = v;
  return rebuild(rooted, parent, rooted.root());
}

RootedTree arc_reversal_rebalance(const RootedTree& rooted, VertexId m, VertexId mp) {
  require(m != mp, "ArcReversalRebalance needs two distinct vertices");
  check_vertex(rooted, m);
  check_vertex(rooted, mp);
  require(rooted.parent(m) == mp,
          "ArcReversalRebalance needs the arc (a -> b) to exist");
  const int delta = rooted.tree().degree(m) - rooted.tree().degree(mp);
  require(delta > 0, "ArcReversalRebalance needs degree(a) > degree(b)");

  std::vector<VertexId> parent = rooted.parents();
  const bool mp_was_root = rooted.is_root(mp);
  VertexId root = rooted.root();

  // Reverse the arc; m takes mp's old outbound arc (or the root slot).
  parent[mp] = m;
  if (mp_was_root) {
    parent[m] = -1;
    root = m;
  } else {
    parent[m] = rooted.parent(mp);
  }

  // mp's other children move to m.
  int d = 0;
  for (VertexId c : rooted.children(mp)) {
    if (c == m) continue;
    parent[c] = m;
    ++d;
  }
  // Enough of m's children move back to mp to restore its degree.
  const int move_back = mp_was_root ? d : d + 1;
  std::vector<VertexId> mc(rooted.children(m).begin(), rooted.children(m).end());
  std::sort(mc.begin(), mc.end());
  for (int i = 0; i < move_back; ++i) parent[mc[i]] = mp;
  return rebuild(rooted, parent, root);
}

}  // namespace

RollupResult rollup(const RootedTree& rooted, VertexId m) {
  check_vertex(rooted, m);
  if (rooted.is_root(m))
    throw Error(ErrorCode::CannotRollupRoot,
                "rolling up at the root would delete every other vertex");
  if (!rooted.tree().is_internal(m))
    throw Error(ErrorCode::NotInternal,
                "rollup target " + std::to_string(m) + " is pendent");

  // Subordinate group of m.
  std::vector<char> in_group(rooted.size(), 0);
  std::vector<VertexId> stack{m};
  in_group[m] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId c : rooted.children(v)) {
      in_group[c] = 1;
      stack.push_back(c);
    }
  }

  std::vector<VertexId> old_ids;
  std::vector<VertexId> new_id(rooted.size(), -1);
  for (VertexId v = 0; v < rooted.size(); ++v) {
    if (!in_group[v] || v == m) {
      new_id[v] = static_cast<VertexId>(old_ids.size());
      old_ids.push_back(v);
    }
  }

  std::vector<Weight> weights;
  weights.reserve(old_ids.size());
  for (VertexId v : old_ids)
    weights.push_back(v == m ? rooted.f(m) : rooted.tree().weight(v));

  std::vector<VertexId> parent(old_ids.size(), -1);
  for (VertexId v : old_ids) {
    if (v == rooted.root()) continue;
    parent[new_id[v]] = new_id[rooted.parent(v)];
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(old_ids.size() - 1);
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    if (parent[i] != -1) edges.emplace_back(static_cast<VertexId>(i), parent[i]);
  }

  auto reduced_tree = std::make_shared<const WeightedTree>(std::move(weights),
                                                           std::move(edges));
  RootedTree reduced = reroot_with_parents(std::move(reduced_tree),
                                           new_id[rooted.root()], std::move(parent));

  std::vector<RawVertex> raw;
  raw.reserve(old_ids.size());
  for (std::size_t i = 0; i < old_ids.size(); ++i)
    raw.push_back({old_ids[i], reduced.tree().weight(static_cast<VertexId>(i)),
                   reduced.tree().degree(static_cast<VertexId>(i))});
  GeneratingTuple induced = GeneratingTuple::validate(std::move(raw));

  return RollupResult{std::move(reduced), std::move(induced), std::move(old_ids)};
}

RootedTree apply_swap(const RootedTree& rooted, const SwapSpec& spec) {
  check_vertex(rooted, spec.a);
  check_vertex(rooted, spec.b);
  switch (spec.kind) {
    case SwapKind::OutboundExchange:
      return outbound_exchange(rooted, spec.a, spec.b);
    case SwapKind::PositionExchange:
      return position_exchange(rooted, spec.a, spec.b);
    case SwapKind::ArcReversalRebalance:
      return arc_reversal_rebalance(rooted, spec.a, spec.b);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown swap kind");
}

bool is_proper(const RootedTree& rooted) {
  const Weight& mu_bar = rooted.tree().total_weight();
  for (VertexId v = 0; v < rooted.size(); ++v) {
    if (v == rooted.root() || !rooted.tree().is_internal(v)) continue;
    if (rooted.f(v) * Weight(2) > mu_bar) return false;
  }
  return true;
}

VertexId proper_root(const WeightedTree& tree) {
  const int n = tree.size();
  if (n < 3)
    throw Error(ErrorCode::InvalidArgument,
                "proper_root needs at least 3 vertices, got " + std::to_string(n));

  // Subtree sums from an arbitrary anchor give every directed component
  // weight in O(1).
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
  for (std::size_t i = order.size(); i-- > 1;) sub[parent[order[i]]] += sub[order[i]];

  const Weight& mu_bar = tree.total_weight();
  const Weight two(2);
  for (VertexId r = 0; r < n; ++r) {
    if (!tree.is_internal(r)) continue;
    bool ok = true;
    for (VertexId x : tree.neighbors(r)) {
      if (tree.degree(x) == 1) continue;  // single-pendent component, exempt
      const Weight component =
          parent[x] == r ? sub[x] : mu_bar - sub[r];
      if (component * two > mu_bar) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  throw Error(ErrorCode::InvalidArgument,
              "no proper root found (a weighted tree always has one)");
}

}  // namespace wht
