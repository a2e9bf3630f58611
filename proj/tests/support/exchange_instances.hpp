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

// Instance finders for the exchange property tests: given a rooted tree,
// locate vertex pairs (or arcs) satisfying the hypotheses under which each
// transformation strictly improves the f-vector. The finders check the
// hypotheses exhaustively; the tests then assert the majorization verdict
// after apply_swap.

#include <optional>
#include <vector>

#include "whtree/random_gen.hpp"
#include "whtree/transforms.hpp"
#include "whtree/tree.hpp"

namespace wht::test {

// Path from v (exclusive) up to `top` (exclusive); empty if parent(v) == top.
inline std::vector<VertexId> interior_path(const RootedTree& t, VertexId v, VertexId top) {
  std::vector<VertexId> out;
  for (VertexId x = t.parent(v); x != top; x = t.parent(x)) out.push_back(x);
  return out;
}

inline VertexId lca(const RootedTree& t, VertexId a, VertexId b) {
  std::vector<char> seen(t.size(), 0);
  for (VertexId x = a; x != -1; x = t.parent(x)) seen[x] = 1;
  for (VertexId x = b; x != -1; x = t.parent(x))
    if (seen[x]) return x;
  return -1;
}

struct PairPaths {
  VertexId meet;
  std::vector<VertexId> via_a;  // m_1..m_k, from a toward meet
  std::vector<VertexId> via_b;  // m_1'..m_l'
};

// Disjoint-path data for a pair neither of which is the root or an ancestor
// of the other.
inline std::optional<PairPaths> disjoint_paths(const RootedTree& t, VertexId a, VertexId b) {
  if (a == b || t.is_root(a) || t.is_root(b)) return std::nullopt;
  VertexId meet = lca(t, a, b);
  if (meet == a || meet == b) return std::nullopt;
  return PairPaths{meet, interior_path(t, a, meet), interior_path(t, b, meet)};
}

inline bool prefix_dominates(const RootedTree& t, const std::vector<VertexId>& via_a,
                             const std::vector<VertexId>& via_b, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i)
    if (t.f(via_a[i]) < t.f(via_b[i])) return false;
  return true;
}

// Disjoint paths with 1 <= k <= l interior vertices, f(v) < f(v'),
// f(m_i) >= f(m_i') along the shorter side.
inline std::optional<SwapSpec> find_outbound_exchange_deep(const RootedTree& t) {
  for (VertexId v = 0; v < t.size(); ++v) {
    for (VertexId w = 0; w < t.size(); ++w) {
      auto paths = disjoint_paths(t, v, w);
      if (!paths) continue;
      const std::size_t k = paths->via_a.size(), l = paths->via_b.size();
      if (k < 1 || k > l) continue;
      if (!(t.f(v) < t.f(w))) continue;
      if (!prefix_dominates(t, paths->via_a, paths->via_b, k)) continue;
      return SwapSpec{SwapKind::OutboundExchange, v, w};
    }
  }
  return std::nullopt;
}

// Direct arc v->m against a path (v', m_1'..m_l', m) with l >= 1 and
// f(v) < f(v').
inline std::optional<SwapSpec> find_outbound_exchange_shallow(const RootedTree& t) {
  for (VertexId v = 0; v < t.size(); ++v) {
    for (VertexId w = 0; w < t.size(); ++w) {
      auto paths = disjoint_paths(t, v, w);
      if (!paths) continue;
      if (!paths->via_a.empty() || paths->via_b.empty()) continue;
      if (!(t.f(v) < t.f(w))) continue;
      return SwapSpec{SwapKind::OutboundExchange, v, w};
    }
  }
  return std::nullopt;
}

// Needs degree-monotone weights: internal v, v' with d(v') > d(v),
// disjoint paths with k <= l, f(v) >= f(v'), f(m_i) >= f(m_i').
inline std::optional<SwapSpec> find_position_exchange(const RootedTree& t) {
  for (VertexId v = 0; v < t.size(); ++v) {
    if (!t.tree().is_internal(v)) continue;
    for (VertexId w = 0; w < t.size(); ++w) {
      if (!t.tree().is_internal(w)) continue;
      if (t.tree().degree(w) <= t.tree().degree(v)) continue;
      auto paths = disjoint_paths(t, v, w);
      if (!paths) continue;
      const std::size_t k = paths->via_a.size(), l = paths->via_b.size();
      if (k > l) continue;
      if (t.f(v) < t.f(w)) continue;
      if (!prefix_dominates(t, paths->via_a, paths->via_b, k)) continue;
      return SwapSpec{SwapKind::PositionExchange, v, w};
    }
  }
  return std::nullopt;
}

// Needs degree-monotone weights: an arc m->m' with degree(m) > degree(m').
inline std::optional<SwapSpec> find_arc_reversal(const RootedTree& t) {
  for (VertexId m = 0; m < t.size(); ++m) {
    if (t.is_root(m)) continue;
    VertexId mp = t.parent(m);
    if (t.tree().degree(m) > t.tree().degree(mp))
      return SwapSpec{SwapKind::ArcReversalRebalance, m, mp};
  }
  return std::nullopt;
}

struct FoundInstance {
  RootedTree rooted;
  SwapSpec spec;
};

// Draws random trees from random degree-monotone tuples until `finder`
// produces an instance. Monotone tuples satisfy every finder's weight
// hypotheses (the two degree-sensitive transformations require them, the
// others accept them).
template <typename Finder>
std::optional<FoundInstance> search_instance(Rng& rng, const Finder& finder,
                                             int tree_attempts = 4000) {
  TupleGenOptions opt;
  opt.min_vertices = 6;
  opt.max_vertices = 12;
  for (int i = 0; i < tree_attempts; ++i) {
    GeneratingTuple tuple = random_monotone_tuple(rng, opt);
    if (tuple.num_internal() < 2) continue;
    WeightedTree tree = random_tree(rng, tuple);
    const auto& internals = tuple.internals();
    VertexId root = internals[rng.below(internals.size())];
    RootedTree rooted = root_tree(tree, root);
    if (auto spec = finder(rooted)) return FoundInstance{std::move(rooted), *spec};
  }
  return std::nullopt;
}

}  // namespace wht::test
