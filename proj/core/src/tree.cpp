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

#include "whtree/tree.hpp"

#include <algorithm>
#include <string>

#include "whtree/error.hpp"

namespace wht {

WeightedTree::WeightedTree(std::vector<Weight> weights,
                           std::vector<std::pair<VertexId, VertexId>> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const int n = static_cast<int>(weights_.size());
  if (static_cast<int>(edges_.size()) != n - 1)
    throw Error(ErrorCode::EdgeCountMismatch,
                "a tree on " + std::to_string(n) + " vertices needs " +
                    std::to_string(n - 1) + " edges, got " +
                    std::to_string(edges_.size()));

  adj_offset_.assign(n + 1, 0);
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::InvalidEdge,
                  "edge endpoint out of range: (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    if (u == v)
      throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    ++adj_offset_[u + 1];
    ++adj_offset_[v + 1];
  }
  for (int i = 0; i < n; ++i) adj_offset_[i + 1] += adj_offset_[i];
  adj_.resize(2 * edges_.size());
  std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
  for (auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }

  // Connectivity (together with |E| = |V|-1 this also rules out duplicate
  // edges, which would force a disconnected remainder).
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n)
    throw Error(ErrorCode::NotConnected,
                "graph is not connected: reached " + std::to_string(reached) +
                    " of " + std::to_string(n) + " vertices");

  for (const Weight& w : weights_) total_weight_ += w;
}

std::vector<std::pair<VertexId, VertexId>> WeightedTree::canonical_edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

GeneratingTuple WeightedTree::induced_tuple() const {
  std::vector<RawVertex> raw;
  raw.reserve(weights_.size());
  for (int v = 0; v < size(); ++v)
    raw.push_back({v, weights_[v], degree(v)});
  return GeneratingTuple::validate(std::move(raw));
}

void RootedTree::compute_structure() {
  const int n = tree_->size();
  topo_.clear();
  topo_.reserve(n);
  topo_.push_back(root_);
  for (std::size_t i = 0; i < topo_.size(); ++i) {
    VertexId v = topo_[i];
    for (VertexId u : tree_->neighbors(v)) {
      if (u != parent_[v]) topo_.push_back(u);
    }
  }
  if (static_cast<int>(topo_.size()) != n)
    throw Error(ErrorCode::PreconditionViolated,
                "parent map does not describe a tree rooted at " +
                    std::to_string(root_));

  child_offset_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    if (v != root_) ++child_offset_[parent_[v] + 1];
  for (int i = 0; i < n; ++i) child_offset_[i + 1] += child_offset_[i];
  children_.resize(n - 1);
  std::vector<int> cursor(child_offset_.begin(), child_offset_.end() - 1);
  for (VertexId v = 0; v < n; ++v)
    if (v != root_) children_[cursor[parent_[v]]++] = v;

  f_.assign(n, Weight{});
  for (std::size_t i = topo_.size(); i-- > 0;) {
    VertexId v = topo_[i];
    Weight acc = tree_->weight(v);
    for (VertexId c : children(v)) acc += f_[c];
    f_[v] = std::move(acc);
  }
}

bool RootedTree::is_ancestor(VertexId u, VertexId v) const {
  for (VertexId x = v; x != -1; x = parent_[x])
    if (x == u) return true;
  return false;
}

RootedTree root_tree(const WeightedTree& tree, VertexId root) {
  const int n = tree.size();
  if (root < 0 || root >= n)
    throw Error(ErrorCode::VertexNotInTree,
                "root " + std::to_string(root) + " is not a vertex of the tree");
  if (n > 2 && tree.degree(root) == 1)
    throw Error(ErrorCode::PendentRoot,
                "root " + std::to_string(root) + " is pendent (degree 1)");

  RootedTree r;
  r.tree_ = std::make_shared<const WeightedTree>(tree);
  r.root_ = root;
  r.parent_.assign(n, -1);
  // BFS orientation toward the root.
  std::vector<VertexId> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    for (VertexId u : tree.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        r.parent_[u] = v;
        order.push_back(u);
      }
    }
  }
  r.compute_structure();
  return r;
}

RootedTree reroot_with_parents(std::shared_ptr<const WeightedTree> tree, VertexId root,
                               std::vector<VertexId> parent) {
  RootedTree r;
  r.tree_ = std::move(tree);
  r.root_ = root;
  r.parent_ = std::move(parent);
  r.compute_structure();
  return r;
}

FVector f_vector(const RootedTree& rooted) {
  FVector out;
  for (VertexId v = 0; v < rooted.size(); ++v) {
    if (v != rooted.root() && rooted.tree().is_internal(v))
      out.push_back(rooted.f(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool tree_matches_tuple(const WeightedTree& tree, const GeneratingTuple& tuple) {
  if (tree.size() != tuple.size()) return false;
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) != tuple.degree(v)) return false;
    if (tree.weight(v) != tuple.weight(v)) return false;
  }
  return true;
}

}  // namespace wht
