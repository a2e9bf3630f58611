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

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "whtree/tuple.hpp"

namespace wht {

// Ascending vector of subordinate-group weights of internal non-root
// vertices; the object compared under weak majorization.
using FVector = std::vector<Weight>;

// Undirected vertex-weighted tree on dense ids 0..|V|-1.
// Immutable after construction; copies are safe to share across threads.
class WeightedTree {
 public:
  // Validates: ids in range, no self-loops or duplicate edges,
  // |edges| = |vertices| - 1, connected.
  WeightedTree(std::vector<Weight> weights,
               std::vector<std::pair<VertexId, VertexId>> edges);

  int size() const { return static_cast<int>(weights_.size()); }
  const Weight& weight(VertexId v) const { return weights_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& total_weight() const { return total_weight_; }

  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
  }
  int degree(VertexId v) const { return adj_offset_[v + 1] - adj_offset_[v]; }
  bool is_internal(VertexId v) const { return degree(v) > 1; }

  // Edges as (min,max) pairs in lexicographic order; two trees in the same
  // class are equal iff their canonical edge lists are.
  std::vector<std::pair<VertexId, VertexId>> canonical_edges() const;

  // Weights plus observed degrees, external ids = dense ids.
  GeneratingTuple induced_tuple() const;

  bool operator==(const WeightedTree& o) const {
    return weights_ == o.weights_ && canonical_edges() == o.canonical_edges();
  }

 private:
  std::vector<Weight> weights_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexId> adj_;        // CSR neighbor lists
  std::vector<int> adj_offset_;
  Weight total_weight_;
};

// A tree directed toward an internal root, with subordinate-group weights
// f(v) = mu(v) + sum of f over the children of v; f(root) = mu_bar.
// The underlying tree is shared immutably, so copies are cheap.
class RootedTree {
 public:
  const WeightedTree& tree() const { return *tree_; }
  int size() const { return tree_->size(); }
  VertexId root() const { return root_; }
  bool is_root(VertexId v) const { return v == root_; }
  // -1 for the root.
  VertexId parent(VertexId v) const { return parent_[v]; }
  const std::vector<VertexId>& parents() const { return parent_; }
  const Weight& f(VertexId v) const { return f_[v]; }
  const std::vector<Weight>& f_all() const { return f_; }
  std::span<const VertexId> children(VertexId v) const {
    return {children_.data() + child_offset_[v], children_.data() + child_offset_[v + 1]};
  }
  // True iff u lies on the path from v to the root, v included.
  bool is_ancestor(VertexId u, VertexId v) const;

  friend RootedTree root_tree(const WeightedTree& tree, VertexId root);

 private:
  RootedTree() = default;
  void compute_structure();  // children CSR + f, from tree_/root_/parent_

  std::shared_ptr<const WeightedTree> tree_;
  VertexId root_ = -1;
  std::vector<VertexId> parent_;
  std::vector<Weight> f_;
  std::vector<VertexId> children_;
  std::vector<int> child_offset_;
  std::vector<VertexId> topo_;  // root first, every parent before its children

  friend RootedTree reroot_with_parents(std::shared_ptr<const WeightedTree> tree,
                                        VertexId root, std::vector<VertexId> parent);
};

// Orients the tree toward `root` and computes f bottom-up in one pass.
// Throws PendentRoot if root has degree 1 and |V| > 2, VertexNotInTree if
// out of range. A 2-vertex tree may be rooted at either endpoint.
RootedTree root_tree(const WeightedTree& tree, VertexId root);

// Internal-only rebuild used by the transform operations: trusts `parent` to
// describe a tree on the same vertex set and recomputes everything else.
RootedTree reroot_with_parents(std::shared_ptr<const WeightedTree> tree, VertexId root,
                               std::vector<VertexId> parent);

// Ascending f over internal non-root vertices; length q-1 (q >= 1).
FVector f_vector(const RootedTree& rooted);

// True iff vertex count, weights, and observed degrees agree exactly.
bool tree_matches_tuple(const WeightedTree& tree, const GeneratingTuple& tuple);

}  // namespace wht
