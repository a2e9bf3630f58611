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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "whtree/huffman.hpp"
#include "whtree/tree.hpp"

namespace wht {

// Enumeration budget: WH_ENUM_CAP in the environment overrides the default
// of 10,000,000 labeled trees.
std::uint64_t default_enum_cap();

// |T(mu,d)| = (|V|-2)! / prod (d(v)-1)!, exactly.
BigInt count_trees(const GeneratingTuple& tuple);
// Early-exit cap check; never materializes the full factorial for large V.
bool count_trees_exceeds(const GeneratingTuple& tuple, std::uint64_t cap);

// Streams every labeled tree of the class exactly once, in lexicographic
// order of Prufer sequences. Throws EnumerationCapExceeded up front if the
// class is larger than `cap`.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(const GeneratingTuple& tuple,
                          std::uint64_t cap = default_enum_cap());
  // Returns trees until the class is exhausted.
  std::optional<WeightedTree> next();

 private:
  const GeneratingTuple& tuple_;
  std::vector<VertexId> seq_;
  bool done_ = false;
  bool first_ = true;
};

void enumerate_trees(const GeneratingTuple& tuple,
                     const std::function<void(const WeightedTree&)>& sink,
                     std::uint64_t cap = default_enum_cap());

struct BruteForceReport {
  GeneratingTuple tuple;
  BigInt trees_enumerated;
  IndexValue min_vwwi;
  // Canonical edge lists of the argmin trees, sorted; capped with a flag
  // because tie-heavy classes can explode.
  std::vector<std::vector<std::pair<VertexId, VertexId>>> argmin_trees;
  bool argmin_overflow = false;
  IndexValue huffman_vwwi;
  bool huffman_is_optimal = false;
  bool all_argmins_are_huffman = false;
};

constexpr std::size_t kDefaultArgminCap = 10000;

BruteForceReport brute_force_optimum(const GeneratingTuple& tuple,
                                     std::uint64_t cap = default_enum_cap(),
                                     std::size_t argmin_cap = kDefaultArgminCap);

struct SearchLimits {
  int max_vertices = 8;
  int attempts = 10000;
  std::uint64_t seed = 0;
  int max_weight = 20;
  // Negative control: restrict the search to degree-monotone tuples, where
  // the construction is provably optimal and no gap can exist.
  bool monotone_only = false;
};

struct CounterexampleReport {
  GeneratingTuple tuple;
  IndexValue huffman_vwwi;
  IndexValue oracle_min;
  IndexValue gap;  // huffman_vwwi - oracle_min > 0
  WeightedTree witness_tree;
  int attempts_used = 0;
};

// Randomized search (deterministic for a fixed seed) for a non-monotone
// tuple where the Huffman tree is strictly beaten by the oracle minimum.
// nullopt = budget exhausted, not an invariant violation.
std::optional<CounterexampleReport> find_counterexample(const SearchLimits& limits);

}  // namespace wht
