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

#include "whtree/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "whtree/error.hpp"
#include "whtree/random_gen.hpp"

namespace wht {

std::uint64_t default_enum_cap() {
  if (const char* env = std::getenv("WH_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ull;
}

BigInt count_trees(const GeneratingTuple& tuple) {
  BigInt count = factorial(static_cast<unsigned>(tuple.size() - 2));
  for (VertexId m : tuple.internals())
    count /= factorial(static_cast<unsigned>(tuple.degree(m) - 1));
  return count;
}

bool count_trees_exceeds(const GeneratingTuple& tuple, std::uint64_t cap) {
  // Multinomial as a product of binomials over the slots taken by each
  // internal vertex; partial products are integers and non-decreasing,
  // so we can stop as soon as the cap is passed.
  const BigInt cap_big(static_cast<unsigned long long>(cap));
  BigInt product(1);
  unsigned used = 0;
  for (VertexId m : tuple.internals()) {
    unsigned k = static_cast<unsigned>(tuple.degree(m) - 1);
    used += k;
    product *= binomial(used, k);
    if (product > cap_big) return true;
  }
  return false;
}

TreeEnumerator::TreeEnumerator(const GeneratingTuple& tuple, std::uint64_t cap)
    : tuple_(tuple) {
  if (count_trees_exceeds(tuple, cap))
    throw Error(ErrorCode::EnumerationCapExceeded,
                "class of " + count_trees(tuple).to_decimal() +
                    " trees exceeds the enumeration cap of " + std::to_string(cap));
  for (VertexId m : tuple_.internals())
    for (int k = 1; k < tuple_.degree(m); ++k) seq_.push_back(m);
  // Already sorted ascending: internals() is ascending and repeats are runs.
}

std::optional<WeightedTree> TreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    if (!std::next_permutation(seq_.begin(), seq_.end())) {
      done_ = true;
      return std::nullopt;
    }
  }
  first_ = false;
  return prufer_decode(seq_, tuple_.weights());
}

void enumerate_trees(const GeneratingTuple& tuple,
                     const std::function<void(const WeightedTree&)>& sink,
                     std::uint64_t cap) {
  TreeEnumerator en(tuple, cap);
  while (auto tree = en.next()) sink(*tree);
}

BruteForceReport brute_force_optimum(const GeneratingTuple& tuple, std::uint64_t cap,
                                     std::size_t argmin_cap) {
  BruteForceReport report{tuple, count_trees(tuple), IndexValue{}, {}, false,
                          IndexValue{}, false, false};

  HuffmanResult huffman = build_huffman(tuple);
  report.huffman_vwwi = huffman.vwwi;

  bool have_min = false;
  TreeEnumerator en(tuple, cap);
  while (auto tree = en.next()) {
    IndexValue value = vwwi_pairwise(*tree);
    if (!have_min || value < report.min_vwwi) {
      have_min = true;
      report.min_vwwi = std::move(value);
      report.argmin_trees.clear();
      report.argmin_overflow = false;
      report.argmin_trees.push_back(tree->canonical_edges());
    } else if (value == report.min_vwwi) {
      if (report.argmin_trees.size() < argmin_cap)
        report.argmin_trees.push_back(tree->canonical_edges());
      else
        report.argmin_overflow = true;
    }
  }
  std::sort(report.argmin_trees.begin(), report.argmin_trees.end());

  report.huffman_is_optimal = report.min_vwwi == report.huffman_vwwi;
  report.all_argmins_are_huffman = true;
  for (const auto& edges : report.argmin_trees) {
    WeightedTree candidate(tuple.weights(), edges);
    if (!is_huffman(candidate, tuple)) {
      report.all_argmins_are_huffman = false;
      break;
    }
  }
  return report;
}

std::optional<CounterexampleReport> find_counterexample(const SearchLimits& limits) {
  if (limits.max_vertices < 5)
    return std::nullopt;  // no inversion can matter below 5 vertices
  Rng rng(limits.seed);
  TupleGenOptions opt;
  opt.min_vertices = 5;
  opt.max_vertices = limits.max_vertices;
  opt.max_weight = limits.max_weight;
  for (int attempt = 1; attempt <= limits.attempts; ++attempt) {
    GeneratingTuple tuple = limits.monotone_only ? random_monotone_tuple(rng, opt)
                                                 : random_nonmonotone_tuple(rng, opt);
    BruteForceReport report = brute_force_optimum(tuple);
    if (!report.huffman_is_optimal) {
      CounterexampleReport found{
          std::move(tuple),
          report.huffman_vwwi,
          report.min_vwwi,
          report.huffman_vwwi - report.min_vwwi,
          WeightedTree(report.tuple.weights(), report.argmin_trees.front()),
          attempt};
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace wht
