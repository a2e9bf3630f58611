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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "support/oracles.hpp"
#include "whtree/error.hpp"
#include "whtree/huffman.hpp"
#include "whtree/random_gen.hpp"

using namespace wht;
using namespace wht::test;

TEST_CASE("minimal star: degree breaks weight ties, id breaks both") {
  GeneratingTuple t = worked_tuple();
  Star s = minimal_star(t);
  CHECK(s.center == 1);                        // equal weights, smaller degree
  CHECK(s.leaves == std::vector<VertexId>{2});  // the weight-1 pendent
  CHECK(s.total_weight == Weight(2));
}

TEST_CASE("minimal star: weight dominates degree") {
  GeneratingTuple t = quick_tuple(
      {{0, "5", 2}, {1, "3", 4}, {2, "1", 1}, {3, "1", 1}, {4, "1", 1}, {5, "1", 1}});
  CHECK(minimal_star(t).center == 1);  // weight 3 beats weight 5 despite degree
}

TEST_CASE("minimal star on a star tuple returns the only candidate") {
  GeneratingTuple t = quick_tuple({{0, "1", 3}, {1, "1", 1}, {2, "2", 1}, {3, "3", 1}});
  Star s = minimal_star(t);
  CHECK(s.center == 0);
  CHECK(s.leaves == std::vector<VertexId>{1, 2});  // d-1 lightest pendents
  CHECK(s.total_weight == Weight(4));
}

TEST_CASE("minimal star errors") {
  CHECK_THROWS_AS(minimal_star(quick_tuple({{0, "1", 1}, {1, "1", 1}})), Error);
}

TEST_CASE("worked example: tree, f-vector, index") {
  GeneratingTuple t = worked_tuple();
  HuffmanResult h = build_huffman(t, /*record_trace=*/true);

  auto edges = h.tree.canonical_edges();
  std::vector<std::pair<VertexId, VertexId>> expected{{0, 1}, {0, 3}, {0, 4}, {1, 2}};
  CHECK(edges == expected);
  CHECK(h.fvec == FVector{Weight(2)});
  CHECK(h.vwwi == IndexValue(46));
  CHECK(h.optimality_guaranteed);
  CHECK(h.rooted.root() == 0);
  CHECK(tree_matches_tuple(h.tree, t));
  CHECK(vwwi_pairwise(h.tree) == h.vwwi);
  CHECK(vwwi_rooted(h.rooted) == h.vwwi);

  // The first recorded star is the minimal star of the input tuple.
  Star first = minimal_star(t);
  CHECK(h.sequence.stars.front().center == first.center);
  CHECK(h.sequence.stars.front().leaves == first.leaves);
  CHECK(h.sequence.stars.front().total_weight == first.total_weight);
}

TEST_CASE("intermediate tuples follow the merge transition") {
  GeneratingTuple t = worked_tuple();
  HuffmanResult h = build_huffman(t, /*record_trace=*/true);
  const auto& snaps = h.sequence.intermediate_tuples;
  REQUIRE(snaps.size() == 2);  // q = 2
  CHECK(snaps[0] == t);

  // After merging S_1 = {center m2, leaf p(1)}: vertex 2 disappears, m2
  // becomes a pendent of weight 2, everything else is untouched.
  const GeneratingTuple& second = snaps[1];
  CHECK(second.size() == 4);
  std::map<long long, std::pair<Weight, int>> by_id;
  for (VertexId v = 0; v < second.size(); ++v)
    by_id[second.original_id(v)] = {second.weight(v), second.degree(v)};
  CHECK(by_id.count(2) == 0);
  CHECK(by_id.at(1) == std::make_pair(Weight(2), 1));
  CHECK(by_id.at(0) == std::make_pair(Weight(1), 3));
  CHECK(by_id.at(3) == std::make_pair(Weight(2), 1));
  CHECK(by_id.at(4) == std::make_pair(Weight(3), 1));
}

TEST_CASE("no trace recorded unless requested") {
  HuffmanResult h = build_huffman(worked_tuple());
  CHECK(h.sequence.intermediate_tuples.empty());
  CHECK(h.sequence.stars.size() == 2);
}

TEST_CASE("star tuple builds the unique star tree") {
  GeneratingTuple t = quick_tuple({{0, "1", 3}, {1, "1", 1}, {2, "2", 1}, {3, "3", 1}});
  HuffmanResult h = build_huffman(t);
  CHECK(h.fvec.empty());
  CHECK(h.tree.degree(0) == 3);
  CHECK(h.rooted.root() == 0);
}

TEST_CASE("two-vertex tuple short-circuits to the single edge") {
  GeneratingTuple t = quick_tuple({{0, "3", 1}, {1, "4", 1}});
  HuffmanResult h = build_huffman(t);
  CHECK(h.tree.size() == 2);
  CHECK(h.vwwi == IndexValue(12));
  CHECK(h.fvec.empty());
  CHECK(is_huffman(h.tree, t));
}

TEST_CASE("every step picks the minimal star of its intermediate tuple") {
  // The heap-based construction must agree with the direct-scan selector on
  // every recorded snapshot, not just the first.
  Rng rng(151);
  TupleGenOptions opt;
  opt.min_vertices = 5;
  opt.max_vertices = 11;
  opt.force_ties = true;  // ties are where the two paths could diverge
  for (int i = 0; i < 30; ++i) {
    GeneratingTuple t = random_monotone_tuple(rng, opt);
    HuffmanResult h = build_huffman(t, /*record_trace=*/true);
    const int q = t.num_internal();
    REQUIRE(static_cast<int>(h.sequence.intermediate_tuples.size()) == q);
    for (int step = 0; step < q - 1; ++step) {
      const GeneratingTuple& snap = h.sequence.intermediate_tuples[step];
      Star expect = minimal_star(snap);
      const Star& got = h.sequence.stars[step];
      CHECK(snap.original_id(expect.center) == got.center);
      REQUIRE(expect.leaves.size() == got.leaves.size());
      for (std::size_t k = 0; k < expect.leaves.size(); ++k)
        CHECK(snap.original_id(expect.leaves[k]) == got.leaves[k]);
      CHECK(expect.total_weight == got.total_weight);
    }
    // The reported f-vector is also the rooted tree's f-vector.
    CHECK(f_vector(h.rooted) == h.fvec);
  }
}

TEST_CASE("star totals are non-decreasing along the sequence") {
  Rng rng(47);
  TupleGenOptions opt;
  opt.min_vertices = 5;
  opt.max_vertices = 12;
  for (int i = 0; i < 40; ++i) {
    GeneratingTuple t = random_monotone_tuple(rng, opt);
    HuffmanResult h = build_huffman(t);
    for (std::size_t j = 0; j + 2 < h.sequence.stars.size(); ++j)
      CHECK(h.sequence.stars[j].total_weight <= h.sequence.stars[j + 1].total_weight);
    // fvec equals the star totals in construction order.
    for (std::size_t j = 0; j + 1 < h.sequence.stars.size(); ++j)
      CHECK(h.fvec[j] == h.sequence.stars[j].total_weight);
  }
}

TEST_CASE("leaf-order monotonicity across stars") {
  Rng rng(53);
  TupleGenOptions opt;
  opt.min_vertices = 5;
  opt.max_vertices = 12;
  for (int i = 0; i < 40; ++i) {
    GeneratingTuple t = random_monotone_tuple(rng, opt);
    HuffmanResult h = build_huffman(t);
    for (std::size_t a = 0; a < h.sequence.stars.size(); ++a)
      for (std::size_t b = a + 1; b < h.sequence.stars.size(); ++b)
        for (VertexId u : h.sequence.stars[a].leaves)
          for (VertexId v : h.sequence.stars[b].leaves)
            CHECK(h.rooted.f(u) <= h.rooted.f(v));
  }
}

TEST_CASE("arc monotonicity under degree-monotone weights") {
  Rng rng(59);
  TupleGenOptions opt;
  opt.min_vertices = 5;
  opt.max_vertices = 12;
  for (int i = 0; i < 40; ++i) {
    GeneratingTuple t = random_monotone_tuple(rng, opt);
    HuffmanResult h = build_huffman(t);
    const RootedTree& r = h.rooted;
    for (VertexId v = 0; v < r.size(); ++v) {
      if (r.is_root(v)) continue;
      for (VertexId w = 0; w < r.size(); ++w) {
        if (w == v || r.is_root(w) || r.parent(v) == r.parent(w)) continue;
        if (r.f(v) < r.f(w)) CHECK(r.f(r.parent(v)) < r.f(r.parent(w)));
      }
    }
  }
}

TEST_CASE("tie-break independence: relabeling never changes fvec or vwwi") {
  Rng rng(61);
  TupleGenOptions opt;
  opt.min_vertices = 5;
  opt.max_vertices = 10;
  opt.force_ties = true;
  for (int i = 0; i < 60; ++i) {
    GeneratingTuple t = random_monotone_tuple(rng, opt);
    HuffmanResult base = build_huffman(t);

    std::vector<long long> perm(t.size());
    for (int v = 0; v < t.size(); ++v) perm[v] = v;
    rng.shuffle(perm);
    std::vector<RawVertex> raw;
    for (VertexId v = 0; v < t.size(); ++v)
      raw.push_back({perm[v], t.weight(v), t.degree(v)});
    HuffmanResult permuted = build_huffman(GeneratingTuple::validate(std::move(raw)));

    CHECK(permuted.fvec == base.fvec);
    CHECK(permuted.vwwi == base.vwwi);
  }
}

TEST_CASE("huffman membership") {
  GeneratingTuple t = worked_tuple();
  HuffmanResult h = build_huffman(t);
  CHECK(is_huffman(h.tree, t));

  // Attach the weight-2 pendent to m2 instead: f-vector (3), not Huffman.
  WeightedTree alt = quick_tree({"1", "1", "1", "2", "3"},
                                {{0, 2}, {0, 4}, {0, 1}, {1, 3}});
  CHECK(f_vector(root_tree(alt, 0)) == FVector{Weight(3)});
  CHECK_FALSE(is_huffman(alt, t));

  // A star class has one element, so the star is trivially Huffman.
  GeneratingTuple star_tuple =
      quick_tuple({{0, "1", 3}, {1, "1", 1}, {2, "2", 1}, {3, "3", 1}});
  WeightedTree star = quick_tree({"1", "1", "2", "3"}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(is_huffman(star, star_tuple));

  CHECK_THROWS_AS(is_huffman(unit_path(5), t), Error);  // TupleMismatch
}

TEST_CASE("non-monotone tuples build but drop the optimality guarantee") {
  GeneratingTuple t = quick_tuple(
      {{0, "0", 4}, {1, "1", 2}, {2, "1", 1}, {3, "10", 1}, {4, "10", 1}, {5, "10", 1}});
  CHECK_FALSE(is_degree_monotone(t));
  HuffmanResult h = build_huffman(t);
  CHECK_FALSE(h.optimality_guaranteed);
  CHECK(tree_matches_tuple(h.tree, t));
}
