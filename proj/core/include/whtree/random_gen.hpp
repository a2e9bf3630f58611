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
#include <vector>

#include "whtree/tree.hpp"
#include "whtree/tuple.hpp"

namespace wht {

// splitmix64. Draws are modulo-bounded on purpose: unlike the std
// distributions, the output stream is identical on every platform, which
// the CLI's byte-identical-output contract relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return next() & 1; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

// A degree sequence with every entry >= 1 summing to 2(n-1): start from all
// ones and spread the remaining n-2 increments uniformly. Every valid
// sequence is reachable. Requires n >= 2.
std::vector<int> random_degree_sequence(Rng& rng, int n);

struct TupleGenOptions {
  int min_vertices = 5;
  int max_vertices = 9;
  int max_weight = 20;    // weights land in [0, max_weight]
  int max_denominator = 4;
  bool force_ties = false;  // small weight alphabet to provoke ties
};

// Degree-monotone tuple: internal weights are assigned sorted against the
// degree order, pendent weights are strictly positive.
GeneratingTuple random_monotone_tuple(Rng& rng, const TupleGenOptions& opt);

// Non-monotone tuple: requires at least two distinct internal degrees and
// inverts an internal weight against the degree order. Retries degree
// sequences until an inversion is possible (n >= 5 recommended).
GeneratingTuple random_nonmonotone_tuple(Rng& rng, const TupleGenOptions& opt);

// Uniform member of the tuple's tree class via a shuffled Prufer sequence.
WeightedTree random_tree(Rng& rng, const GeneratingTuple& tuple);

// Decodes a Prufer sequence (each internal vertex appearing degree-1 times)
// into the unique labeled tree with those degrees.
WeightedTree prufer_decode(const std::vector<VertexId>& seq,
                           const std::vector<Weight>& weights);

}  // namespace wht
