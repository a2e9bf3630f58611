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

#include <benchmark/benchmark.h>

#include <vector>

#include "whtree/huffman.hpp"
#include "whtree/indices.hpp"
#include "whtree/oracle.hpp"
#include "whtree/random_gen.hpp"

namespace {

using namespace wht;

GeneratingTuple synthetic_tuple(int n) {
  // Half the vertices (minus the spare) are internal of degree 3.
  const int q = (n - 2) / 2;
  Rng rng(99);
  std::vector<RawVertex> raw;
  raw.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (v < q)
      raw.push_back({v, Weight(1), 3});
    else
      raw.push_back({v, Weight(1 + static_cast<long long>(rng.below(5))), 1});
  }
  return GeneratingTuple::validate(std::move(raw));
}

void BM_BuildHuffman(benchmark::State& state) {
  GeneratingTuple tuple = synthetic_tuple(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HuffmanResult result = build_huffman(tuple);
    benchmark::DoNotOptimize(result.vwwi);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildHuffman)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_EdgeCutIndex(benchmark::State& state) {
  Rng rng(7);
  GeneratingTuple tuple = synthetic_tuple(static_cast<int>(state.range(0)));
  WeightedTree tree = random_tree(rng, tuple);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vwwi_edge_cut(tree));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeCutIndex)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_PairwiseIndex(benchmark::State& state) {
  Rng rng(7);
  GeneratingTuple tuple = synthetic_tuple(static_cast<int>(state.range(0)));
  WeightedTree tree = random_tree(rng, tuple);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vwwi_pairwise(tree));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseIndex)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_EnumerateClass(benchmark::State& state) {
  // Degrees (2,2,2,2,2,1,1): a 7-vertex path class of 120 labeled trees.
  std::vector<RawVertex> raw;
  for (int v = 0; v < 5; ++v) raw.push_back({v, Weight(1), 2});
  raw.push_back({5, Weight(1), 1});
  raw.push_back({6, Weight(1), 1});
  GeneratingTuple tuple = GeneratingTuple::validate(std::move(raw));
  for (auto _ : state) {
    long long n = 0;
    enumerate_trees(tuple, [&](const WeightedTree&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateClass);

}  // namespace

BENCHMARK_MAIN();
