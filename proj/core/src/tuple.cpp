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

#include "whtree/tuple.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "whtree/error.hpp"

namespace wht {

GeneratingTuple GeneratingTuple::validate(std::vector<RawVertex> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const RawVertex& a, const RawVertex& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].id == raw[i - 1].id)
      throw Error(ErrorCode::DuplicateId,
                  "duplicate vertex id " + std::to_string(raw[i].id));
  }
  if (raw.size() < 2)
    throw Error(ErrorCode::TooFewVertices,
                "a generating tuple needs at least 2 vertices, got " +
                    std::to_string(raw.size()));

  long long degree_sum = 0;
  for (const RawVertex& v : raw) {
    if (v.degree < 1)
      throw Error(ErrorCode::NonPositiveDegree,
                  "vertex " + std::to_string(v.id) + " has degree " +
                      std::to_string(v.degree) + ", expected >= 1");
    if (v.weight.sign() < 0)
      throw Error(ErrorCode::NegativeWeight,
                  "vertex " + std::to_string(v.id) + " has negative weight " +
                      v.weight.to_string());
    degree_sum += v.degree;
  }
  const long long required = 2 * (static_cast<long long>(raw.size()) - 1);
  if (degree_sum != required)
    throw Error(ErrorCode::DegreeIdentityViolated,
                "degree identity violated: sum=" + std::to_string(degree_sum) +
                    ", required=" + std::to_string(required));

  GeneratingTuple t;
  t.weights_.reserve(raw.size());
  t.degrees_.reserve(raw.size());
  t.original_ids_.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    t.weights_.push_back(std::move(raw[i].weight));
    t.degrees_.push_back(raw[i].degree);
    t.original_ids_.push_back(raw[i].id);
    t.total_weight_ += t.weights_.back();
    if (raw[i].degree == 1)
      t.pendents_.push_back(static_cast<VertexId>(i));
    else
      t.internals_.push_back(static_cast<VertexId>(i));
  }
  return t;
}

bool is_degree_monotone(const GeneratingTuple& tuple) {
  for (VertexId w : tuple.pendents()) {
    if (tuple.weight(w).sign() <= 0) return false;
  }
  // Sort internals by degree; the running max weight of strictly smaller
  // degrees must not exceed any weight at a larger degree.
  std::vector<VertexId> internals = tuple.internals();
  std::sort(internals.begin(), internals.end(), [&](VertexId a, VertexId b) {
    return tuple.degree(a) < tuple.degree(b);
  });
  const Weight* prev_max = nullptr;
  std::size_t i = 0;
  while (i < internals.size()) {
    std::size_t j = i;
    const Weight* block_min = &tuple.weight(internals[i]);
    const Weight* block_max = block_min;
    while (j < internals.size() &&
           tuple.degree(internals[j]) == tuple.degree(internals[i])) {
      const Weight& w = tuple.weight(internals[j]);
      if (w < *block_min) block_min = &w;
      if (w > *block_max) block_max = &w;
      ++j;
    }
    if (prev_max && *block_min < *prev_max) return false;
    if (!prev_max || *block_max > *prev_max) prev_max = block_max;
    i = j;
  }
  return true;
}

}  // namespace wht
