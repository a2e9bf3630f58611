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

#include "whtree/rational.hpp"

namespace wht {

// Dense vertex index, 0..|V|-1 after validation.
using VertexId = std::int32_t;

struct RawVertex {
  long long id;     // external id, may be sparse or negative
  Weight weight;
  int degree;
};

// A weight/degree assignment on a vertex set satisfying the tree degree
// identity sum(d) = 2(|V|-1). Immutable after validation; external ids are
// relabeled to dense 0-based ids in ascending order of the originals.
class GeneratingTuple {
 public:
  // Throws Error with one of: DuplicateId, TooFewVertices, NonPositiveDegree,
  // NegativeWeight, DegreeIdentityViolated.
  static GeneratingTuple validate(std::vector<RawVertex> raw);

  int size() const { return static_cast<int>(weights_.size()); }
  const Weight& weight(VertexId v) const { return weights_[v]; }
  int degree(VertexId v) const { return degrees_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::vector<int>& degrees() const { return degrees_; }

  // Pendent set W (degree 1) and internal set M (degree > 1), ascending ids.
  const std::vector<VertexId>& pendents() const { return pendents_; }
  const std::vector<VertexId>& internals() const { return internals_; }
  int num_pendent() const { return static_cast<int>(pendents_.size()); }   // n
  int num_internal() const { return static_cast<int>(internals_.size()); } // q
  bool is_pendent(VertexId v) const { return degrees_[v] == 1; }
  bool is_internal(VertexId v) const { return degrees_[v] > 1; }

  const Weight& total_weight() const { return total_weight_; }  // mu_bar

  long long original_id(VertexId v) const { return original_ids_[v]; }
  const std::vector<long long>& original_ids() const { return original_ids_; }

  bool operator==(const GeneratingTuple& o) const {
    return weights_ == o.weights_ && degrees_ == o.degrees_ &&
           original_ids_ == o.original_ids_;
  }

 private:
  GeneratingTuple() = default;

  std::vector<Weight> weights_;
  std::vector<int> degrees_;
  std::vector<long long> original_ids_;
  std::vector<VertexId> pendents_;
  std::vector<VertexId> internals_;
  Weight total_weight_;
};

// Definition 4: among internal vertices, a smaller degree never carries a
// larger weight, and every pendent vertex has strictly positive weight.
bool is_degree_monotone(const GeneratingTuple& tuple);

}  // namespace wht
