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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whtree/huffman.hpp"
#include "whtree/tree.hpp"
#include "whtree/tuple.hpp"

namespace wht {

// Documents are canonical: fixed field order, vertices ascending by id,
// edges as [min,max] pairs in lexicographic order, rationals rendered as
// lowest-terms strings. Identical inputs give byte-identical outputs.

// {"version":"1","vertices":[{"id":0,"weight":"1","degree":3},...]}
GeneratingTuple parse_tuple_document(std::string_view text);
std::string serialize_tuple_document(const GeneratingTuple& tuple);

struct ParsedTree {
  WeightedTree tree;
  std::vector<long long> original_ids;  // dense id -> document id
  // Canonicalized metadata block ("" when absent); kept so documents
  // round-trip byte-identically.
  std::string metadata_json;
};

// {"version":"1","vertices":[{"id":..,"weight":".."},...],"edges":[[a,b],..],
//  "metadata":{...}}
ParsedTree parse_tree_document(std::string_view text);

struct StarTrace {
  long long center;
  std::vector<long long> leaves;
  std::string total_weight;
};

struct TreeMetadata {
  std::optional<std::string> vwwi;
  std::optional<std::string> vwwi_pairwise;
  std::optional<std::string> vwwi_rooted;
  std::optional<std::string> wiener;
  std::optional<std::string> gutman;
  std::optional<std::vector<std::string>> fvec;
  std::optional<long long> root;
  std::optional<bool> is_huffman;
  std::optional<bool> is_proper;
  std::optional<long long> proper_root;
  std::optional<bool> optimality_guaranteed;
  std::optional<std::vector<StarTrace>> star_sequence;
};

std::string serialize_tree_document(const WeightedTree& tree,
                                    const std::vector<long long>& original_ids,
                                    const TreeMetadata& metadata);
// Re-embeds a previously parsed metadata block verbatim.
std::string serialize_tree_document_raw(const WeightedTree& tree,
                                        const std::vector<long long>& original_ids,
                                        const std::string& metadata_json);

// Graphviz export, vertex labels "id (weight)".
std::string to_dot(const WeightedTree& tree, const std::vector<long long>& original_ids);
// Flat "u v" lines, canonical order.
std::string to_edgelist(const WeightedTree& tree, const std::vector<long long>& original_ids);

TreeMetadata metadata_for_build(const HuffmanResult& result,
                                const GeneratingTuple& tuple, bool include_trace);

}  // namespace wht
