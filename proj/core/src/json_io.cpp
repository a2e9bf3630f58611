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

#include "whtree/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "whtree/error.hpp"

namespace wht {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());  // carries the byte position
  }
}

Weight parse_weight_field(const json& v, const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Weight(v.get<long long>());
  throw Error(ErrorCode::ParseError,
              where + ": weight must be a string like \"3/2\" or an integer");
}

void expect_version(const json& doc, const std::string& what) {
  if (!doc.is_object())
    throw Error(ErrorCode::ParseError, what + ": top level must be an object");
  if (!doc.contains("version") || doc["version"] != "1")
    throw Error(ErrorCode::ParseError, what + ": missing or unsupported \"version\" (expected \"1\")");
}

}  // namespace

GeneratingTuple parse_tuple_document(std::string_view text) {
  json doc = parse_json(text);
  expect_version(doc, "tuple document");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::ParseError, "tuple document: \"vertices\" array is required");
  std::vector<RawVertex> raw;
  std::size_t i = 0;
  for (const json& v : doc["vertices"]) {
    const std::string where = "vertices[" + std::to_string(i++) + "]";
    if (!v.is_object() || !v.contains("id") || !v.contains("weight") || !v.contains("degree"))
      throw Error(ErrorCode::ParseError, where + ": needs id, weight, degree");
    if (!v["id"].is_number_integer())
      throw Error(ErrorCode::ParseError, where + ".id: must be an integer");
    if (!v["degree"].is_number_integer())
      throw Error(ErrorCode::ParseError, where + ".degree: must be an integer");
    raw.push_back({v["id"].get<long long>(), parse_weight_field(v["weight"], where),
                   v["degree"].get<int>()});
  }
  return GeneratingTuple::validate(std::move(raw));
}

std::string serialize_tuple_document(const GeneratingTuple& tuple) {
  json doc;
  doc["version"] = "1";
  json vertices = json::array();
  for (VertexId v = 0; v < tuple.size(); ++v) {
    json entry;
    entry["id"] = tuple.original_id(v);
    entry["weight"] = tuple.weight(v).to_string();
    entry["degree"] = tuple.degree(v);
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  return doc.dump(2) + "\n";
}

ParsedTree parse_tree_document(std::string_view text) {
  json doc = parse_json(text);
  expect_version(doc, "tree document");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::ParseError, "tree document: \"vertices\" array is required");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw Error(ErrorCode::ParseError, "tree document: \"edges\" array is required");

  std::vector<std::pair<long long, Weight>> verts;
  std::size_t i = 0;
  for (const json& v : doc["vertices"]) {
    const std::string where = "vertices[" + std::to_string(i++) + "]";
    if (!v.is_object() || !v.contains("id") || !v.contains("weight"))
      throw Error(ErrorCode::ParseError, where + ": needs id and weight");
    if (!v["id"].is_number_integer())
      throw Error(ErrorCode::ParseError, where + ".id: must be an integer");
    verts.emplace_back(v["id"].get<long long>(), parse_weight_field(v["weight"], where));
  }
  std::sort(verts.begin(), verts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<long long, VertexId> dense;
  std::vector<long long> original_ids;
  std::vector<Weight> weights;
  for (auto& [id, w] : verts) {
    if (dense.count(id))
      throw Error(ErrorCode::DuplicateId, "duplicate vertex id " + std::to_string(id));
    dense[id] = static_cast<VertexId>(original_ids.size());
    original_ids.push_back(id);
    weights.push_back(std::move(w));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  i = 0;
  for (const json& e : doc["edges"]) {
    const std::string where = "edges[" + std::to_string(i++) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorCode::ParseError, where + ": must be a pair of vertex ids");
    long long a = e[0].get<long long>(), b = e[1].get<long long>();
    auto ia = dense.find(a), ib = dense.find(b);
    if (ia == dense.end() || ib == dense.end())
      throw Error(ErrorCode::ParseError, where + ": endpoint not in the vertex list");
    edges.emplace_back(ia->second, ib->second);
  }

  std::string metadata;
  if (doc.contains("metadata")) metadata = doc["metadata"].dump(2);
  return ParsedTree{WeightedTree(std::move(weights), std::move(edges)),
                    std::move(original_ids), std::move(metadata)};
}

namespace {

json tree_skeleton(const WeightedTree& tree, const std::vector<long long>& original_ids) {
  json doc;
  doc["version"] = "1";
  // Vertices ascending by document id; input order already is (dense ids are
  // assigned in ascending id order everywhere).
  json vertices = json::array();
  for (VertexId v = 0; v < tree.size(); ++v) {
    json entry;
    entry["id"] = original_ids[v];
    entry["weight"] = tree.weight(v).to_string();
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);

  std::vector<std::pair<long long, long long>> edges;
  for (auto [u, v] : tree.edges()) {
    long long a = original_ids[u], b = original_ids[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  json edges_json = json::array();
  for (auto [a, b] : edges) edges_json.push_back(json::array({a, b}));
  doc["edges"] = std::move(edges_json);
  return doc;
}

}  // namespace

std::string serialize_tree_document(const WeightedTree& tree,
                                    const std::vector<long long>& original_ids,
                                    const TreeMetadata& metadata) {
  json doc = tree_skeleton(tree, original_ids);
  json meta;
  if (metadata.vwwi) meta["vwwi"] = *metadata.vwwi;
  if (metadata.vwwi_pairwise) meta["vwwi_pairwise"] = *metadata.vwwi_pairwise;
  if (metadata.vwwi_rooted) meta["vwwi_rooted"] = *metadata.vwwi_rooted;
  if (metadata.wiener) meta["wiener"] = *metadata.wiener;
  if (metadata.gutman) meta["gutman"] = *metadata.gutman;
  if (metadata.fvec) meta["fvec"] = *metadata.fvec;
  if (metadata.root) meta["root"] = *metadata.root;
  if (metadata.is_huffman) meta["is_huffman"] = *metadata.is_huffman;
  if (metadata.is_proper) meta["is_proper"] = *metadata.is_proper;
  if (metadata.proper_root) meta["proper_root"] = *metadata.proper_root;
  if (metadata.optimality_guaranteed)
    meta["optimality_guaranteed"] = *metadata.optimality_guaranteed;
  if (metadata.star_sequence) {
    json stars = json::array();
    for (const StarTrace& s : *metadata.star_sequence) {
      json star;
      star["center"] = s.center;
      star["leaves"] = s.leaves;
      star["total_weight"] = s.total_weight;
      stars.push_back(std::move(star));
    }
    meta["star_sequence"] = std::move(stars);
  }
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

std::string serialize_tree_document_raw(const WeightedTree& tree,
                                        const std::vector<long long>& original_ids,
                                        const std::string& metadata_json) {
  json doc = tree_skeleton(tree, original_ids);
  doc["metadata"] = metadata_json.empty() ? json::object() : json::parse(metadata_json);
  return doc.dump(2) + "\n";
}

std::string to_dot(const WeightedTree& tree, const std::vector<long long>& original_ids) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (VertexId v = 0; v < tree.size(); ++v) {
    out << "  n" << original_ids[v] << " [label=\"" << original_ids[v] << " ("
        << tree.weight(v).to_string() << ")\"];\n";
  }
  std::vector<std::pair<long long, long long>> edges;
  for (auto [u, v] : tree.edges()) {
    long long a = original_ids[u], b = original_ids[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edgelist(const WeightedTree& tree, const std::vector<long long>& original_ids) {
  std::vector<std::pair<long long, long long>> edges;
  for (auto [u, v] : tree.edges()) {
    long long a = original_ids[u], b = original_ids[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  for (auto [a, b] : edges) out << a << " " << b << "\n";
  return out.str();
}

TreeMetadata metadata_for_build(const HuffmanResult& result,
                                const GeneratingTuple& tuple, bool include_trace) {
  TreeMetadata meta;
  meta.vwwi = result.vwwi.to_string();
  std::vector<std::string> fvec;
  fvec.reserve(result.fvec.size());
  for (const Weight& f : result.fvec) fvec.push_back(f.to_string());
  meta.fvec = std::move(fvec);
  meta.root = tuple.original_id(result.rooted.root());
  meta.optimality_guaranteed = result.optimality_guaranteed;
  if (include_trace) {
    std::vector<StarTrace> stars;
    stars.reserve(result.sequence.stars.size());
    for (const Star& s : result.sequence.stars) {
      StarTrace t;
      t.center = tuple.original_id(s.center);
      for (VertexId leaf : s.leaves) t.leaves.push_back(tuple.original_id(leaf));
      t.total_weight = s.total_weight.to_string();
      stars.push_back(std::move(t));
    }
    meta.star_sequence = std::move(stars);
  }
  return meta;
}

}  // namespace wht
