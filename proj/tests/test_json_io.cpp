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

#include <string>

#include "support/oracles.hpp"
#include "whtree/error.hpp"
#include "whtree/json_io.hpp"

using namespace wht;
using namespace wht::test;

namespace {

const char* kTupleDoc = R"({
  "version": "1",
  "vertices": [
    {"id": 0, "weight": "1", "degree": 3},
    {"id": 1, "weight": "1", "degree": 2},
    {"id": 2, "weight": "1", "degree": 1},
    {"id": 3, "weight": "2", "degree": 1},
    {"id": 4, "weight": "3", "degree": 1}
  ]
})";

}  // namespace

TEST_CASE("tuple document parses to the worked tuple") {
  GeneratingTuple t = parse_tuple_document(kTupleDoc);
  CHECK(t == worked_tuple());
  CHECK(t.total_weight() == Weight(8));
}

TEST_CASE("tuple document round trip is byte identical") {
  GeneratingTuple t = parse_tuple_document(kTupleDoc);
  std::string canonical = serialize_tuple_document(t);
  CHECK(serialize_tuple_document(parse_tuple_document(canonical)) == canonical);
}

TEST_CASE("weights parse from strings, fractions, decimals, and integers") {
  GeneratingTuple t = parse_tuple_document(R"({
    "version": "1",
    "vertices": [
      {"id": 0, "weight": "3/2", "degree": 1},
      {"id": 1, "weight": 2, "degree": 1}
    ]
  })");
  CHECK(t.weight(0) == Rational::parse("3/2"));
  CHECK(t.weight(1) == Weight(2));
}

TEST_CASE("tuple parse errors carry positions or paths") {
  CHECK_THROWS_AS(parse_tuple_document("not json"), Error);
  CHECK_THROWS_AS(parse_tuple_document(R"({"vertices": []})"), Error);
  CHECK_THROWS_AS(parse_tuple_document(R"({"version":"1"})"), Error);
  try {
    parse_tuple_document(R"({"version":"1","vertices":[{"id":0,"weight":true,"degree":1}]})");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("vertices[0]") != std::string::npos);
  }
  try {
    parse_tuple_document("{ bad");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("tree document round trip preserves bytes") {
  GeneratingTuple t = worked_tuple();
  WeightedTree tree = quick_tree({"1", "1", "1", "2", "3"},
                                 {{0, 3}, {0, 4}, {0, 1}, {1, 2}});
  TreeMetadata meta;
  meta.vwwi = "46";
  meta.fvec = std::vector<std::string>{"2"};
  std::string doc = serialize_tree_document(tree, t.original_ids(), meta);

  ParsedTree parsed = parse_tree_document(doc);
  CHECK(parsed.tree == tree);
  std::string again =
      serialize_tree_document_raw(parsed.tree, parsed.original_ids, parsed.metadata_json);
  CHECK(again == doc);
}

TEST_CASE("tree documents relabel sparse ids") {
  ParsedTree parsed = parse_tree_document(R"({
    "version": "1",
    "vertices": [{"id": 10, "weight": "1"}, {"id": -3, "weight": "2"}],
    "edges": [[10, -3]]
  })");
  CHECK(parsed.original_ids == std::vector<long long>{-3, 10});
  CHECK(parsed.tree.weight(0) == Weight(2));
}

TEST_CASE("tree parse errors") {
  CHECK_THROWS_AS(parse_tree_document(R"({"version":"1","vertices":[]})"), Error);
  CHECK_THROWS_AS(parse_tree_document(R"({
    "version": "1",
    "vertices": [{"id":0,"weight":"1"},{"id":1,"weight":"1"}],
    "edges": [[0, 7]]
  })"), Error);
  // A cycle shows up as an edge-count violation.
  try {
    parse_tree_document(R"({
      "version": "1",
      "vertices": [{"id":0,"weight":"1"},{"id":1,"weight":"1"},{"id":2,"weight":"1"}],
      "edges": [[0,1],[1,2],[2,0]]
    })");
    FAIL("expected EdgeCountMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EdgeCountMismatch);
  }
}

TEST_CASE("dot export") {
  WeightedTree tree = quick_tree({"1", "3/2"}, {{0, 1}});
  std::string dot = to_dot(tree, {0, 1});
  CHECK(dot ==
        "graph tree {\n"
        "  n0 [label=\"0 (1)\"];\n"
        "  n1 [label=\"1 (3/2)\"];\n"
        "  n0 -- n1;\n"
        "}\n");
}

TEST_CASE("edge list export uses original ids in canonical order") {
  WeightedTree tree = quick_tree({"1", "1", "1"}, {{1, 2}, {0, 1}});
  CHECK(to_edgelist(tree, {5, 8, 11}) == "5 8\n8 11\n");
}
