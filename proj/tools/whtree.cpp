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

// whtree: build minimum vertex-weighted Wiener index trees for a given
// weight/degree tuple, evaluate distance-based indices, and verify the
// construction against an exhaustive enumeration oracle.
//
// Exit codes: 0 success, 1 counterexample search exhausted, 2 user/parse/
// validation error, 3 optimality or majorization violation, 4 enumeration
// cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "whtree/error.hpp"
#include "whtree/huffman.hpp"
#include "whtree/indices.hpp"
#include "whtree/json_io.hpp"
#include "whtree/majorization.hpp"
#include "whtree/oracle.hpp"
#include "whtree/random_gen.hpp"
#include "whtree/transforms.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace wht;

constexpr int kExitUserError = 2;
constexpr int kExitViolation = 3;
constexpr int kExitCapExceeded = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json tuple_to_json(const GeneratingTuple& tuple) {
  json vertices = json::array();
  for (VertexId v = 0; v < tuple.size(); ++v) {
    json entry;
    entry["id"] = tuple.original_id(v);
    entry["weight"] = tuple.weight(v).to_string();
    entry["degree"] = tuple.degree(v);
    vertices.push_back(std::move(entry));
  }
  json doc;
  doc["version"] = "1";
  doc["vertices"] = std::move(vertices);
  return doc;
}

json tree_to_json(const WeightedTree& tree, const std::vector<long long>& ids) {
  json vertices = json::array();
  for (VertexId v = 0; v < tree.size(); ++v) {
    json entry;
    entry["id"] = ids[v];
    entry["weight"] = tree.weight(v).to_string();
    vertices.push_back(std::move(entry));
  }
  std::vector<std::pair<long long, long long>> edges;
  for (auto [u, v] : tree.edges())
    edges.emplace_back(std::min(ids[u], ids[v]), std::max(ids[u], ids[v]));
  std::sort(edges.begin(), edges.end());
  json edges_json = json::array();
  for (auto [a, b] : edges) edges_json.push_back(json::array({a, b}));
  json doc;
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges_json);
  return doc;
}

int cmd_build(const std::string& input, const std::string& format, bool trace) {
  GeneratingTuple tuple = parse_tuple_document(read_input(input));
  HuffmanResult result = build_huffman(tuple, trace);
  if (!result.optimality_guaranteed)
    std::cerr << "warning: weights are not degree-monotone; the built tree is "
                 "a Huffman tree but optimality is not guaranteed\n";
  if (format == "dot") {
    std::cout << to_dot(result.tree, tuple.original_ids());
  } else if (format == "edgelist") {
    std::cout << to_edgelist(result.tree, tuple.original_ids());
  } else {
    TreeMetadata meta = metadata_for_build(result, tuple, trace);
    std::cout << serialize_tree_document(result.tree, tuple.original_ids(), meta);
  }
  return 0;
}

int cmd_eval(const std::string& input, std::optional<long long> root_id,
             const std::string& format) {
  ParsedTree parsed = parse_tree_document(read_input(input));
  const WeightedTree& tree = parsed.tree;
  GeneratingTuple induced = tree.induced_tuple();

  IndexValue pairwise = vwwi_pairwise(tree);
  IndexValue edge_cut = vwwi_edge_cut(tree);
  if (pairwise != edge_cut) {
    std::cerr << "error: BFS and edge-cut backends disagree: " << pairwise
              << " vs " << edge_cut << "\n";
    return kExitViolation;
  }

  TreeMetadata meta;
  meta.vwwi = pairwise.to_string();
  meta.vwwi_pairwise = pairwise.to_string();

  VertexId root = -1;
  if (root_id) {
    for (VertexId v = 0; v < tree.size(); ++v)
      if (parsed.original_ids[v] == *root_id) root = v;
    if (root == -1)
      throw Error(ErrorCode::VertexNotInTree,
                  "--root " + std::to_string(*root_id) + " is not a vertex");
  } else if (tree.size() >= 3) {
    root = proper_root(tree);
  } else {
    root = 0;
  }
  RootedTree rooted = root_tree(tree, root);
  IndexValue rooted_value = vwwi_rooted(rooted);
  if (rooted_value != pairwise) {
    std::cerr << "error: rooted and pairwise values disagree: " << rooted_value
              << " vs " << pairwise << "\n";
    return kExitViolation;
  }
  meta.vwwi_rooted = rooted_value.to_string();
  meta.wiener = wiener_index(tree).to_string();
  meta.gutman = gutman_index(tree).to_string();
  std::vector<std::string> fvec;
  for (const Weight& f : f_vector(rooted)) fvec.push_back(f.to_string());
  meta.fvec = std::move(fvec);
  meta.root = parsed.original_ids[root];
  meta.is_proper = is_proper(rooted);
  if (tree.size() >= 3) meta.proper_root = parsed.original_ids[proper_root(tree)];
  meta.is_huffman = is_huffman(tree, induced);

  if (format == "dot") {
    std::cout << to_dot(tree, parsed.original_ids);
  } else if (format == "edgelist") {
    std::cout << to_edgelist(tree, parsed.original_ids);
  } else {
    std::cout << serialize_tree_document(tree, parsed.original_ids, meta);
  }
  return 0;
}

// One verification line per tuple: optimality via the brute-force oracle,
// majorization dominance against every enumerated rooting, and f-vector
// equality restricted to members of the optimal class.
struct VerifyOutcome {
  bool failed = false;
  bool cap_exceeded = false;
};

VerifyOutcome verify_tuple(int index, const GeneratingTuple& tuple) {
  VerifyOutcome outcome;
  json line;
  line["index"] = index;
  line["vertices"] = tuple.size();
  const bool monotone = is_degree_monotone(tuple);
  line["monotone"] = monotone;

  const std::uint64_t cap = default_enum_cap();
  if (count_trees_exceeds(tuple, cap)) {
    line["status"] = "CAP_EXCEEDED";
    // The exact count is only worth materializing for modest classes.
    if (tuple.size() <= 64) line["trees"] = count_trees(tuple).to_decimal();
    line["cap"] = cap;
    std::cout << line.dump() << "\n";
    outcome.cap_exceeded = true;
    return outcome;
  }

  BruteForceReport report = brute_force_optimum(tuple);
  line["trees"] = report.trees_enumerated.to_decimal();
  line["min_vwwi"] = report.min_vwwi.to_string();
  line["huffman_vwwi"] = report.huffman_vwwi.to_string();
  line["huffman_is_optimal"] = report.huffman_is_optimal;
  line["all_argmins_are_huffman"] = report.all_argmins_are_huffman;

  bool majorization_ok = true;
  bool membership_ok = true;
  if (monotone && tuple.num_internal() >= 1) {
    const FVector huffman_fvec = build_huffman(tuple).fvec;
    TreeEnumerator en(tuple);
    while (auto tree = en.next()) {
      const bool huffman_member = is_huffman(*tree, tuple);
      for (VertexId r : tuple.internals()) {
        FVector fv = f_vector(root_tree(*tree, r));
        MajorizationOrder order = weak_compare(huffman_fvec, fv);
        if (order == MajorizationOrder::RightMajorizesStrictly ||
            order == MajorizationOrder::Incomparable)
          majorization_ok = false;
        if (order == MajorizationOrder::EqualSorted && !huffman_member)
          membership_ok = false;
      }
    }
    line["majorization_ok"] = majorization_ok;
    line["membership_ok"] = membership_ok;
  }

  if (monotone) {
    const bool ok = report.huffman_is_optimal && report.all_argmins_are_huffman &&
                    majorization_ok && membership_ok;
    line["status"] = ok ? "OK" : "FAIL";
    outcome.failed = !ok;
  } else {
    line["status"] = "NONMONOTONE";
    line["gap"] = (report.huffman_vwwi - report.min_vwwi).to_string();
  }
  std::cout << line.dump() << "\n";
  return outcome;
}

int cmd_verify(const std::string& input, int random_count, int max_vertices,
               std::uint64_t seed) {
  bool any_failed = false;
  bool any_cap = false;
  if (!input.empty()) {
    GeneratingTuple tuple = parse_tuple_document(read_input(input));
    VerifyOutcome o = verify_tuple(0, tuple);
    any_failed |= o.failed;
    any_cap |= o.cap_exceeded;
  } else {
    Rng rng(seed);
    TupleGenOptions opt;
    opt.min_vertices = 5;
    opt.max_vertices = max_vertices;
    for (int i = 0; i < random_count; ++i) {
      GeneratingTuple tuple = random_monotone_tuple(rng, opt);
      VerifyOutcome o = verify_tuple(i, tuple);
      any_failed |= o.failed;
      any_cap |= o.cap_exceeded;
    }
  }
  if (any_failed) return kExitViolation;
  if (any_cap) return kExitCapExceeded;
  return 0;
}

int cmd_counterexample(int max_vertices, int attempts, std::uint64_t seed) {
  SearchLimits limits;
  limits.max_vertices = max_vertices;
  limits.attempts = attempts;
  limits.seed = seed;
  std::optional<CounterexampleReport> found = find_counterexample(limits);
  if (!found) {
    json out;
    out["status"] = "NOT_FOUND";
    out["attempts"] = attempts;
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  json out;
  out["status"] = "FOUND";
  out["attempts_used"] = found->attempts_used;
  out["tuple"] = tuple_to_json(found->tuple);
  out["huffman_vwwi"] = found->huffman_vwwi.to_string();
  out["oracle_min"] = found->oracle_min.to_string();
  out["gap"] = found->gap.to_string();
  std::vector<long long> ids(found->tuple.original_ids());
  out["witness_tree"] = tree_to_json(found->witness_tree, ids);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum vertex-weighted Wiener index trees via generalized "
               "Huffman construction"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  bool trace = false;
  auto* build = app.add_subcommand("build", "build the optimal tree for a tuple");
  build->add_option("input", input, "tuple document path, or - for stdin");
  build->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot", "edgelist"}));
  build->add_flag("--trace", trace, "include the star sequence in the output");

  std::string eval_input = "-";
  std::string eval_format = "json";
  long long eval_root = 0;
  bool eval_root_set = false;
  auto* eval = app.add_subcommand("eval", "evaluate indices of a tree document");
  eval->add_option("input", eval_input, "tree document path, or - for stdin");
  eval->add_option("--format", eval_format, "output format")
      ->check(CLI::IsMember({"json", "dot", "edgelist"}));
  eval->add_option("--root", eval_root, "root vertex id for the rooted formula")
      ->each([&](const std::string&) { eval_root_set = true; });

  std::string verify_input;
  int verify_random = 0;
  int verify_max_vertices = 8;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify",
                                    "check optimality and majorization against "
                                    "the enumeration oracle");
  verify->add_option("input", verify_input, "tuple document path");
  verify->add_option("--random", verify_random, "verify N random degree-monotone tuples");
  verify->add_option("--max-vertices", verify_max_vertices, "largest random tuple size");
  verify->add_option("--seed", verify_seed, "random seed");

  int ce_max_vertices = 8;
  int ce_attempts = 10000;
  std::uint64_t ce_seed = 0;
  auto* counter = app.add_subcommand("counterexample",
                                     "search for a non-monotone tuple where the "
                                     "construction is suboptimal");
  counter->add_option("--max-vertices", ce_max_vertices, "largest tuple size");
  counter->add_option("--attempts", ce_attempts, "search budget");
  counter->add_option("--seed", ce_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUserError : 0;
  }

  try {
    if (build->parsed()) return cmd_build(input, format, trace);
    if (eval->parsed())
      return cmd_eval(eval_input,
                      eval_root_set ? std::optional<long long>(eval_root) : std::nullopt,
                      eval_format);
    if (verify->parsed()) {
      if (verify_input.empty() && verify_random <= 0) {
        std::cerr << "error: verify needs an input file or --random N\n";
        return kExitUserError;
      }
      return cmd_verify(verify_input, verify_random, verify_max_vertices, verify_seed);
    }
    if (counter->parsed())
      return cmd_counterexample(ce_max_vertices, ce_attempts, ce_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << error_code_name(e.code()) << "]\n";
    return e.code() == ErrorCode::EnumerationCapExceeded ? kExitCapExceeded
                                                         : kExitUserError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  return kExitUserError;
}
