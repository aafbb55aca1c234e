// Copyright 2026 The adderlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include "adderlab/json_io.hpp"
#include "adderlab/netlist.hpp"
#include "adderlab/simulate.hpp"
#include "test_util.hpp"

using namespace adderlab;

TEST_CASE("add_gate allocates dense output ids") {
  NetlistBuilder nb;
  const NetId x = nb.add_input("x");
  CHECK(x == 0);
  const NetId y = nb.add_gate(GateKind::kNot, {x});
  CHECK(y == 1);
  CHECK(nb.num_gates() == 1);
}

TEST_CASE("add_gate accepts a repeated input net") {
  NetlistBuilder nb;
  const NetId a = nb.add_input("a0");
  const NetId b = nb.add_input("b0");
  const NetId sq = nb.add_gate(GateKind::kAnd2, {a, a});
  const NetId cout = nb.add_gate(GateKind::kAnd2, {a, b});
  Netlist nl = std::move(nb).finish("sq", 1, CarryInMode::kNone, std::vector<NetId>{sq}, cout);
  CHECK(validate(nl).empty());
  // AND(x, x) = x
  CHECK(simulate(nl, 1, 0).sum == 1);
  CHECK(simulate(nl, 0, 1).sum == 0);
}

TEST_CASE("add_gate rejects arity mismatches and unknown nets") {
  NetlistBuilder nb;
  const NetId a = nb.add_input("a");
  const NetId b = nb.add_input("b");
  CHECK_THROWS_WITH_AS(nb.add_gate(GateKind::kMux2, {a, b}),
                       doctest::Contains("arity mismatch"), Error);
  CHECK_THROWS_WITH_AS(nb.add_gate(GateKind::kAnd2, {a, 99}),
                       doctest::Contains("unknown input net"), Error);
}

namespace {

// Wraps a tree over `leaf_count` fresh inputs for structural inspection.
struct TreeProbe {
  Netlist nl;
  std::vector<NetId> leaves;
  NetId root;
  std::size_t gate_count;
};

TreeProbe make_tree(GateKind kind, int leaf_count, TreeSkew skew) {
  NetlistBuilder nb;
  std::vector<NetId> leaves;
  for (int i = 0; i < leaf_count; ++i) leaves.push_back(nb.add_input("i" + std::to_string(i)));
  const NetId root = build_balanced_tree(nb, kind, leaves, skew);
  const std::size_t gates = nb.num_gates();
  // Port lists here are only placeholders; the probe is never validated.
  Netlist nl = std::move(nb).finish("tree", 1, CarryInMode::kNone,
                                    std::vector<NetId>{leaves[0]}, root);
  return {std::move(nl), std::move(leaves), root, gates};
}

}  // namespace

TEST_CASE("balanced tree over one input is the input") {
  TreeProbe t = make_tree(GateKind::kAnd2, 1, TreeSkew::kBalanced);
  CHECK(t.gate_count == 0);
  CHECK(t.root == t.leaves[0]);
}

TEST_CASE("balanced tree over five inputs has four gates and depth three") {
  TreeProbe t = make_tree(GateKind::kAnd2, 5, TreeSkew::kBalanced);
  CHECK(t.gate_count == 4);
  int depth = 0;
  for (NetId leaf : t.leaves) {
    depth = std::max(depth, testutil::max_depth_from(t.nl, leaf, t.root));
  }
  CHECK(depth == 3);
}

TEST_CASE("favor_last tree keeps the last input one gate from the root") {
  TreeProbe t = make_tree(GateKind::kOr2, 5, TreeSkew::kFavorLast);
  CHECK(t.gate_count == 4);
  CHECK(testutil::max_depth_from(t.nl, t.leaves[4], t.root) == 1);
  CHECK(testutil::max_depth_from(t.nl, t.leaves[0], t.root) == 3);
}

TEST_CASE("build_balanced_tree rejects unsupported kinds and empty input") {
  NetlistBuilder nb;
  const NetId a = nb.add_input("a");
  const NetId b = nb.add_input("b");
  const std::vector<NetId> ins{a, b};
  CHECK_THROWS_AS(build_balanced_tree(nb, GateKind::kNand2, ins), Error);
  CHECK_THROWS_AS(build_balanced_tree(nb, GateKind::kAnd2, std::vector<NetId>{}), Error);
}

TEST_CASE("validate passes every builder output") {
  for (int width : {4, 8}) {
    for (CarryInMode mode : {CarryInMode::kNone, CarryInMode::kVariable, CarryInMode::kConstant0,
                             CarryInMode::kConstant1}) {
      for (const AdderSpec& spec : testutil::small_specs(width, mode)) {
        const Netlist nl = build(spec);
        INFO(nl.name);
        CHECK(validate(nl).empty());
      }
    }
  }
}

TEST_CASE("validate reports a missing-net gate input") {
  Netlist nl = build_rca(4, CarryInMode::kVariable);
  nl.gates[3].in[0] = 9999;
  const std::vector<std::string> bad = validate(nl);
  REQUIRE(!bad.empty());
  bool found = false;
  for (const std::string& v : bad) found |= v.find("undriven input") != std::string::npos;
  CHECK(found);
}

TEST_CASE("validate reports a wrong output count") {
  Netlist nl = build_rca(4, CarryInMode::kNone);
  nl.outputs.pop_back();
  const std::vector<std::string> bad = validate(nl);
  REQUIRE(!bad.empty());
  bool found = false;
  for (const std::string& v : bad) found |= v.find("output count") != std::string::npos;
  CHECK(found);
}

TEST_CASE("validate reports double-driven and undriven nets") {
  Netlist nl = build_rca(2, CarryInMode::kNone);
  SUBCASE("double driver") {
    nl.gates[1].out = nl.gates[0].out;
    bool found = false;
    for (const std::string& v : validate(nl)) {
      found |= v.find("single-driver") != std::string::npos;
    }
    CHECK(found);
  }
  SUBCASE("undriven net") {
    nl.nets.push_back(Net{});
    bool found = false;
    for (const std::string& v : validate(nl)) found |= v.find("no driver") != std::string::npos;
    CHECK(found);
  }
}

TEST_CASE("netlist json round-trips byte-exactly") {
  for (const AdderSpec& spec : testutil::small_specs(8, CarryInMode::kNone)) {
    const Netlist nl = build(spec);
    const std::string text = netlist_to_text(nl);
    const Netlist back = netlist_from_text(text);
    INFO(nl.name);
    CHECK(netlist_to_text(back) == text);
    CHECK(back.name == nl.name);
    CHECK(back.width == nl.width);
    CHECK(back.gates.size() == nl.gates.size());
    CHECK(validate(back).empty());
  }
}

TEST_CASE("netlist json named nets survive the round trip") {
  const Netlist nl = build_fbha(8, 4, {4}, ClaStyle::kDelayOptimized);
  REQUIRE(nl.find_net("cla_cout").has_value());
  const Netlist back = netlist_from_text(netlist_to_text(nl));
  CHECK(back.find_net("cla_cout") == nl.find_net("cla_cout"));
}

TEST_CASE("identical specs produce identical netlist bytes") {
  AdderSpec spec;
  spec.arch = AdderArch::kFbha;
  spec.width = 16;
  spec.k = 12;
  spec.module_sizes = {4, 4, 4};
  spec.style = ClaStyle::kDelayOptimized;
  CHECK(netlist_to_text(build(spec)) == netlist_to_text(build(spec)));
}

TEST_CASE("malformed documents are rejected with context") {
  CHECK_THROWS_WITH_AS(netlist_from_text("{ not json"),
                       doctest::Contains("malformed netlist document"), Error);
  CHECK_THROWS_WITH_AS(netlist_from_text("{\"name\":\"x\"}"),
                       doctest::Contains("malformed netlist document"), Error);
  CHECK_THROWS_WITH_AS(spec_from_json(Json::parse("{\"arch\":\"rca\"}")),
                       doctest::Contains("malformed adder spec"), Error);
}

TEST_CASE("spec json mirrors the fields") {
  AdderSpec spec;
  spec.arch = AdderArch::kFbha;
  spec.width = 32;
  spec.k = 24;
  spec.module_sizes = {2, 2, 4, 4, 4, 8};
  spec.style = ClaStyle::kDelayOptimized;
  const AdderSpec back = spec_from_json(spec_to_json(spec));
  CHECK(back.arch == spec.arch);
  CHECK(back.width == spec.width);
  CHECK(back.k == spec.k);
  CHECK(back.module_sizes == spec.module_sizes);
  CHECK(back.style == spec.style);
  CHECK(spec_name(back) == "FBHA_8_24[8,4,4,4,2,2]/opt");
}
