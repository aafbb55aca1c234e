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

#include <atomic>
#include <thread>

#include "doctest.h"

#include "adderlab/generators.hpp"
#include "adderlab/simulate.hpp"
#include "test_util.hpp"

using namespace adderlab;

TEST_CASE("simulate adds on a small ripple chain") {
  const Netlist nl = build_rca(4, CarryInMode::kVariable);
  SimOutputs r = simulate(nl, 3, 5, 0);
  CHECK(r.sum == 8);
  CHECK(r.cout == 0);
  r = simulate(nl, 15, 1, 0);
  CHECK(r.sum == 0);
  CHECK(r.cout == 1);
}

TEST_CASE("simulate wraps modulo the width on every builder") {
  // 200 + 100 + 1 = 301 = 256 + 45.
  for (const AdderSpec& spec : testutil::small_specs(8, CarryInMode::kVariable)) {
    const Netlist nl = build(spec);
    INFO(nl.name);
    const SimOutputs r = simulate(nl, 200, 100, 1);
    CHECK(r.sum == 45);
    CHECK(r.cout == 1);
  }
}

TEST_CASE("simulate rejects malformed assignments") {
  const Netlist variable = build_rca(4, CarryInMode::kVariable);
  const Netlist plain = build_rca(4, CarryInMode::kNone);
  CHECK_THROWS_WITH_AS(simulate(variable, 3, 5), doctest::Contains("missing carry-in"), Error);
  CHECK_THROWS_WITH_AS(simulate(plain, 3, 5, 0), doctest::Contains("extra carry-in"), Error);
  CHECK_THROWS_WITH_AS(simulate(plain, 16, 0), doctest::Contains("out of range"), Error);
  CHECK_THROWS_AS(simulate(variable, 0, 0, 2), Error);
}

TEST_CASE("packed evaluation matches the scalar reference lane for lane") {
  std::vector<Netlist> probes;
  for (const AdderSpec& spec : testutil::small_specs(8, CarryInMode::kVariable)) {
    probes.push_back(build(spec));
  }
  probes.push_back(build_rca(64, CarryInMode::kVariable));
  probes.push_back(build_prefix_adder(64, PrefixTopology::kKoggeStone, CarryInMode::kNone));
  for (const Netlist& nl : probes) {
    INFO(nl.name);
    std::vector<InputVector> lanes;
    for (int l = 0; l < 64; ++l) lanes.push_back(random_input(nl.width, nl.carry_in, 99, l));
    std::vector<std::uint64_t> words(nl.nets.size(), 0);
    fill_input_lanes(nl, lanes, words);
    eval_packed(nl, words);
    for (int l = 0; l < 64; l += 7) {
      const std::optional<int> cin =
          nl.has_variable_carry() ? std::optional<int>(lanes[l].cin) : std::nullopt;
      const std::vector<std::uint8_t> ref = simulate_nets(nl, lanes[l].a, lanes[l].b, cin);
      for (std::size_t id = 0; id < nl.nets.size(); ++id) {
        REQUIRE(((words[id] >> l) & 1) == ref[id]);
      }
    }
  }
}

namespace {

Netlist inverter_probe() {
  NetlistBuilder nb;
  const NetId a = nb.add_input("a0");
  const NetId b = nb.add_input("b0");
  const NetId inv = nb.add_gate(GateKind::kNot, {a});
  const NetId cout = nb.add_gate(GateKind::kAnd2, {a, b});
  return std::move(nb).finish("inv", 1, CarryInMode::kNone, std::vector<NetId>{inv}, cout);
}

}  // namespace

TEST_CASE("toggle counting sees both edges of an inverter") {
  const Netlist nl = inverter_probe();
  const std::vector<InputVector> vecs{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}};
  const ActivityReport rep = toggle_power_proxy(nl, vecs);
  CHECK(rep.toggles[nl.outputs[0]] == 2);
  CHECK(rep.vector_count == 3);
}

TEST_CASE("identical vectors produce a zero power proxy") {
  const Netlist nl = build_rca(8, CarryInMode::kNone);
  const std::vector<InputVector> vecs(10, InputVector{123, 45, 0});
  const ActivityReport rep = toggle_power_proxy(nl, vecs);
  CHECK(rep.power_proxy == 0);
  for (std::uint64_t t : rep.toggles) CHECK(t == 0);
}

TEST_CASE("power proxy is deterministic and policy-independent") {
  const Netlist nl = build_rca(32, CarryInMode::kNone);
  const std::vector<InputVector> vecs = random_vectors(nl, 1000, 42);
  const ActivityReport a = toggle_power_proxy(nl, vecs, 42, ExecPolicy::kParallel);
  const ActivityReport b = toggle_power_proxy(nl, vecs, 42, ExecPolicy::kParallel);
  const ActivityReport c = toggle_power_proxy(nl, vecs, 42, ExecPolicy::kSerial);
  CHECK(a.power_proxy == b.power_proxy);
  CHECK(a.toggles == b.toggles);
  CHECK(a.power_proxy == c.power_proxy);
  CHECK(a.toggles == c.toggles);
  CHECK(a.seed == 42);
}

TEST_CASE("per-net toggles are bounded by the transition count") {
  for (const AdderSpec& spec : testutil::small_specs(8, CarryInMode::kNone)) {
    const Netlist nl = build(spec);
    for (std::uint64_t count : {1, 2, 63, 64, 65, 200}) {
      const std::vector<InputVector> vecs = random_vectors(nl, count, 7);
      const ActivityReport rep = toggle_power_proxy(nl, vecs);
      for (std::uint64_t t : rep.toggles) REQUIRE(t <= count - 1);
    }
  }
}

TEST_CASE("packed toggle counting matches the serial reference") {
  for (const AdderSpec& spec : testutil::small_specs(8, CarryInMode::kVariable)) {
    const Netlist nl = build(spec);
    INFO(nl.name);
    for (std::uint64_t count : {2, 64, 65, 127, 128, 300}) {
      const std::vector<InputVector> vecs = random_vectors(nl, count, 5);
      const ActivityReport par = toggle_power_proxy(nl, vecs, 5, ExecPolicy::kParallel);
      const ActivityReport ser = toggle_power_proxy(nl, vecs, 5, ExecPolicy::kSerial);
      REQUIRE(par.toggles == ser.toggles);
      REQUIRE(par.power_proxy == ser.power_proxy);
    }
  }
}

TEST_CASE("toggle_power_proxy rejects empty and malformed input") {
  const Netlist nl = build_rca(4, CarryInMode::kNone);
  CHECK_THROWS_AS(toggle_power_proxy(nl, std::vector<InputVector>{}), Error);
  const std::vector<InputVector> bad{{255, 0, 0}};
  CHECK_THROWS_WITH_AS(toggle_power_proxy(nl, bad), doctest::Contains("malformed"), Error);
}

TEST_CASE("analyses run concurrently on one immutable netlist") {
  const Netlist nl = build_fbha(32, 24, {2, 2, 4, 4, 4, 8}, ClaStyle::kDelayOptimized);
  const std::vector<InputVector> vecs = random_vectors(nl, 500, 3);
  const ActivityReport want = toggle_power_proxy(nl, vecs, 3);
  const SimOutputs want_sim = simulate(nl, 12345, 67890);
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&] {
      for (int rep = 0; rep < 5; ++rep) {
        const ActivityReport got = toggle_power_proxy(nl, vecs, 3);
        const SimOutputs sim = simulate(nl, 12345, 67890);
        if (got.power_proxy != want.power_proxy || sim.sum != want_sim.sum) ++mismatches;
      }
    });
  }
  for (std::thread& w : workers) w.join();
  CHECK(mismatches == 0);
}

TEST_CASE("random vector streams differ across seeds and match across calls") {
  const Netlist nl = build_rca(16, CarryInMode::kVariable);
  const std::vector<InputVector> s1 = random_vectors(nl, 64, 1);
  const std::vector<InputVector> s1b = random_vectors(nl, 64, 1);
  const std::vector<InputVector> s2 = random_vectors(nl, 64, 2);
  bool same = true, differ = false;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    same &= s1[i].a == s1b[i].a && s1[i].b == s1b[i].b && s1[i].cin == s1b[i].cin;
    differ |= s1[i].a != s2[i].a || s1[i].b != s2[i].b;
  }
  CHECK(same);
  CHECK(differ);
}
