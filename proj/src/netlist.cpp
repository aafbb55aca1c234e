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

#include "adderlab/netlist.hpp"

#include <algorithm>

namespace adderlab {

namespace {

constexpr std::string_view kKindNames[kGateKindCount] = {
    "NOT", "AND2", "OR2", "NAND2", "NOR2", "XOR2", "XNOR2", "MUX2", "CONST0", "CONST1"};

constexpr std::string_view kCarryModeNames[4] = {"none", "variable", "constant0", "constant1"};

}  // namespace

std::string_view kind_name(GateKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

GateKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kGateKindCount; ++i) {
    if (kKindNames[i] == name) return static_cast<GateKind>(i);
  }
  throw Error("unknown gate kind: " + std::string(name));
}

std::string_view carry_in_mode_name(CarryInMode mode) {
  return kCarryModeNames[static_cast<std::size_t>(mode)];
}

CarryInMode carry_in_mode_from_name(std::string_view name) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (kCarryModeNames[i] == name) return static_cast<CarryInMode>(i);
  }
  throw Error("unknown carry-in mode: " + std::string(name));
}

std::optional<NetId> Netlist::find_net(std::string_view name) const {
  for (std::size_t i = 0; i < nets.size(); ++i) {
    if (nets[i].name == name) return static_cast<NetId>(i);
  }
  return std::nullopt;
}

std::vector<std::uint32_t> Netlist::fanout_counts() const {
  std::vector<std::uint32_t> fanout(nets.size(), 0);
  for (const Gate& g : gates) {
    for (int i = 0; i < arity(g.kind); ++i) fanout[g.in[i]]++;
  }
  return fanout;
}

void Netlist::rebuild_driver_index() {
  driver_.assign(nets.size(), -1);
  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    if (gates[gi].out < nets.size()) driver_[gates[gi].out] = static_cast<std::int32_t>(gi);
  }
}

NetId NetlistBuilder::add_input(std::string name) {
  NetId id = static_cast<NetId>(nets_.size());
  nets_.push_back(Net{std::move(name)});
  inputs_.push_back(id);
  return id;
}

NetId NetlistBuilder::add_gate(GateKind kind, std::span<const NetId> ins) {
  const int n = arity(kind);
  if (static_cast<int>(ins.size()) != n) {
    throw Error("arity mismatch: " + std::string(kind_name(kind)) + " takes " + std::to_string(n) +
                " inputs, got " + std::to_string(ins.size()));
  }
  for (NetId in : ins) {
    if (in >= nets_.size()) throw Error("unknown input net id " + std::to_string(in));
  }
  NetId out = static_cast<NetId>(nets_.size());
  nets_.push_back(Net{});
  Gate g{kind, {}, out};
  std::copy(ins.begin(), ins.end(), g.in.begin());
  gates_.push_back(g);
  return out;
}

NetId NetlistBuilder::add_gate(GateKind kind, std::initializer_list<NetId> ins) {
  return add_gate(kind, std::span<const NetId>(ins.begin(), ins.size()));
}

void NetlistBuilder::set_net_name(NetId net, std::string name) {
  if (net >= nets_.size()) throw Error("unknown net id " + std::to_string(net));
  nets_[net].name = std::move(name);
}

Netlist NetlistBuilder::finish(std::string name, int width, CarryInMode carry_in,
                               std::span<const NetId> sums, NetId cout) && {
  Netlist nl;
  nl.name = std::move(name);
  nl.width = width;
  nl.carry_in = carry_in;
  nl.inputs = std::move(inputs_);
  nl.outputs.assign(sums.begin(), sums.end());
  nl.outputs.push_back(cout);
  nl.nets = std::move(nets_);
  nl.gates = std::move(gates_);
  nl.rebuild_driver_index();
  return nl;
}

namespace {

NetId tree_range(NetlistBuilder& b, GateKind kind, std::span<const NetId> ins) {
  if (ins.size() == 1) return ins[0];
  // Left subtree takes the larger half so lower-indexed inputs group first.
  const std::size_t mid = (ins.size() + 1) / 2;
  NetId left = tree_range(b, kind, ins.subspan(0, mid));
  NetId right = tree_range(b, kind, ins.subspan(mid));
  return b.add_gate(kind, {left, right});
}

}  // namespace

NetId build_balanced_tree(NetlistBuilder& builder, GateKind kind, std::span<const NetId> ins,
                          TreeSkew skew) {
  if (kind != GateKind::kAnd2 && kind != GateKind::kOr2 && kind != GateKind::kXor2) {
    throw Error("unsupported tree kind: " + std::string(kind_name(kind)));
  }
  if (ins.empty()) throw Error("tree over zero inputs");
  if (ins.size() == 1) return ins[0];
  if (skew == TreeSkew::kFavorLast) {
    NetId head = tree_range(builder, kind, ins.subspan(0, ins.size() - 1));
    return builder.add_gate(kind, {head, ins[ins.size() - 1]});
  }
  return tree_range(builder, kind, ins);
}

std::vector<std::string> validate(const Netlist& nl) {
  std::vector<std::string> bad;
  const std::size_t n_nets = nl.nets.size();

  // Drivers: primary inputs and gate outputs, one each per net.
  std::vector<int> drive_count(n_nets, 0);
  for (NetId in : nl.inputs) {
    if (in >= n_nets) {
      bad.push_back("input port refers to missing net " + std::to_string(in));
    } else {
      drive_count[in]++;
    }
  }
  for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
    const Gate& g = nl.gates[gi];
    if (g.out >= n_nets) {
      bad.push_back("gate " + std::to_string(gi) + " output refers to missing net " +
                    std::to_string(g.out));
      continue;
    }
    drive_count[g.out]++;
    for (int i = 0; i < arity(g.kind); ++i) {
      if (g.in[i] >= n_nets) {
        bad.push_back("undriven input: gate " + std::to_string(gi) + " reads missing net " +
                      std::to_string(g.in[i]));
      } else if (g.in[i] >= g.out) {
        // Dense creation order is the acyclicity witness.
        bad.push_back("gate " + std::to_string(gi) + " reads net " + std::to_string(g.in[i]) +
                      " not created before its output");
      }
    }
  }
  for (std::size_t id = 0; id < n_nets; ++id) {
    if (drive_count[id] == 0) bad.push_back("undriven input: net " + std::to_string(id) + " has no driver");
    if (drive_count[id] > 1) bad.push_back("single-driver violation on net " + std::to_string(id));
  }

  // Ports.
  const std::size_t want_inputs =
      2 * static_cast<std::size_t>(nl.width) + (nl.has_variable_carry() ? 1 : 0);
  if (nl.width < 1) bad.push_back("width must be at least 1");
  if (nl.inputs.size() != want_inputs) {
    bad.push_back("input count: expected " + std::to_string(want_inputs) + ", got " +
                  std::to_string(nl.inputs.size()));
  }
  if (nl.outputs.size() != static_cast<std::size_t>(nl.width) + 1) {
    bad.push_back("output count: expected " + std::to_string(nl.width + 1) + ", got " +
                  std::to_string(nl.outputs.size()));
  }
  for (NetId out : nl.outputs) {
    if (out >= n_nets) bad.push_back("output port refers to missing net " + std::to_string(out));
  }
  return bad;
}

}  // namespace adderlab
