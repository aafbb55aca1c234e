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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adderlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Primitive cell kinds. MUX2 inputs are ordered (select, data0, data1) and
/// implement `select ? data1 : data0`.
enum class GateKind : std::uint8_t {
  kNot,
  kAnd2,
  kOr2,
  kNand2,
  kNor2,
  kXor2,
  kXnor2,
  kMux2,
  kConst0,
  kConst1,
};

inline constexpr std::size_t kGateKindCount = 10;

constexpr int arity(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
      return 1;
    case GateKind::kMux2:
      return 3;
    case GateKind::kConst0:
    case GateKind::kConst1:
      return 0;
    default:
      return 2;
  }
}

std::string_view kind_name(GateKind kind);
GateKind kind_from_name(std::string_view name);

/// How the adder's carry input is wired.
enum class CarryInMode : std::uint8_t { kNone, kVariable, kConstant0, kConstant1 };

std::string_view carry_in_mode_name(CarryInMode mode);
CarryInMode carry_in_mode_from_name(std::string_view name);

using NetId = std::uint32_t;
using GateId = std::uint32_t;

/// A single-driver wire. Ids are dense indices into Netlist::nets; the name is
/// optional and only used for ports and a few landmark signals.
struct Net {
  std::string name;
};

struct Gate {
  GateKind kind;
  std::array<NetId, 3> in{};  // entries beyond arity(kind) are unused
  NetId out = 0;
};

/// Immutable gate-level netlist: a DAG of primitive gates over dense net ids,
/// with named primary inputs (A, B, optional Cin) and outputs (Sum, Cout).
/// Bit 0 is the least significant bit throughout. All analyses treat a
/// validated Netlist as read-only, so they are safe to run concurrently on
/// the same object.
struct Netlist {
  std::string name;
  int width = 0;
  CarryInMode carry_in = CarryInMode::kNone;
  std::vector<NetId> inputs;   // a[0..N), b[0..N) and, when variable, cin
  std::vector<NetId> outputs;  // sum[0..N), cout
  std::vector<Net> nets;
  std::vector<Gate> gates;

  std::size_t num_nets() const { return nets.size(); }
  std::size_t num_gates() const { return gates.size(); }
  bool has_variable_carry() const { return carry_in == CarryInMode::kVariable; }

  /// Gate index driving `net`, or -1 for a primary input.
  std::int64_t driver_gate(NetId net) const { return driver_.empty() ? -1 : driver_[net]; }
  std::optional<NetId> find_net(std::string_view name) const;

  /// Number of gate input pins each net feeds.
  std::vector<std::uint32_t> fanout_counts() const;

  /// Rebuilds the net -> driver index. Called by the builder and the JSON
  /// reader; required before driver_gate() queries.
  void rebuild_driver_index();

 private:
  std::vector<std::int32_t> driver_;
};

/// Tree shapes for build_balanced_tree.
enum class TreeSkew : std::uint8_t {
  kBalanced,   // recursive halving, lower-indexed inputs grouped first
  kFavorLast,  // balance all but the last input, then one final gate; the
               // last input passes through exactly one gate
};

/// Single-owner netlist construction. Nets receive dense ids in creation
/// order, so gate inputs always refer to already-created nets and the gate
/// graph is acyclic by construction.
class NetlistBuilder {
 public:
  NetId add_input(std::string name);

  /// Appends a gate and returns its fresh output net. Throws Error on arity
  /// mismatch or unknown input net id.
  NetId add_gate(GateKind kind, std::span<const NetId> ins);
  NetId add_gate(GateKind kind, std::initializer_list<NetId> ins);

  void set_net_name(NetId net, std::string name);

  std::size_t num_nets() const { return nets_.size(); }
  std::size_t num_gates() const { return gates_.size(); }

  /// Freezes the builder into an immutable netlist. Outputs are sums in bit
  /// order followed by cout.
  Netlist finish(std::string name, int width, CarryInMode carry_in,
                 std::span<const NetId> sums, NetId cout) &&;

 private:
  std::vector<Net> nets_;
  std::vector<Gate> gates_;
  std::vector<NetId> inputs_;
};

/// Combines `ins` with a tree of 2-input gates of the given kind (AND2, OR2,
/// or XOR2). A single input is returned unchanged. Throws Error for other
/// kinds or an empty input list.
NetId build_balanced_tree(NetlistBuilder& builder, GateKind kind, std::span<const NetId> ins,
                          TreeSkew skew = TreeSkew::kBalanced);

/// Structural check of every netlist invariant: dense ids, single driver,
/// arity, inputs created before use (acyclicity), output count = width + 1,
/// port list consistency. Returns all violations, not just the first; an
/// empty list means the netlist is valid.
std::vector<std::string> validate(const Netlist& netlist);

}  // namespace adderlab
