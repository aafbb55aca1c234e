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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adderlab/netlist.hpp"

namespace adderlab {

/// Lookahead carry formulation inside a CLA module. The conventional style
/// builds balanced sum-of-products trees; the delay-optimized style skews
/// the trees so an incoming carry reaches the module carry-out through one
/// AND2 plus one OR2.
enum class ClaStyle : std::uint8_t { kConventional, kDelayOptimized };

enum class PrefixTopology : std::uint8_t {
  kBrentKung,
  kSklansky,
  kKoggeStone,
  kLadnerFischer,
  kHanCarlson,
};

enum class AdderArch : std::uint8_t { kRca, kCska, kCondSum, kCsla, kCla, kPrefix, kFbha };

std::string_view cla_style_name(ClaStyle style);
ClaStyle cla_style_from_name(std::string_view name);
std::string_view prefix_topology_name(PrefixTopology topology);
PrefixTopology prefix_topology_from_name(std::string_view name);
std::string_view adder_arch_name(AdderArch arch);
AdderArch adder_arch_from_name(std::string_view name);

/// Declarative description of one adder instance. Module and block lists are
/// stored least-significant-first, matching cascade construction order;
/// display names echo the conventional most-significant-first digits.
struct AdderSpec {
  AdderArch arch = AdderArch::kRca;
  int width = 0;
  CarryInMode carry_in = CarryInMode::kNone;
  int block_size = 0;              // cska
  std::vector<int> block_list;     // csla
  std::vector<int> module_sizes;   // cla, fbha (least-significant-first)
  ClaStyle style = ClaStyle::kConventional;
  PrefixTopology topology = PrefixTopology::kKoggeStone;
  int k = 0;                       // fbha: width of the less significant (CLA) part
};

/// Throws Error when the spec violates its invariants.
void validate_spec(const AdderSpec& spec);

/// Deterministic display name, e.g. "FBHA_8_24[8,4,4,4,2,2]/opt".
std::string spec_name(const AdderSpec& spec);

/// Carry operand of a one-bit cell: a live net or a known constant that the
/// cell specializes away.
class CarryWire {
 public:
  static CarryWire net(NetId id) { return CarryWire(kNet, id); }
  static CarryWire zero() { return CarryWire(kZero, 0); }
  static CarryWire one() { return CarryWire(kOne, 0); }

  bool is_net() const { return tag_ == kNet; }
  bool is_one() const { return tag_ == kOne; }
  NetId id() const { return id_; }

 private:
  enum Tag { kNet, kZero, kOne };
  CarryWire(Tag tag, NetId id) : tag_(tag), id_(id) {}
  Tag tag_;
  NetId id_;
};

struct FullAdderNets {
  NetId sum;
  NetId cout;
  NetId p;  // a XOR b as seen on a wire (the sum wire for constant-0 cells)
  NetId g;  // a AND b when available, otherwise the cout wire
};

/// One-bit cell. A live carry costs 5 gates; constant carries specialize to
/// 2 gates (XOR2/AND2 for 0, XNOR2/OR2 for 1).
FullAdderNets build_full_adder(NetlistBuilder& builder, NetId a, NetId b, CarryWire cin);

struct ClaModuleNets {
  std::vector<NetId> sums;
  NetId cout;
};

/// Lookahead module over a and b slices (least significant first). Carries
/// are flattened sum-of-products over generate/propagate terms; with no
/// carry-in the module is the reduced form whose lowest sum is the bare
/// propagate wire.
ClaModuleNets build_cla_module(NetlistBuilder& builder, std::span<const NetId> a,
                               std::span<const NetId> b, std::optional<NetId> carry_in,
                               ClaStyle style);

Netlist build_rca(int width, CarryInMode carry_in);
Netlist build_cska(int width, int block_size, CarryInMode carry_in);
Netlist build_cond_sum(int width, CarryInMode carry_in);
Netlist build_csla(int width, const std::vector<int>& block_list, CarryInMode carry_in);
Netlist build_cla_cascade(int width, const std::vector<int>& module_sizes, ClaStyle style,
                          CarryInMode carry_in);
Netlist build_prefix_adder(int width, PrefixTopology topology, CarryInMode carry_in);

/// Bipartitioned hybrid adder: bits [0,k) are a lookahead cascade, bits
/// [k,width) a dual-ripple carry-select block whose multiplexers are steered
/// by the cascade carry-out (the net named "cla_cout").
Netlist build_fbha(int width, int k, const std::vector<int>& module_sizes, ClaStyle style,
                   CarryInMode carry_in = CarryInMode::kNone);

/// Dispatch entry point; the result always passes validate().
Netlist build(const AdderSpec& spec);

}  // namespace adderlab
