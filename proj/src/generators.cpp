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

#include "adderlab/generators.hpp"

#include <algorithm>
#include <numeric>

namespace adderlab {

namespace {

constexpr GateKind kAnd = GateKind::kAnd2;
constexpr GateKind kOr = GateKind::kOr2;
constexpr GateKind kXor = GateKind::kXor2;
constexpr GateKind kXnor = GateKind::kXnor2;
constexpr GateKind kMux = GateKind::kMux2;

void check_width(int n) {
  if (n < 1 || n > 64) throw Error("width must be in [1, 64], got " + std::to_string(n));
}

struct Operands {
  std::vector<NetId> a;
  std::vector<NetId> b;
  std::optional<NetId> cin;
};

Operands add_operands(NetlistBuilder& nb, int n, CarryInMode mode) {
  Operands ops;
  for (int i = 0; i < n; ++i) ops.a.push_back(nb.add_input("a" + std::to_string(i)));
  for (int i = 0; i < n; ++i) ops.b.push_back(nb.add_input("b" + std::to_string(i)));
  if (mode == CarryInMode::kVariable) ops.cin = nb.add_input("cin");
  return ops;
}

CarryWire initial_carry(CarryInMode mode, const std::optional<NetId>& cin) {
  switch (mode) {
    case CarryInMode::kVariable:
      return CarryWire::net(*cin);
    case CarryInMode::kConstant1:
      return CarryWire::one();
    default:
      return CarryWire::zero();
  }
}

std::string mode_suffix(CarryInMode mode) {
  switch (mode) {
    case CarryInMode::kVariable:
      return "+cin";
    case CarryInMode::kConstant0:
      return "+c0";
    case CarryInMode::kConstant1:
      return "+c1";
    default:
      return "";
  }
}

// Most-significant-first digits, the conventional order for naming.
std::string msf_list(const std::vector<int>& lsf) {
  std::string out = "[";
  for (std::size_t i = lsf.size(); i-- > 0;) {
    out += std::to_string(lsf[i]);
    if (i != 0) out += ",";
  }
  out += "]";
  return out;
}

Netlist finish_validated(NetlistBuilder&& nb, std::string name, int width, CarryInMode mode,
                         std::span<const NetId> sums, NetId cout) {
  Netlist nl = std::move(nb).finish(std::move(name), width, mode, sums, cout);
  const std::vector<std::string> bad = validate(nl);
  if (!bad.empty()) {
    throw Error("generator produced invalid netlist '" + nl.name + "': " + bad.front());
  }
  return nl;
}

}  // namespace

std::string_view cla_style_name(ClaStyle style) {
  return style == ClaStyle::kConventional ? "conventional" : "optimized";
}

ClaStyle cla_style_from_name(std::string_view name) {
  if (name == "conventional" || name == "conv") return ClaStyle::kConventional;
  if (name == "optimized" || name == "opt" || name == "delay_optimized") {
    return ClaStyle::kDelayOptimized;
  }
  throw Error("unknown cla style: " + std::string(name));
}

std::string_view prefix_topology_name(PrefixTopology topology) {
  switch (topology) {
    case PrefixTopology::kBrentKung:
      return "brent_kung";
    case PrefixTopology::kSklansky:
      return "sklansky";
    case PrefixTopology::kKoggeStone:
      return "kogge_stone";
    case PrefixTopology::kLadnerFischer:
      return "ladner_fischer";
    case PrefixTopology::kHanCarlson:
      return "han_carlson";
  }
  return "kogge_stone";
}

PrefixTopology prefix_topology_from_name(std::string_view name) {
  for (PrefixTopology t :
       {PrefixTopology::kBrentKung, PrefixTopology::kSklansky, PrefixTopology::kKoggeStone,
        PrefixTopology::kLadnerFischer, PrefixTopology::kHanCarlson}) {
    if (prefix_topology_name(t) == name) return t;
  }
  throw Error("unknown prefix topology: " + std::string(name));
}

std::string_view adder_arch_name(AdderArch arch) {
  switch (arch) {
    case AdderArch::kRca:
      return "rca";
    case AdderArch::kCska:
      return "cska";
    case AdderArch::kCondSum:
      return "cond_sum";
    case AdderArch::kCsla:
      return "csla";
    case AdderArch::kCla:
      return "cla";
    case AdderArch::kPrefix:
      return "prefix";
    case AdderArch::kFbha:
      return "fbha";
  }
  return "rca";
}

AdderArch adder_arch_from_name(std::string_view name) {
  for (AdderArch a : {AdderArch::kRca, AdderArch::kCska, AdderArch::kCondSum, AdderArch::kCsla,
                      AdderArch::kCla, AdderArch::kPrefix, AdderArch::kFbha}) {
    if (adder_arch_name(a) == name) return a;
  }
  throw Error("unknown adder architecture: " + std::string(name));
}

void validate_spec(const AdderSpec& spec) {
  check_width(spec.width);
  auto positive_sum = [](const std::vector<int>& parts, int want, const char* what) {
    if (parts.empty()) throw Error(std::string(what) + " list must not be empty");
    int total = 0;
    for (int p : parts) {
      if (p < 1) throw Error(std::string(what) + " entries must be positive");
      total += p;
    }
    if (total != want) {
      throw Error(std::string(what) + " list sums to " + std::to_string(total) + ", expected " +
                  std::to_string(want));
    }
  };
  switch (spec.arch) {
    case AdderArch::kRca:
    case AdderArch::kCondSum:
    case AdderArch::kPrefix:
      break;
    case AdderArch::kCska:
      if (spec.block_size < 1 || spec.width % spec.block_size != 0) {
        throw Error("cska block size must divide the width");
      }
      break;
    case AdderArch::kCsla:
      positive_sum(spec.block_list, spec.width, "csla block");
      break;
    case AdderArch::kCla:
      positive_sum(spec.module_sizes, spec.width, "cla module");
      break;
    case AdderArch::kFbha:
      if (spec.k <= 0 || spec.k >= spec.width) {
        throw Error("fbha requires 0 < k < width, got k=" + std::to_string(spec.k));
      }
      positive_sum(spec.module_sizes, spec.k, "fbha module");
      break;
  }
}

std::string spec_name(const AdderSpec& spec) {
  const std::string w = std::to_string(spec.width);
  const std::string suffix = mode_suffix(spec.carry_in);
  switch (spec.arch) {
    case AdderArch::kRca:
      return "RCA_" + w + suffix;
    case AdderArch::kCska:
      return "CSKA_" + w + "_b" + std::to_string(spec.block_size) + suffix;
    case AdderArch::kCondSum:
      return "CSA_" + w + suffix;
    case AdderArch::kCsla:
      return "CSLA_" + w + msf_list(spec.block_list) + suffix;
    case AdderArch::kCla:
      return "CLA_" + w + msf_list(spec.module_sizes) +
             (spec.style == ClaStyle::kConventional ? "/conv" : "/opt") + suffix;
    case AdderArch::kPrefix:
      switch (spec.topology) {
        case PrefixTopology::kBrentKung:
          return "BKA_" + w + suffix;
        case PrefixTopology::kSklansky:
          return "SKL_" + w + suffix;
        case PrefixTopology::kKoggeStone:
          return "KSA_" + w + suffix;
        case PrefixTopology::kLadnerFischer:
          return "LFA_" + w + suffix;
        case PrefixTopology::kHanCarlson:
          return "HCA_" + w + suffix;
      }
      return "KSA_" + w + suffix;
    case AdderArch::kFbha:
      return "FBHA_" + std::to_string(spec.width - spec.k) + "_" + std::to_string(spec.k) +
             msf_list(spec.module_sizes) +
             (spec.style == ClaStyle::kConventional ? "/conv" : "/opt") + suffix;
  }
  return "adder_" + w;
}

FullAdderNets build_full_adder(NetlistBuilder& nb, NetId a, NetId b, CarryWire cin) {
  if (cin.is_net()) {
    const NetId p = nb.add_gate(kXor, {a, b});
    const NetId g = nb.add_gate(kAnd, {a, b});
    const NetId s = nb.add_gate(kXor, {p, cin.id()});
    const NetId t = nb.add_gate(kAnd, {p, cin.id()});
    const NetId c = nb.add_gate(kOr, {g, t});
    return {s, c, p, g};
  }
  if (cin.is_one()) {
    const NetId s = nb.add_gate(kXnor, {a, b});
    const NetId c = nb.add_gate(kOr, {a, b});
    return {s, c, s, c};  // p/g wires are not meaningful for constant-1 cells
  }
  const NetId s = nb.add_gate(kXor, {a, b});
  const NetId c = nb.add_gate(kAnd, {a, b});
  return {s, c, s, c};  // sum doubles as p, cout as g
}

ClaModuleNets build_cla_module(NetlistBuilder& nb, std::span<const NetId> a,
                               std::span<const NetId> b, std::optional<NetId> carry_in,
                               ClaStyle style) {
  const int k = static_cast<int>(a.size());
  if (k < 1 || a.size() != b.size()) throw Error("cla module needs matching operand slices");

  std::vector<NetId> p(k), g(k);
  for (int i = 0; i < k; ++i) {
    p[i] = nb.add_gate(kXor, {a[i], b[i]});
    g[i] = nb.add_gate(kAnd, {a[i], b[i]});
  }

  // C_j = g_{j-1} + p_{j-1} g_{j-2} + ... + (p_{j-1}..p_0) C_0, each product a
  // tree of AND2s, each carry an OR tree over the terms. The optimized style
  // skews the carry-in product and the OR tree so C_0 reaches C_j in two
  // gate levels.
  std::vector<NetId> carry(k + 1, 0);
  for (int j = 1; j <= k; ++j) {
    std::vector<NetId> terms;
    for (int m = j - 1; m >= 0; --m) {
      std::vector<NetId> ins{g[m]};
      for (int t = m + 1; t < j; ++t) ins.push_back(p[t]);
      terms.push_back(build_balanced_tree(nb, kAnd, ins, TreeSkew::kBalanced));
    }
    if (carry_in) {
      std::vector<NetId> ins(p.begin(), p.begin() + j);
      ins.push_back(*carry_in);
      const TreeSkew skew = style == ClaStyle::kDelayOptimized ? TreeSkew::kFavorLast
                                                               : TreeSkew::kBalanced;
      terms.push_back(build_balanced_tree(nb, kAnd, ins, skew));
    }
    const TreeSkew or_skew = (carry_in && style == ClaStyle::kDelayOptimized)
                                 ? TreeSkew::kFavorLast
                                 : TreeSkew::kBalanced;
    carry[j] = build_balanced_tree(nb, kOr, terms, or_skew);
  }

  ClaModuleNets out;
  out.sums.resize(k);
  out.sums[0] = carry_in ? nb.add_gate(kXor, {p[0], *carry_in}) : p[0];
  for (int i = 1; i < k; ++i) out.sums[i] = nb.add_gate(kXor, {p[i], carry[i]});
  out.cout = carry[k];
  return out;
}

Netlist build_rca(int n, CarryInMode mode) {
  check_width(n);
  NetlistBuilder nb;
  Operands ops = add_operands(nb, n, mode);
  std::vector<NetId> sums;
  CarryWire carry = initial_carry(mode, ops.cin);
  NetId cout = 0;
  for (int i = 0; i < n; ++i) {
    const FullAdderNets fa = build_full_adder(nb, ops.a[i], ops.b[i], carry);
    sums.push_back(fa.sum);
    cout = fa.cout;
    carry = CarryWire::net(fa.cout);
  }
  AdderSpec spec;
  spec.arch = AdderArch::kRca;
  spec.width = n;
  spec.carry_in = mode;
  return finish_validated(std::move(nb), spec_name(spec), n, mode, sums, cout);
}

Netlist build_cska(int n, int block_size, CarryInMode mode) {
  check_width(n);
  if (block_size < 1 || n % block_size != 0) throw Error("cska block size must divide the width");
  NetlistBuilder nb;
  Operands ops = add_operands(nb, n, mode);
  std::vector<NetId> sums;

  // Per block: a ripple chain computes the sums from the true block carry,
  // a constant-entry shadow chain computes the block generate from the
  // reused p/g wires, and the skip mux selects generate vs. incoming carry
  // on the block propagate. Blocks entered by a known constant (the first
  // block unless the carry input is variable) have nothing to skip and
  // forward their ripple carry directly.
  CarryWire entry = initial_carry(mode, ops.cin);
  NetId block_cout = 0;
  for (int off = 0; off < n; off += block_size) {
    const bool has_skip = entry.is_net();
    std::vector<NetId> ps, gs;
    CarryWire carry = entry;
    NetId ripple_cout = 0;
    for (int j = 0; j < block_size; ++j) {
      const NetId a = ops.a[off + j];
      const NetId b = ops.b[off + j];
      if (has_skip && j == block_size - 1) {
        // Last cell of a skip block: the mux replaces its carry-out.
        const NetId p = nb.add_gate(kXor, {a, b});
        const NetId g = nb.add_gate(kAnd, {a, b});
        sums.push_back(nb.add_gate(kXor, {p, carry.id()}));
        ps.push_back(p);
        gs.push_back(g);
      } else {
        const FullAdderNets fa = build_full_adder(nb, a, b, carry);
        sums.push_back(fa.sum);
        ps.push_back(fa.p);
        gs.push_back(fa.g);
        ripple_cout = fa.cout;
        carry = CarryWire::net(fa.cout);
      }
    }
    if (has_skip) {
      NetId gen = gs[0];
      for (int j = 1; j < block_size; ++j) {
        const NetId t = nb.add_gate(kAnd, {ps[j], gen});
        gen = nb.add_gate(kOr, {gs[j], t});
      }
      const NetId prop = build_balanced_tree(nb, kAnd, ps, TreeSkew::kBalanced);
      block_cout = nb.add_gate(kMux, {prop, gen, entry.id()});
    } else {
      block_cout = ripple_cout;
    }
    entry = CarryWire::net(block_cout);
  }
  AdderSpec spec;
  spec.arch = AdderArch::kCska;
  spec.width = n;
  spec.carry_in = mode;
  spec.block_size = block_size;
  return finish_validated(std::move(nb), spec_name(spec), n, mode, sums, block_cout);
}

namespace {

struct CondGroup {
  std::vector<NetId> s0, s1;  // conditional sums under carry-in 0 / 1
  NetId c0, c1;               // conditional carry-outs
};

CondGroup merge_cond(NetlistBuilder& nb, const CondGroup& lower, const CondGroup& upper) {
  CondGroup out;
  const NetId sel[2] = {lower.c0, lower.c1};
  std::vector<NetId>* dst[2] = {&out.s0, &out.s1};
  const std::vector<NetId>* src[2] = {&lower.s0, &lower.s1};
  NetId* couts[2] = {&out.c0, &out.c1};
  for (int t = 0; t < 2; ++t) {
    *dst[t] = *src[t];
    for (std::size_t i = 0; i < upper.s0.size(); ++i) {
      dst[t]->push_back(nb.add_gate(kMux, {sel[t], upper.s0[i], upper.s1[i]}));
    }
    *couts[t] = nb.add_gate(kMux, {sel[t], upper.c0, upper.c1});
  }
  return out;
}

}  // namespace

Netlist build_cond_sum(int n, CarryInMode mode) {
  check_width(n);
  NetlistBuilder nb;
  Operands ops = add_operands(nb, n, mode);

  std::vector<CondGroup> groups;
  for (int i = 0; i < n; ++i) {
    CondGroup g;
    g.s0 = {nb.add_gate(kXor, {ops.a[i], ops.b[i]})};
    g.c0 = nb.add_gate(kAnd, {ops.a[i], ops.b[i]});
    g.s1 = {nb.add_gate(kXnor, {ops.a[i], ops.b[i]})};
    g.c1 = nb.add_gate(kOr, {ops.a[i], ops.b[i]});
    groups.push_back(std::move(g));
  }
  while (groups.size() > 1) {
    std::vector<CondGroup> next;
    for (std::size_t i = 0; i < groups.size(); i += 2) {
      if (i + 1 == groups.size()) {
        next.push_back(std::move(groups[i]));
      } else {
        next.push_back(merge_cond(nb, groups[i], groups[i + 1]));
      }
    }
    groups = std::move(next);
  }
  const CondGroup& top = groups.front();

  std::vector<NetId> sums;
  NetId cout = 0;
  switch (mode) {
    case CarryInMode::kVariable:
      for (int i = 0; i < n; ++i) {
        sums.push_back(nb.add_gate(kMux, {*ops.cin, top.s0[i], top.s1[i]}));
      }
      cout = nb.add_gate(kMux, {*ops.cin, top.c0, top.c1});
      break;
    case CarryInMode::kConstant1:
      sums = top.s1;
      cout = top.c1;
      break;
    default:  // none / constant0: the assumption-0 result is the answer
      sums = top.s0;
      cout = top.c0;
      break;
  }
  AdderSpec spec;
  spec.arch = AdderArch::kCondSum;
  spec.width = n;
  spec.carry_in = mode;
  return finish_validated(std::move(nb), spec_name(spec), n, mode, sums, cout);
}

namespace {

struct DualRca {
  std::vector<NetId> s0, s1;
  NetId c0, c1;
};

// Two ripple chains over the same operand slice, pre-specialized for carry-in
// 0 and 1.
DualRca build_dual_rca(NetlistBuilder& nb, std::span<const NetId> a, std::span<const NetId> b) {
  DualRca out;
  CarryWire carry = CarryWire::zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const FullAdderNets fa = build_full_adder(nb, a[i], b[i], carry);
    out.s0.push_back(fa.sum);
    out.c0 = fa.cout;
    carry = CarryWire::net(fa.cout);
  }
  carry = CarryWire::one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const FullAdderNets fa = build_full_adder(nb, a[i], b[i], carry);
    out.s1.push_back(fa.sum);
    out.c1 = fa.cout;
    carry = CarryWire::net(fa.cout);
  }
  return out;
}

}  // namespace

Netlist build_csla(int n, const std::vector<int>& blocks, CarryInMode mode) {
  check_width(n);
  if (blocks.empty() || std::accumulate(blocks.begin(), blocks.end(), 0) != n) {
    throw Error("csla block list must sum to the width");
  }
  for (int b : blocks) {
    if (b < 1) throw Error("csla block widths must be positive");
  }
  NetlistBuilder nb;
  Operands ops = add_operands(nb, n, mode);
  std::vector<NetId> sums;

  // Least significant block: one ripple chain with the top-level carry.
  int off = 0;
  CarryWire carry = initial_carry(mode, ops.cin);
  NetId select = 0;
  for (int j = 0; j < blocks[0]; ++j) {
    const FullAdderNets fa = build_full_adder(nb, ops.a[j], ops.b[j], carry);
    sums.push_back(fa.sum);
    select = fa.cout;
    carry = CarryWire::net(fa.cout);
  }
  off += blocks[0];

  // Later blocks: dual ripple chains plus (width + 1) selection muxes.
  for (std::size_t bi = 1; bi < blocks.size(); ++bi) {
    const int bw = blocks[bi];
    const std::span<const NetId> as(ops.a.data() + off, static_cast<std::size_t>(bw));
    const std::span<const NetId> bs(ops.b.data() + off, static_cast<std::size_t>(bw));
    const DualRca dual = build_dual_rca(nb, as, bs);
    for (int j = 0; j < bw; ++j) {
      sums.push_back(nb.add_gate(kMux, {select, dual.s0[j], dual.s1[j]}));
    }
    select = nb.add_gate(kMux, {select, dual.c0, dual.c1});
    off += bw;
  }
  AdderSpec spec;
  spec.arch = AdderArch::kCsla;
  spec.width = n;
  spec.carry_in = mode;
  spec.block_list = blocks;
  return finish_validated(std::move(nb), spec_name(spec), n, mode, sums, select);
}

Netlist build_cla_cascade(int n, const std::vector<int>& modules, ClaStyle style,
                          CarryInMode mode) {
  check_width(n);
  if (modules.empty() || std::accumulate(modules.begin(), modules.end(), 0) != n) {
    throw Error("cla module list must sum to the width");
  }
  NetlistBuilder nb;
  Operands ops = add_operands(nb, n, mode);

  std::optional<NetId> carry;
  if (mode == CarryInMode::kVariable) carry = *ops.cin;
  if (mode == CarryInMode::kConstant1) carry = nb.add_gate(GateKind::kConst1, {});

  std::vector<NetId> sums;
  int off = 0;
  NetId cout = 0;
  for (int k : modules) {
    if (k < 1) throw Error("cla module sizes must be positive");
    const std::span<const NetId> as(ops.a.data() + off, static_cast<std::size_t>(k));
    const std::span<const NetId> bs(ops.b.data() + off, static_cast<std::size_t>(k));
    const ClaModuleNets mod = build_cla_module(nb, as, bs, carry, style);
    sums.insert(sums.end(), mod.sums.begin(), mod.sums.end());
    carry = mod.cout;
    cout = mod.cout;
    off += k;
  }
  AdderSpec spec;
  spec.arch = AdderArch::kCla;
  spec.width = n;
  spec.carry_in = mode;
  spec.module_sizes = modules;
  spec.style = style;
  return finish_validated(std::move(nb), spec_name(spec), n, mode, sums, cout);
}

namespace {

// Cell placements for one prefix network: nodes [0, n) are the leaves, each
// op creates the node `result` = hi o lo. All five topologies compute, for
// every position i, the (generate, propagate) pair of the range [0..i].
// Non-power-of-two widths simply truncate the full network. The sparse
// topologies condense into the odd positions, run their core there, and fix
// the even positions with one final level.
struct PrefixPlan {
  struct Op {
    int result, hi, lo;
  };
  std::vector<Op> ops;
  std::vector<int> final_node;  // per position, the node spanning [0..i]
  int num_nodes = 0;
};

PrefixPlan plan_prefix_network(PrefixTopology topo, int n) {
  PrefixPlan plan;
  plan.num_nodes = n;
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  auto combine = [&plan](int hi, int lo) {
    plan.ops.push_back({plan.num_nodes, hi, lo});
    return plan.num_nodes++;
  };
  switch (topo) {
    case PrefixTopology::kKoggeStone: {
      for (int s = 1; s < n; s <<= 1) {
        std::vector<int> next = cur;
        for (int i = s; i < n; ++i) next[i] = combine(cur[i], cur[i - s]);
        cur = std::move(next);
      }
      break;
    }
    case PrefixTopology::kSklansky: {
      for (int l = 0; (1 << l) < n; ++l) {
        for (int i = 0; i < n; ++i) {
          if ((i >> l) & 1) cur[i] = combine(cur[i], cur[((i >> l) << l) - 1]);
        }
      }
      break;
    }
    case PrefixTopology::kBrentKung: {
      int dmax = 1;
      for (int d = 1; d < n; d <<= 1) {
        for (int i = 2 * d - 1; i < n; i += 2 * d) cur[i] = combine(cur[i], cur[i - d]);
        dmax = d;
      }
      for (int d = dmax >> 1; d >= 1; d >>= 1) {
        for (int i = 3 * d - 1; i < n; i += 2 * d) cur[i] = combine(cur[i], cur[i - d]);
      }
      break;
    }
    case PrefixTopology::kLadnerFischer:
    case PrefixTopology::kHanCarlson: {
      for (int i = 1; i < n; i += 2) cur[i] = combine(cur[i], cur[i - 1]);
      const int nv = n / 2;  // odd positions, virtual index vi <-> real 2*vi+1
      if (topo == PrefixTopology::kLadnerFischer) {
        for (int l = 0; (1 << l) < nv; ++l) {
          for (int vi = 0; vi < nv; ++vi) {
            if ((vi >> l) & 1) {
              const int jv = ((vi >> l) << l) - 1;
              cur[2 * vi + 1] = combine(cur[2 * vi + 1], cur[2 * jv + 1]);
            }
          }
        }
      } else {
        for (int s = 1; s < nv; s <<= 1) {
          std::vector<int> next = cur;
          for (int vi = s; vi < nv; ++vi) {
            next[2 * vi + 1] = combine(cur[2 * vi + 1], cur[2 * (vi - s) + 1]);
          }
          cur = std::move(next);
        }
      }
      for (int i = 2; i < n; i += 2) cur[i] = combine(cur[i], cur[i - 1]);
      break;
    }
  }
  plan.final_node = std::move(cur);
  return plan;
}

}  // namespace

Netlist build_prefix_adder(int n, PrefixTopology topo, CarryInMode mode) {
  check_width(n);
  NetlistBuilder nb;
  Operands ops = add_operands(nb, n, mode);

  const PrefixPlan plan = plan_prefix_network(topo, n);

  // A node's propagate is materialized only where some cell or the carry
  // folding reads it: cells needing it become black (3 gates), the rest stay
  // gray (2 gates). Every cell reads its hi operand's propagate; a cell's
  // own propagate feeds its lo operand product only when emitted.
  std::vector<bool> needs_p(static_cast<std::size_t>(plan.num_nodes), false);
  if (mode == CarryInMode::kVariable || mode == CarryInMode::kConstant1) {
    for (int node : plan.final_node) needs_p[static_cast<std::size_t>(node)] = true;
  }
  for (std::size_t oi = plan.ops.size(); oi-- > 0;) {
    const PrefixPlan::Op& op = plan.ops[oi];
    needs_p[static_cast<std::size_t>(op.hi)] = true;
    if (needs_p[static_cast<std::size_t>(op.result)]) {
      needs_p[static_cast<std::size_t>(op.lo)] = true;
    }
  }

  std::vector<NetId> p(n);
  std::vector<NetId> node_g(static_cast<std::size_t>(plan.num_nodes));
  std::vector<NetId> node_p(static_cast<std::size_t>(plan.num_nodes));
  for (int i = 0; i < n; ++i) {
    p[i] = nb.add_gate(kXor, {ops.a[i], ops.b[i]});
    node_g[i] = nb.add_gate(kAnd, {ops.a[i], ops.b[i]});
    node_p[i] = p[i];  // leaf propagate is the sum-side XOR, no extra gate
  }
  for (const PrefixPlan::Op& op : plan.ops) {
    const NetId t = nb.add_gate(kAnd, {node_p[op.hi], node_g[op.lo]});
    node_g[op.result] = nb.add_gate(kOr, {node_g[op.hi], t});
    if (needs_p[static_cast<std::size_t>(op.result)]) {
      node_p[op.result] = nb.add_gate(kAnd, {node_p[op.hi], node_p[op.lo]});
    }
  }

  // Fold the carry input into the computed range pairs.
  auto carry_into = [&](int i) -> NetId {  // carry into bit position i, i >= 1
    const int node = plan.final_node[i - 1];
    switch (mode) {
      case CarryInMode::kVariable: {
        const NetId t = nb.add_gate(kAnd, {node_p[node], *ops.cin});
        return nb.add_gate(kOr, {node_g[node], t});
      }
      case CarryInMode::kConstant1:
        return nb.add_gate(kOr, {node_g[node], node_p[node]});
      default:
        return node_g[node];
    }
  };

  std::vector<NetId> carries(n + 1, 0);
  for (int i = 1; i <= n; ++i) carries[i] = carry_into(i);

  std::vector<NetId> sums(n);
  switch (mode) {
    case CarryInMode::kVariable:
      sums[0] = nb.add_gate(kXor, {p[0], *ops.cin});
      break;
    case CarryInMode::kConstant1:
      sums[0] = nb.add_gate(kXnor, {ops.a[0], ops.b[0]});
      break;
    default:
      sums[0] = p[0];
      break;
  }
  for (int i = 1; i < n; ++i) sums[i] = nb.add_gate(kXor, {p[i], carries[i]});

  AdderSpec spec;
  spec.arch = AdderArch::kPrefix;
  spec.width = n;
  spec.carry_in = mode;
  spec.topology = topo;
  return finish_validated(std::move(nb), spec_name(spec), n, mode, sums, carries[n]);
}

Netlist build_fbha(int n, int k, const std::vector<int>& modules, ClaStyle style,
                   CarryInMode mode) {
  check_width(n);
  if (k <= 0 || k >= n) throw Error("fbha requires 0 < k < width");
  if (modules.empty() || std::accumulate(modules.begin(), modules.end(), 0) != k) {
    throw Error("fbha module list must sum to k");
  }
  NetlistBuilder nb;
  Operands ops = add_operands(nb, n, mode);

  // Less significant part: lookahead cascade over bits [0, k).
  std::optional<NetId> carry;
  if (mode == CarryInMode::kVariable) carry = *ops.cin;
  if (mode == CarryInMode::kConstant1) carry = nb.add_gate(GateKind::kConst1, {});
  std::vector<NetId> sums;
  int off = 0;
  for (int m : modules) {
    if (m < 1) throw Error("fbha module sizes must be positive");
    const std::span<const NetId> as(ops.a.data() + off, static_cast<std::size_t>(m));
    const std::span<const NetId> bs(ops.b.data() + off, static_cast<std::size_t>(m));
    const ClaModuleNets mod = build_cla_module(nb, as, bs, carry, style);
    sums.insert(sums.end(), mod.sums.begin(), mod.sums.end());
    carry = mod.cout;
    off += m;
  }
  const NetId select = *carry;
  nb.set_net_name(select, "cla_cout");

  // Significant part: one dual-ripple select block over bits [k, n), steered
  // by the cascade carry-out.
  const std::span<const NetId> as(ops.a.data() + k, static_cast<std::size_t>(n - k));
  const std::span<const NetId> bs(ops.b.data() + k, static_cast<std::size_t>(n - k));
  const DualRca dual = build_dual_rca(nb, as, bs);
  for (int j = 0; j < n - k; ++j) {
    sums.push_back(nb.add_gate(kMux, {select, dual.s0[j], dual.s1[j]}));
  }
  const NetId cout = nb.add_gate(kMux, {select, dual.c0, dual.c1});

  AdderSpec spec;
  spec.arch = AdderArch::kFbha;
  spec.width = n;
  spec.carry_in = mode;
  spec.k = k;
  spec.module_sizes = modules;
  spec.style = style;
  return finish_validated(std::move(nb), spec_name(spec), n, mode, sums, cout);
}

Netlist build(const AdderSpec& spec) {
  validate_spec(spec);
  switch (spec.arch) {
    case AdderArch::kRca:
      return build_rca(spec.width, spec.carry_in);
    case AdderArch::kCska:
      return build_cska(spec.width, spec.block_size, spec.carry_in);
    case AdderArch::kCondSum:
      return build_cond_sum(spec.width, spec.carry_in);
    case AdderArch::kCsla:
      return build_csla(spec.width, spec.block_list, spec.carry_in);
    case AdderArch::kCla:
      return build_cla_cascade(spec.width, spec.module_sizes, spec.style, spec.carry_in);
    case AdderArch::kPrefix:
      return build_prefix_adder(spec.width, spec.topology, spec.carry_in);
    case AdderArch::kFbha:
      return build_fbha(spec.width, spec.k, spec.module_sizes, spec.style, spec.carry_in);
  }
  throw Error("unknown adder architecture");
}

}  // namespace adderlab
