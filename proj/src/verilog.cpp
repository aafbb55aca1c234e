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

#include "adderlab/verilog.hpp"

#include <cctype>

namespace adderlab {

namespace {

std::string sanitize_identifier(const std::string& name) {
  std::string out;
  for (char c : name) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "m_" + out;
  return out;
}

const char* primitive_name(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
      return "not";
    case GateKind::kAnd2:
      return "and";
    case GateKind::kOr2:
      return "or";
    case GateKind::kNand2:
      return "nand";
    case GateKind::kNor2:
      return "nor";
    case GateKind::kXor2:
      return "xor";
    case GateKind::kXnor2:
      return "xnor";
    default:
      return nullptr;  // MUX2 and constants become assignments
  }
}

}  // namespace

std::string export_verilog(const Netlist& nl) {
  {
    const std::vector<std::string> bad = validate(nl);
    if (!bad.empty()) throw Error("cannot export invalid netlist: " + bad.front());
  }
  const int n = nl.width;
  const bool has_cin = nl.has_variable_carry();

  // Net id -> port expression or internal wire name.
  std::vector<std::string> ref(nl.nets.size());
  std::vector<bool> is_input(nl.nets.size(), false);
  for (int i = 0; i < n; ++i) {
    ref[nl.inputs[i]] = "a[" + std::to_string(i) + "]";
    ref[nl.inputs[n + i]] = "b[" + std::to_string(i) + "]";
    is_input[nl.inputs[i]] = is_input[nl.inputs[n + i]] = true;
  }
  if (has_cin) {
    ref[nl.inputs[2 * n]] = "cin";
    is_input[nl.inputs[2 * n]] = true;
  }
  for (std::size_t id = 0; id < nl.nets.size(); ++id) {
    if (!is_input[id]) ref[id] = "n" + std::to_string(id);
  }

  std::string v;
  v += "module " + sanitize_identifier(nl.name) + "(a, b, " + (has_cin ? "cin, " : "") +
       "sum, cout);\n";
  v += "  input [" + std::to_string(n - 1) + ":0] a;\n";
  v += "  input [" + std::to_string(n - 1) + ":0] b;\n";
  if (has_cin) v += "  input cin;\n";
  v += "  output [" + std::to_string(n - 1) + ":0] sum;\n";
  v += "  output cout;\n";
  for (std::size_t id = 0; id < nl.nets.size(); ++id) {
    if (!is_input[id]) v += "  wire " + ref[id] + ";\n";
  }
  v += "\n";
  for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
    const Gate& g = nl.gates[gi];
    const std::string out = ref[g.out];
    if (const char* prim = primitive_name(g.kind)) {
      v += "  " + std::string(prim) + " g" + std::to_string(gi) + "(" + out;
      for (int i = 0; i < arity(g.kind); ++i) v += ", " + ref[g.in[i]];
      v += ");\n";
    } else if (g.kind == GateKind::kMux2) {
      v += "  assign " + out + " = " + ref[g.in[0]] + " ? " + ref[g.in[2]] + " : " +
           ref[g.in[1]] + ";\n";
    } else {
      v += "  assign " + out + " = " + (g.kind == GateKind::kConst1 ? "1'b1" : "1'b0") + ";\n";
    }
  }
  v += "\n";
  for (int i = 0; i < n; ++i) {
    v += "  assign sum[" + std::to_string(i) + "] = " + ref[nl.outputs[i]] + ";\n";
  }
  v += "  assign cout = " + ref[nl.outputs[n]] + ";\n";
  v += "endmodule\n";
  return v;
}

}  // namespace adderlab
