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

#include "adderlab/json_io.hpp"

namespace adderlab {

Json netlist_to_json(const Netlist& nl) {
  Json doc;
  doc["name"] = nl.name;
  doc["width"] = nl.width;
  doc["carry_in_mode"] = std::string(carry_in_mode_name(nl.carry_in));
  doc["inputs"] = nl.inputs;
  doc["outputs"] = nl.outputs;
  Json nets = Json::array();
  for (std::size_t id = 0; id < nl.nets.size(); ++id) {
    Json net;
    net["id"] = id;
    if (!nl.nets[id].name.empty()) net["name"] = nl.nets[id].name;
    nets.push_back(std::move(net));
  }
  doc["nets"] = std::move(nets);
  Json gates = Json::array();
  for (std::size_t gi = 0; gi < nl.gates.size(); ++gi) {
    const Gate& g = nl.gates[gi];
    Json gate;
    gate["id"] = gi;
    gate["kind"] = std::string(kind_name(g.kind));
    gate["in"] = std::vector<NetId>(g.in.begin(), g.in.begin() + arity(g.kind));
    gate["out"] = g.out;
    gates.push_back(std::move(gate));
  }
  doc["gates"] = std::move(gates);
  return doc;
}

Netlist netlist_from_json(const Json& doc) {
  try {
    Netlist nl;
    nl.name = doc.at("name").get<std::string>();
    nl.width = doc.at("width").get<int>();
    nl.carry_in = carry_in_mode_from_name(doc.at("carry_in_mode").get<std::string>());
    nl.inputs = doc.at("inputs").get<std::vector<NetId>>();
    nl.outputs = doc.at("outputs").get<std::vector<NetId>>();
    const Json& nets = doc.at("nets");
    nl.nets.resize(nets.size());
    for (std::size_t i = 0; i < nets.size(); ++i) {
      const Json& net = nets[i];
      if (net.at("id").get<std::size_t>() != i) throw Error("net ids must be dense and in order");
      if (net.contains("name")) nl.nets[i].name = net.at("name").get<std::string>();
    }
    const Json& gates = doc.at("gates");
    nl.gates.resize(gates.size());
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
      const Json& gj = gates[gi];
      if (gj.at("id").get<std::size_t>() != gi) throw Error("gate ids must be dense and in order");
      Gate& g = nl.gates[gi];
      g.kind = kind_from_name(gj.at("kind").get<std::string>());
      const auto ins = gj.at("in").get<std::vector<NetId>>();
      if (static_cast<int>(ins.size()) != arity(g.kind)) {
        throw Error("gate " + std::to_string(gi) + " has wrong input count");
      }
      std::copy(ins.begin(), ins.end(), g.in.begin());
      g.out = gj.at("out").get<NetId>();
    }
    nl.rebuild_driver_index();
    return nl;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed netlist document: ") + e.what());
  }
}

std::string netlist_to_text(const Netlist& nl) { return netlist_to_json(nl).dump(2) + "\n"; }

Netlist netlist_from_text(const std::string& text) {
  try {
    return netlist_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed netlist document: ") + e.what());
  }
}

Json spec_to_json(const AdderSpec& spec) {
  Json doc;
  doc["arch"] = std::string(adder_arch_name(spec.arch));
  doc["width"] = spec.width;
  doc["carry_in"] = std::string(carry_in_mode_name(spec.carry_in));
  switch (spec.arch) {
    case AdderArch::kCska:
      doc["block_size"] = spec.block_size;
      break;
    case AdderArch::kCsla:
      doc["blocks"] = spec.block_list;
      break;
    case AdderArch::kCla:
      doc["modules"] = spec.module_sizes;
      doc["style"] = std::string(cla_style_name(spec.style));
      break;
    case AdderArch::kPrefix:
      doc["topology"] = std::string(prefix_topology_name(spec.topology));
      break;
    case AdderArch::kFbha:
      doc["k"] = spec.k;
      doc["modules"] = spec.module_sizes;
      doc["style"] = std::string(cla_style_name(spec.style));
      break;
    default:
      break;
  }
  return doc;
}

AdderSpec spec_from_json(const Json& doc) {
  try {
    AdderSpec spec;
    spec.arch = adder_arch_from_name(doc.at("arch").get<std::string>());
    spec.width = doc.at("width").get<int>();
    if (doc.contains("carry_in")) {
      spec.carry_in = carry_in_mode_from_name(doc.at("carry_in").get<std::string>());
    }
    if (doc.contains("block_size")) spec.block_size = doc.at("block_size").get<int>();
    if (doc.contains("blocks")) spec.block_list = doc.at("blocks").get<std::vector<int>>();
    if (doc.contains("modules")) spec.module_sizes = doc.at("modules").get<std::vector<int>>();
    if (doc.contains("style")) spec.style = cla_style_from_name(doc.at("style").get<std::string>());
    if (doc.contains("topology")) {
      spec.topology = prefix_topology_from_name(doc.at("topology").get<std::string>());
    }
    if (doc.contains("k")) spec.k = doc.at("k").get<int>();
    validate_spec(spec);
    return spec;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed adder spec: ") + e.what());
  }
}

Json report_to_json(const MetricsReport& report) {
  Json doc;
  doc["timing_model"] = report.timing_model;
  doc["area_model"] = report.area_model;
  doc["seed"] = report.seed;
  doc["vector_count"] = report.vector_count;
  Json rows = Json::array();
  for (const MetricsRow& r : report.rows) {
    Json row;
    row["name"] = r.name;
    if (r.verified) {
      row["delay"] = r.delay;
      row["area"] = r.area;
      row["gates"] = r.gates;
      Json census = Json::object();
      for (std::size_t kind = 0; kind < kGateKindCount; ++kind) {
        if (r.census[kind] != 0) {
          census[std::string(kind_name(static_cast<GateKind>(kind)))] = r.census[kind];
        }
      }
      row["census"] = std::move(census);
      row["power_proxy"] = r.power_proxy;
      row["pdp"] = r.pdp;
      row["normalized_pdp"] = r.normalized_pdp;
    }
    row["verified"] = r.verified;
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

MetricsReport report_from_json(const Json& doc) {
  try {
    MetricsReport report;
    report.timing_model = doc.at("timing_model").get<std::string>();
    report.area_model = doc.at("area_model").get<std::string>();
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.vector_count = doc.at("vector_count").get<std::uint64_t>();
    for (const Json& row : doc.at("rows")) {
      MetricsRow r;
      r.name = row.at("name").get<std::string>();
      r.verified = row.at("verified").get<bool>();
      if (r.verified) {
        r.delay = row.at("delay").get<double>();
        r.area = row.at("area").get<double>();
        r.gates = row.at("gates").get<std::uint64_t>();
        if (row.contains("census")) {
          for (const auto& [kind, count] : row.at("census").items()) {
            r.census[static_cast<std::size_t>(kind_from_name(kind))] =
                count.get<std::uint64_t>();
          }
        }
        r.power_proxy = row.at("power_proxy").get<std::uint64_t>();
        r.pdp = row.at("pdp").get<double>();
        r.normalized_pdp = row.at("normalized_pdp").get<double>();
      }
      if (row.contains("error")) r.error = row.at("error").get<std::string>();
      report.rows.push_back(std::move(r));
    }
    return report;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed metrics report: ") + e.what());
  }
}

Json sweep_to_json(const SweepReport& report) {
  Json doc;
  Json rows = Json::array();
  for (const SweepRow& r : report.rows) {
    Json row;
    row["name"] = r.name;
    row["csla_width"] = r.csla_width;
    row["cla_width"] = r.cla_width;
    row["delay"] = r.delay;
    row["area"] = r.area;
    row["gates"] = r.gates;
    row["dominant_path"] = r.csla_dominates ? "csla" : "cla";
    row["verified"] = r.verified;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["argmin_index"] = report.argmin_index;
  return doc;
}

}  // namespace adderlab
