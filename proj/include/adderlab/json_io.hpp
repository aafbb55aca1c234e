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

#include <string>

#include "json.hpp"

#include "adderlab/analysis.hpp"
#include "adderlab/generators.hpp"
#include "adderlab/netlist.hpp"

namespace adderlab {

using Json = nlohmann::ordered_json;

/// Netlist document: { name, width, carry_in_mode, inputs, outputs,
/// nets:[{id,name?}], gates:[{id,kind,in,out}] } with dense ids and gates in
/// creation order. netlist_to_text uses the canonical two-space indentation,
/// so text -> netlist -> text round-trips byte-exactly.
Json netlist_to_json(const Netlist& netlist);
Netlist netlist_from_json(const Json& doc);
std::string netlist_to_text(const Netlist& netlist);
Netlist netlist_from_text(const std::string& text);

Json spec_to_json(const AdderSpec& spec);
AdderSpec spec_from_json(const Json& doc);

Json report_to_json(const MetricsReport& report);
MetricsReport report_from_json(const Json& doc);
Json sweep_to_json(const SweepReport& report);

}  // namespace adderlab
