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

#include "adderlab/netlist.hpp"

namespace adderlab {

/// Structural description: one module, vector port declarations, one wire
/// per internal net named n<id>, one primitive instance g<id> per gate.
/// MUX2 and constants become continuous assignments. Byte-deterministic for
/// a given netlist; throws Error for an invalid one.
std::string export_verilog(const Netlist& netlist);

}  // namespace adderlab
