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
#include <string>

#include "adderlab/netlist.hpp"

namespace adderlab {

/// Per-gate delay in abstract units. Constants cost 0, everything else > 0.
struct TimingModel {
  std::string name;
  std::array<double, kGateKindCount> delay{};

  double of(GateKind kind) const { return delay[static_cast<std::size_t>(kind)]; }

  /// Every non-constant gate costs 1.0. The default cost function.
  static TimingModel unit();
  /// Heuristic relative cell delays; a labeled proxy, not library data.
  static TimingModel weighted();
  static TimingModel scaled(const TimingModel& base, double factor);
};

/// Per-gate area in abstract units. Constants cost 0, everything else > 0.
struct AreaModel {
  std::string name;
  std::array<double, kGateKindCount> area{};

  double of(GateKind kind) const { return area[static_cast<std::size_t>(kind)]; }

  /// Classical static-CMOS transistor counts.
  static AreaModel transistor_count();
};

/// Throws Error if the model violates its invariants.
void check_model(const TimingModel& model);
void check_model(const AreaModel& model);

TimingModel timing_model_by_name(const std::string& name);
AreaModel area_model_by_name(const std::string& name);

}  // namespace adderlab
