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
#include <vector>

#include "adderlab/models.hpp"
#include "adderlab/netlist.hpp"

namespace adderlab {

/// Arrival time of every net: primary inputs arrive at 0, a gate output at
/// max over its inputs plus the gate delay.
std::vector<double> arrival_times(const Netlist& netlist, const TimingModel& timing);

struct CriticalPath {
  double delay = 0.0;
  std::vector<GateId> path;  // witness, in input-to-output order
};

/// Longest weighted path over the gate DAG, reported as the maximum output
/// arrival plus one witness path. Ties are broken by the smallest driving
/// gate id at each step (outputs are scanned in port order, sums then cout).
CriticalPath critical_path(const Netlist& netlist, const TimingModel& timing);

struct AreaReport {
  double total = 0.0;
  std::array<std::uint64_t, kGateKindCount> census{};  // per GateKind gate counts

  std::uint64_t total_gates() const {
    std::uint64_t n = 0;
    for (std::uint64_t c : census) n += c;
    return n;
  }
};

/// Weighted gate census: total = sum of census[kind] * area[kind]. Constant
/// gates appear in the census but contribute zero area.
AreaReport area_report(const Netlist& netlist, const AreaModel& area);

}  // namespace adderlab
