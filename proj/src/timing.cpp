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

#include "adderlab/timing.hpp"

#include <algorithm>
#include <limits>

namespace adderlab {

std::vector<double> arrival_times(const Netlist& nl, const TimingModel& timing) {
  std::vector<double> arr(nl.nets.size(), 0.0);
  for (const Gate& g : nl.gates) {
    double in_max = 0.0;
    for (int i = 0; i < arity(g.kind); ++i) in_max = std::max(in_max, arr[g.in[i]]);
    arr[g.out] = in_max + timing.of(g.kind);
  }
  return arr;
}

CriticalPath critical_path(const Netlist& nl, const TimingModel& timing) {
  const std::vector<double> arr = arrival_times(nl, timing);

  CriticalPath cp;
  NetId end = nl.outputs.empty() ? 0 : nl.outputs[0];
  for (NetId out : nl.outputs) {
    if (arr[out] > cp.delay) {
      cp.delay = arr[out];
      end = out;
    }
  }
  if (nl.outputs.empty()) return cp;
  cp.delay = arr[end];

  // Walk drivers backwards; at each gate pick the input that realizes the
  // arrival, preferring the smallest driving gate id (primary inputs first).
  NetId net = end;
  while (true) {
    const std::int64_t gi = nl.driver_gate(net);
    if (gi < 0) break;
    cp.path.push_back(static_cast<GateId>(gi));
    const Gate& g = nl.gates[static_cast<std::size_t>(gi)];
    if (arity(g.kind) == 0) break;
    NetId best = g.in[0];
    std::int64_t best_driver = std::numeric_limits<std::int64_t>::max();
    bool found = false;
    const double d = timing.of(g.kind);
    for (int i = 0; i < arity(g.kind); ++i) {
      const NetId in = g.in[i];
      if (arr[in] + d != arr[g.out]) continue;  // exact: same op as the forward pass
      const std::int64_t drv = nl.driver_gate(in);
      if (!found || drv < best_driver) {
        best = in;
        best_driver = drv;
        found = true;
      }
    }
    net = best;
  }
  std::reverse(cp.path.begin(), cp.path.end());
  return cp;
}

AreaReport area_report(const Netlist& nl, const AreaModel& area) {
  AreaReport rep;
  for (const Gate& g : nl.gates) rep.census[static_cast<std::size_t>(g.kind)]++;
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    rep.total += static_cast<double>(rep.census[k]) * area.area[k];
  }
  return rep;
}

}  // namespace adderlab
