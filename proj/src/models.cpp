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

#include "adderlab/models.hpp"

namespace adderlab {

namespace {

constexpr std::size_t idx(GateKind k) { return static_cast<std::size_t>(k); }

template <typename Table>
void set_table(Table& t, double nt, double and2, double or2, double nand2, double nor2,
               double xor2, double xnor2, double mux2) {
  t[idx(GateKind::kNot)] = nt;
  t[idx(GateKind::kAnd2)] = and2;
  t[idx(GateKind::kOr2)] = or2;
  t[idx(GateKind::kNand2)] = nand2;
  t[idx(GateKind::kNor2)] = nor2;
  t[idx(GateKind::kXor2)] = xor2;
  t[idx(GateKind::kXnor2)] = xnor2;
  t[idx(GateKind::kMux2)] = mux2;
  t[idx(GateKind::kConst0)] = 0.0;
  t[idx(GateKind::kConst1)] = 0.0;
}

}  // namespace

TimingModel TimingModel::unit() {
  TimingModel m;
  m.name = "unit";
  set_table(m.delay, 1, 1, 1, 1, 1, 1, 1, 1);
  return m;
}

TimingModel TimingModel::weighted() {
  TimingModel m;
  m.name = "weighted";
  set_table(m.delay, 1, 2, 2, 1, 1, 3, 3, 3);
  return m;
}

TimingModel TimingModel::scaled(const TimingModel& base, double factor) {
  if (factor <= 0) throw Error("timing scale factor must be positive");
  TimingModel m = base;
  m.name = base.name + "*" + std::to_string(factor);
  for (double& d : m.delay) d *= factor;
  return m;
}

AreaModel AreaModel::transistor_count() {
  AreaModel m;
  m.name = "tcount";
  set_table(m.area, 2, 6, 6, 4, 4, 10, 10, 12);
  return m;
}

void check_model(const TimingModel& model) {
  for (std::size_t i = 0; i < kGateKindCount; ++i) {
    const GateKind k = static_cast<GateKind>(i);
    if (k == GateKind::kConst0 || k == GateKind::kConst1) {
      if (model.delay[i] != 0.0) throw Error("constant gates must have zero delay");
    } else if (model.delay[i] <= 0.0) {
      throw Error("gate delay must be positive for " + std::string(kind_name(k)));
    }
  }
}

void check_model(const AreaModel& model) {
  for (std::size_t i = 0; i < kGateKindCount; ++i) {
    const GateKind k = static_cast<GateKind>(i);
    if (k == GateKind::kConst0 || k == GateKind::kConst1) {
      if (model.area[i] != 0.0) throw Error("constant gates must have zero area");
    } else if (model.area[i] <= 0.0) {
      throw Error("gate area must be positive for " + std::string(kind_name(k)));
    }
  }
}

TimingModel timing_model_by_name(const std::string& name) {
  if (name == "unit") return TimingModel::unit();
  if (name == "weighted") return TimingModel::weighted();
  throw Error("unknown timing model: " + name);
}

AreaModel area_model_by_name(const std::string& name) {
  if (name == "tcount") return AreaModel::transistor_count();
  throw Error("unknown area model: " + name);
}

}  // namespace adderlab
