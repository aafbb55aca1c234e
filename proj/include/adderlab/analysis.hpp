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

#include <cstdint>
#include <string>
#include <vector>

#include "adderlab/generators.hpp"
#include "adderlab/models.hpp"
#include "adderlab/netlist.hpp"
#include "adderlab/timing.hpp"
#include "adderlab/verify.hpp"

namespace adderlab {

struct MetricsRow {
  std::string name;
  double delay = 0.0;
  double area = 0.0;
  std::uint64_t gates = 0;                              // total census
  std::array<std::uint64_t, kGateKindCount> census{};   // per GateKind
  std::uint64_t power_proxy = 0;
  double pdp = 0.0;             // delay * power_proxy
  double normalized_pdp = 0.0;  // pdp / max pdp over the report
  bool verified = false;
  std::string error;  // set when the row failed to build or verify
};

struct MetricsReport {
  std::string timing_model;
  std::string area_model;
  std::uint64_t seed = 0;
  std::uint64_t vector_count = 0;
  std::vector<MetricsRow> rows;

  bool all_verified() const;
};

/// Fills normalized_pdp for every verified row: pdp / max pdp, with the
/// first maximal row pinned to exactly 1.0. Throws Error when a verified row
/// has non-positive pdp.
void normalized_pdp(std::vector<MetricsRow>& rows);

/// Builds, verifies (seeded random plus the directed corners) and measures
/// each spec. All specs must share one width. A failed verification marks
/// the row with an error instead of metrics. Rows keep the input order.
MetricsReport compare(const std::vector<AdderSpec>& specs, const TimingModel& timing,
                      const AreaModel& area, std::uint64_t vector_count, std::uint64_t seed);

/// The default ten-architecture comparison roster at a given width: ripple,
/// carry-skip, conditional-sum, carry-select, both lookahead styles, three
/// prefix networks and the hybrid adder.
std::vector<AdderSpec> default_roster(int width);

/// CSV with the fixed header name,delay,area,gates,power_proxy,pdp,normalized_pdp.
std::string to_csv(const MetricsReport& report);

struct SweepRow {
  int csla_width = 0;  // X, the significant part
  int cla_width = 0;   // K = N - X
  std::string name;
  double delay = 0.0;
  double area = 0.0;
  std::uint64_t gates = 0;
  bool csla_dominates = false;  // select-side arrivals exceed the cascade carry-out
  bool verified = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int argmin_index = -1;  // min delay; ties -> fewer gates, then smaller X
};

struct SweepOptions {
  std::uint64_t vector_count = 4096;
  std::uint64_t seed = 1;
};

/// For each X in csla_widths builds the hybrid adder with a uniform
/// module_size decomposition of K = width - X, verifies it and records the
/// cost metrics plus which side of the select boundary dominates the delay.
SweepReport partition_sweep(int width, const std::vector<int>& csla_widths, int module_size,
                            ClaStyle style, const TimingModel& timing,
                            const AreaModel& area = AreaModel::transistor_count(),
                            SweepOptions options = {});

std::string sweep_to_csv(const SweepReport& report);

/// All compositions of k from the allowed sizes, non-increasing when read
/// most-significant-first, returned least-significant-first in descending
/// lexicographic order of the display form. Truncation to max_count never
/// drops a uniform decomposition. Throws Error when k is not representable.
std::vector<std::vector<int>> enumerate_decompositions(int k, const std::vector<int>& allowed,
                                                       std::size_t max_count = SIZE_MAX);

enum class PlotMetric : std::uint8_t { kDelay, kArea, kPowerProxy, kPdp };

PlotMetric plot_metric_from_name(std::string_view name);

struct PlotData {
  std::string text;  // two-column (label, value) plain text
  std::string csv;   // label,value lines with a header
};

/// Tabulates one metric per report row, optionally divided by the maximum.
PlotData emit_plot_data(const MetricsReport& report, PlotMetric metric, bool normalize);

}  // namespace adderlab
