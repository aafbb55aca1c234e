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

#include "adderlab/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace adderlab {

namespace {

// Shortest decimal form that round-trips; "16" stays "16".
std::string fmt_double(double v) {
  for (int prec = 1; prec <= 17; ++prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return std::to_string(v);
}

}  // namespace

bool MetricsReport::all_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const MetricsRow& r) { return r.verified; });
}

void normalized_pdp(std::vector<MetricsRow>& rows) {
  double max_pdp = 0.0;
  std::size_t argmax = SIZE_MAX;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].verified) continue;
    if (rows[i].pdp <= 0.0) {
      throw Error("normalized pdp requires positive pdp values, row '" + rows[i].name + "' has " +
                  fmt_double(rows[i].pdp));
    }
    if (rows[i].pdp > max_pdp) {
      max_pdp = rows[i].pdp;
      argmax = i;
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].verified) continue;
    rows[i].normalized_pdp = i == argmax ? 1.0 : rows[i].pdp / max_pdp;
  }
}

MetricsReport compare(const std::vector<AdderSpec>& specs, const TimingModel& timing,
                      const AreaModel& area, std::uint64_t vector_count, std::uint64_t seed) {
  check_model(timing);
  check_model(area);
  if (specs.empty()) throw Error("compare needs at least one spec");
  const int width = specs.front().width;
  for (const AdderSpec& s : specs) {
    if (s.width != width) throw Error("compare specs must share one width");
  }

  MetricsReport report;
  report.timing_model = timing.name;
  report.area_model = area.name;
  report.seed = seed;
  report.vector_count = vector_count;

  for (const AdderSpec& spec : specs) {
    MetricsRow row;
    row.name = spec_name(spec);
    try {
      const Netlist nl = build(spec);
      row.name = nl.name;
      VerifyOptions vo;
      vo.vector_count = vector_count;
      vo.seed = seed;
      const VerifyOutcome random_out = verify(nl, VerifyMode::kRandom, vo);
      const VerifyOutcome directed_out = verify(nl, VerifyMode::kDirected, vo);
      if (!random_out.passed() || !directed_out.passed()) {
        row.error = describe(random_out.passed() ? directed_out : random_out);
        report.rows.push_back(std::move(row));
        continue;
      }
      row.delay = critical_path(nl, timing).delay;
      const AreaReport ar = area_report(nl, area);
      row.area = ar.total;
      row.gates = ar.total_gates();
      row.census = ar.census;
      const std::vector<InputVector> vecs = random_vectors(nl, vector_count, seed);
      row.power_proxy = toggle_power_proxy(nl, vecs, seed).power_proxy;
      row.pdp = row.delay * static_cast<double>(row.power_proxy);
      row.verified = true;
    } catch (const Error& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  normalized_pdp(report.rows);
  return report;
}

std::vector<AdderSpec> default_roster(int width) {
  if (width < 4 || width % 4 != 0) {
    throw Error("default roster needs a width divisible by 4, got " + std::to_string(width));
  }
  auto uniform = [](int total, int part) {
    return std::vector<int>(static_cast<std::size_t>(total / part), part);
  };

  std::vector<AdderSpec> specs;
  AdderSpec rca;
  rca.arch = AdderArch::kRca;
  rca.width = width;
  specs.push_back(rca);

  AdderSpec cska;
  cska.arch = AdderArch::kCska;
  cska.width = width;
  cska.block_size = width >= 8 ? 4 : 2;
  specs.push_back(cska);

  AdderSpec csa;
  csa.arch = AdderArch::kCondSum;
  csa.width = width;
  specs.push_back(csa);

  AdderSpec csla;
  csla.arch = AdderArch::kCsla;
  csla.width = width;
  csla.block_list = uniform(width, width / 4);  // four uniform blocks
  specs.push_back(csla);

  AdderSpec ccla;
  ccla.arch = AdderArch::kCla;
  ccla.width = width;
  ccla.module_sizes = uniform(width, 4);
  ccla.style = ClaStyle::kConventional;
  specs.push_back(ccla);

  AdderSpec dcla = ccla;
  dcla.style = ClaStyle::kDelayOptimized;
  specs.push_back(dcla);

  for (PrefixTopology t :
       {PrefixTopology::kBrentKung, PrefixTopology::kSklansky, PrefixTopology::kKoggeStone}) {
    AdderSpec p;
  p.arch = AdderArch::kPrefix;
  p.width = width;
    p.topology = t;
    specs.push_back(p);
  }

  AdderSpec fbha;
  fbha.arch = AdderArch::kFbha;
  fbha.width = width;
  fbha.style = ClaStyle::kDelayOptimized;
  if (width == 32) {
    fbha.k = 24;
    fbha.module_sizes = {2, 2, 4, 4, 4, 8};  // the 8-4-4-4-2-2 variant, stored lsb-first
  } else if (width % 16 == 0) {
    fbha.k = 3 * width / 4;
    fbha.module_sizes = uniform(fbha.k, 4);
  } else {
    fbha.k = width / 2;
    fbha.module_sizes = uniform(fbha.k, width >= 8 ? 4 : 2);
  }
  specs.push_back(fbha);
  return specs;
}

std::string to_csv(const MetricsReport& report) {
  std::string out = "name,delay,area,gates,power_proxy,pdp,normalized_pdp\n";
  for (const MetricsRow& r : report.rows) {
    out += r.name + "," + fmt_double(r.delay) + "," + fmt_double(r.area) + "," +
           std::to_string(r.gates) + "," + std::to_string(r.power_proxy) + "," +
           fmt_double(r.pdp) + "," + fmt_double(r.normalized_pdp) + "\n";
  }
  return out;
}

SweepReport partition_sweep(int width, const std::vector<int>& csla_widths, int module_size,
                            ClaStyle style, const TimingModel& timing, const AreaModel& area,
                            SweepOptions options) {
  check_model(timing);
  check_model(area);
  if (csla_widths.empty()) throw Error("sweep needs at least one csla width");
  if (module_size < 1) throw Error("module size must be positive");

  SweepReport report;
  for (int x : csla_widths) {
    const int k = width - x;
    if (x < 1 || k < 1) throw Error("csla width " + std::to_string(x) + " leaves no cla part");
    if (k % module_size != 0) {
      throw Error("undecomposable K: " + std::to_string(k) + " is not a multiple of " +
                  std::to_string(module_size));
    }
    const std::vector<int> modules(static_cast<std::size_t>(k / module_size), module_size);
    const Netlist nl = build_fbha(width, k, modules, style);

    SweepRow row;
    row.csla_width = x;
    row.cla_width = k;
    row.name = nl.name;

    VerifyOptions vo;
    vo.vector_count = options.vector_count;
    vo.seed = options.seed;
    row.verified = verify(nl, VerifyMode::kRandom, vo).passed() &&
                   verify(nl, VerifyMode::kDirected, vo).passed();

    row.delay = critical_path(nl, timing).delay;
    const AreaReport ar = area_report(nl, area);
    row.area = ar.total;
    row.gates = ar.total_gates();

    // Dominance diagnosis: compare the cascade carry-out arrival against the
    // latest select-side mux data input (dual-ripple sums and carry-outs).
    const std::vector<double> arr = arrival_times(nl, timing);
    const NetId sel = *nl.find_net("cla_cout");
    double select_side = 0.0;
    for (const Gate& g : nl.gates) {
      if (g.kind != GateKind::kMux2) continue;
      select_side = std::max({select_side, arr[g.in[1]], arr[g.in[2]]});
    }
    row.csla_dominates = select_side > arr[sel];
    report.rows.push_back(std::move(row));
  }

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (report.argmin_index < 0) {
      report.argmin_index = static_cast<int>(i);
      continue;
    }
    const SweepRow& best = report.rows[static_cast<std::size_t>(report.argmin_index)];
    const SweepRow& r = report.rows[i];
    const bool better = r.delay < best.delay ||
                        (r.delay == best.delay && r.gates < best.gates) ||
                        (r.delay == best.delay && r.gates == best.gates &&
                         r.csla_width < best.csla_width);
    if (better) report.argmin_index = static_cast<int>(i);
  }
  return report;
}

std::string sweep_to_csv(const SweepReport& report) {
  std::string out = "name,csla_width,cla_width,delay,area,gates,dominant_path,verified\n";
  for (const SweepRow& r : report.rows) {
    out += r.name + "," + std::to_string(r.csla_width) + "," + std::to_string(r.cla_width) + "," +
           fmt_double(r.delay) + "," + fmt_double(r.area) + "," + std::to_string(r.gates) + "," +
           (r.csla_dominates ? "csla" : "cla") + "," + (r.verified ? "yes" : "no") + "\n";
  }
  return out;
}

namespace {

void decompose_rec(int remaining, int max_part, const std::vector<int>& allowed_desc,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    std::vector<int> lsf(cur.rbegin(), cur.rend());
    out.push_back(std::move(lsf));
    return;
  }
  for (int part : allowed_desc) {
    if (part > max_part || part > remaining) continue;
    cur.push_back(part);
    decompose_rec(remaining - part, part, allowed_desc, cur, out);
    cur.pop_back();
  }
}

bool is_uniform(const std::vector<int>& parts) {
  return std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts.front(); });
}

}  // namespace

std::vector<std::vector<int>> enumerate_decompositions(int k, const std::vector<int>& allowed,
                                                       std::size_t max_count) {
  if (k < 1) throw Error("decomposition target must be positive");
  if (allowed.empty()) throw Error("allowed size set must not be empty");
  std::vector<int> sizes = allowed;
  for (int s : sizes) {
    if (s < 1) throw Error("allowed sizes must be positive");
  }
  std::sort(sizes.rbegin(), sizes.rend());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  decompose_rec(k, sizes.front(), sizes, cur, all);
  if (all.empty()) {
    throw Error("K not representable: " + std::to_string(k) + " has no decomposition");
  }
  if (all.size() <= max_count) return all;

  // Keep the first max_count entries but never drop a uniform decomposition.
  std::vector<std::vector<int>> kept;
  std::size_t uniform_total = 0;
  for (const auto& d : all) uniform_total += is_uniform(d) ? 1 : 0;
  std::size_t non_uniform_budget = max_count > uniform_total ? max_count - uniform_total : 0;
  for (const auto& d : all) {
    if (is_uniform(d)) {
      kept.push_back(d);
    } else if (non_uniform_budget > 0) {
      kept.push_back(d);
      --non_uniform_budget;
    }
  }
  return kept;
}

PlotMetric plot_metric_from_name(std::string_view name) {
  if (name == "delay") return PlotMetric::kDelay;
  if (name == "area") return PlotMetric::kArea;
  if (name == "power_proxy" || name == "power") return PlotMetric::kPowerProxy;
  if (name == "pdp") return PlotMetric::kPdp;
  throw Error("unknown metric: " + std::string(name));
}

PlotData emit_plot_data(const MetricsReport& report, PlotMetric metric, bool normalize) {
  if (report.rows.empty()) throw Error("plot needs a non-empty report");
  auto value_of = [&](const MetricsRow& r) {
    switch (metric) {
      case PlotMetric::kDelay:
        return r.delay;
      case PlotMetric::kArea:
        return r.area;
      case PlotMetric::kPowerProxy:
        return static_cast<double>(r.power_proxy);
      case PlotMetric::kPdp:
        return r.pdp;
    }
    return 0.0;
  };
  double max_v = 0.0;
  for (const MetricsRow& r : report.rows) max_v = std::max(max_v, value_of(r));
  if (normalize && max_v <= 0.0) throw Error("cannot normalize: maximum value is not positive");

  PlotData out;
  out.csv = "label,value\n";
  for (const MetricsRow& r : report.rows) {
    const double v = normalize ? value_of(r) / max_v : value_of(r);
    char line[192];
    std::snprintf(line, sizeof line, "%-32s %s\n", r.name.c_str(), fmt_double(v).c_str());
    out.text += line;
    out.csv += r.name + "," + fmt_double(v) + "\n";
  }
  return out;
}

}  // namespace adderlab
