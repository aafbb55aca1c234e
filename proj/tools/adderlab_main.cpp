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

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adderlab/analysis.hpp"
#include "adderlab/generators.hpp"
#include "adderlab/io.hpp"
#include "adderlab/json_io.hpp"
#include "adderlab/models.hpp"
#include "adderlab/simulate.hpp"
#include "adderlab/timing.hpp"
#include "adderlab/verify.hpp"
#include "adderlab/verilog.hpp"

namespace {

using namespace adderlab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct SpecFlags {
  std::string arch = "rca";
  int width = 32;
  std::string carry_in = "none";
  int block_size = 0;
  std::vector<int> blocks;
  std::vector<int> modules;
  std::string style = "conventional";
  std::string topology = "kogge_stone";
  int k = 0;
  std::string spec_path;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--arch", f.arch, "architecture: rca|cska|cond_sum|csla|cla|prefix|fbha");
  cmd->add_option("--width", f.width, "operand width in bits");
  cmd->add_option("--carry-in", f.carry_in, "carry mode: none|variable|constant0|constant1");
  cmd->add_option("--block-size", f.block_size, "cska block width");
  cmd->add_option("--blocks", f.blocks, "csla block widths, least-significant-first")
      ->delimiter(',');
  cmd->add_option("--modules", f.modules, "cla module sizes, least-significant-first")
      ->delimiter(',');
  cmd->add_option("--style", f.style, "cla style: conventional|optimized");
  cmd->add_option("--topology", f.topology,
                  "prefix topology: brent_kung|sklansky|kogge_stone|ladner_fischer|han_carlson");
  cmd->add_option("--k", f.k, "fbha: width of the less significant (cla) part");
  cmd->add_option("--spec", f.spec_path, "read the adder spec from a JSON file instead of flags");
}

AdderSpec spec_from_flags(const SpecFlags& f) {
  if (!f.spec_path.empty()) return spec_from_json(Json::parse(read_file(f.spec_path)));
  AdderSpec spec;
  spec.arch = adder_arch_from_name(f.arch);
  spec.width = f.width;
  spec.carry_in = carry_in_mode_from_name(f.carry_in);
  spec.block_size = f.block_size;
  spec.block_list = f.blocks;
  spec.module_sizes = f.modules;
  spec.style = cla_style_from_name(f.style);
  spec.topology = prefix_topology_from_name(f.topology);
  spec.k = f.k;
  validate_spec(spec);
  return spec;
}

Netlist load_netlist(const std::string& netlist_path, const SpecFlags& f, bool have_spec_input) {
  if (!netlist_path.empty()) {
    Netlist nl = netlist_from_text(read_file(netlist_path));
    const std::vector<std::string> bad = validate(nl);
    if (!bad.empty()) throw Error("invalid netlist in " + netlist_path + ": " + bad.front());
    return nl;
  }
  if (!have_spec_input) throw Error("either --netlist or spec flags are required");
  return build(spec_from_flags(f));
}

void print_verify(const Netlist& nl, const VerifyOutcome& outcome) {
  std::printf("%s: %s\n", nl.name.c_str(), describe(outcome).c_str());
}

int cmd_build(const SpecFlags& f, const std::string& out) {
  const Netlist nl = build(spec_from_flags(f));
  const std::string text = netlist_to_text(nl);
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);  // bare JSON, pipeline-friendly
    return kExitOk;
  }
  write_file_atomic(out, text);
  std::printf("%s: width %d, %zu gates, %zu nets\n", nl.name.c_str(), nl.width, nl.num_gates(),
              nl.num_nets());
  std::printf("netlist written to %s\n", out.c_str());
  return kExitOk;
}

int cmd_verify(const Netlist& nl, const std::string& mode, std::uint64_t vectors,
               std::uint64_t seed, bool serial) {
  VerifyOptions options;
  options.vector_count = vectors;
  options.seed = seed;
  options.policy = serial ? ExecPolicy::kSerial : ExecPolicy::kParallel;

  const VerifyMode m = verify_mode_from_name(mode);
  const VerifyOutcome outcome = verify(nl, m, options);
  print_verify(nl, outcome);
  if (!outcome.passed()) return kExitVerifyFailed;
  if (m == VerifyMode::kRandom) {
    // Random runs always finish with the directed corner set.
    const VerifyOutcome corners = verify(nl, VerifyMode::kDirected, options);
    print_verify(nl, corners);
    if (!corners.passed()) return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_analyze(const Netlist& nl, const std::string& timing_name, const std::string& area_name,
                std::uint64_t vectors, std::uint64_t seed, const std::string& out) {
  const TimingModel timing = timing_model_by_name(timing_name);
  const AreaModel area = area_model_by_name(area_name);
  const CriticalPath cp = critical_path(nl, timing);
  const AreaReport ar = area_report(nl, area);
  const std::vector<InputVector> vecs = random_vectors(nl, vectors, seed);
  const ActivityReport act = toggle_power_proxy(nl, vecs, seed);

  std::printf("%s\n", nl.name.c_str());
  std::printf("  width        %d\n", nl.width);
  std::printf("  gates        %zu\n", nl.num_gates());
  std::printf("  delay        %g units (%s), witness path %zu gates\n", cp.delay,
              timing.name.c_str(), cp.path.size());
  std::printf("  area         %g units (%s)\n", ar.total, area.name.c_str());
  std::printf("  census      ");
  for (std::size_t kind = 0; kind < kGateKindCount; ++kind) {
    if (ar.census[kind] == 0) continue;
    std::printf(" %s:%llu", std::string(kind_name(static_cast<GateKind>(kind))).c_str(),
                static_cast<unsigned long long>(ar.census[kind]));
  }
  std::printf("\n");
  std::printf("  power_proxy  %llu (%llu vectors, seed %llu)\n",
              static_cast<unsigned long long>(act.power_proxy),
              static_cast<unsigned long long>(act.vector_count),
              static_cast<unsigned long long>(act.seed));

  if (!out.empty()) {
    Json doc;
    doc["name"] = nl.name;
    doc["width"] = nl.width;
    doc["gates"] = nl.num_gates();
    doc["timing_model"] = timing.name;
    doc["delay"] = cp.delay;
    doc["critical_path_gates"] = cp.path;
    doc["area_model"] = area.name;
    doc["area"] = ar.total;
    Json census = Json::object();
    for (std::size_t kind = 0; kind < kGateKindCount; ++kind) {
      if (ar.census[kind] != 0) {
        census[std::string(kind_name(static_cast<GateKind>(kind)))] = ar.census[kind];
      }
    }
    doc["census"] = std::move(census);
    doc["power_proxy"] = act.power_proxy;
    doc["vector_count"] = act.vector_count;
    doc["seed"] = act.seed;
    write_file_atomic(out, doc.dump(2) + "\n");
    std::printf("report written to %s\n", out.c_str());
  }
  return kExitOk;
}

int cmd_sweep(int width, const std::vector<int>& csla_sizes, int module_size,
              const std::string& style, const std::string& timing_name, std::uint64_t vectors,
              std::uint64_t seed, const std::string& out_csv, const std::string& out_json) {
  SweepOptions options;
  options.vector_count = vectors;
  options.seed = seed;
  const SweepReport report =
      partition_sweep(width, csla_sizes, module_size, cla_style_from_name(style),
                      timing_model_by_name(timing_name), AreaModel::transistor_count(), options);

  std::printf("%-28s %6s %6s %10s %10s %8s %-9s %s\n", "name", "X", "K", "delay", "area", "gates",
              "dominant", "verified");
  for (const SweepRow& r : report.rows) {
    std::printf("%-28s %6d %6d %10g %10g %8llu %-9s %s\n", r.name.c_str(), r.csla_width,
                r.cla_width, r.delay, r.area, static_cast<unsigned long long>(r.gates),
                r.csla_dominates ? "csla" : "cla", r.verified ? "yes" : "NO");
  }
  if (report.argmin_index >= 0) {
    const SweepRow& best = report.rows[static_cast<std::size_t>(report.argmin_index)];
    std::printf("argmin: %s (X=%d, delay %g)\n", best.name.c_str(), best.csla_width, best.delay);
  }
  if (!out_csv.empty()) write_file_atomic(out_csv, sweep_to_csv(report));
  if (!out_json.empty()) write_file_atomic(out_json, sweep_to_json(report).dump(2) + "\n");

  for (const SweepRow& r : report.rows) {
    if (!r.verified) return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_compare(int width, const std::string& specs_path, const std::string& timing_name,
                const std::string& area_name, std::uint64_t vectors, std::uint64_t seed,
                const std::string& out_json, const std::string& out_csv) {
  std::vector<AdderSpec> specs;
  if (specs_path.empty()) {
    specs = default_roster(width);
  } else {
    for (const Json& doc : Json::parse(read_file(specs_path))) {
      specs.push_back(spec_from_json(doc));
    }
  }
  const MetricsReport report = compare(specs, timing_model_by_name(timing_name),
                                       area_model_by_name(area_name), vectors, seed);

  std::printf("%-32s %10s %10s %8s %12s %14s %8s\n", "name", "delay", "area", "gates",
              "power_proxy", "pdp", "npdp");
  for (const MetricsRow& r : report.rows) {
    if (!r.verified) {
      std::printf("%-32s ERROR %s\n", r.name.c_str(), r.error.c_str());
      continue;
    }
    std::printf("%-32s %10g %10g %8llu %12llu %14g %8.4f\n", r.name.c_str(), r.delay, r.area,
                static_cast<unsigned long long>(r.gates),
                static_cast<unsigned long long>(r.power_proxy), r.pdp, r.normalized_pdp);
  }
  if (!out_json.empty()) write_file_atomic(out_json, report_to_json(report).dump(2) + "\n");
  if (!out_csv.empty()) write_file_atomic(out_csv, to_csv(report));
  return report.all_verified() ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const Netlist& nl, const std::string& out) {
  const std::string text = export_verilog(nl);
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_file_atomic(out, text);
    std::printf("%s: %zu gates exported to %s\n", nl.name.c_str(), nl.num_gates(), out.c_str());
  }
  return kExitOk;
}

int cmd_plot(const std::string& report_path, const std::string& metric, bool normalize,
             const std::string& out) {
  const MetricsReport report = report_from_json(Json::parse(read_file(report_path)));
  const PlotData data = emit_plot_data(report, plot_metric_from_name(metric), normalize);
  std::fputs(data.text.c_str(), stdout);
  if (!out.empty()) write_file_atomic(out, data.csv);
  return kExitOk;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"adderlab: build, verify, time, size and compare gate-level adders"};
  app.require_subcommand(1);

  // build
  SpecFlags build_flags;
  std::string build_out;
  CLI::App* build_cmd = app.add_subcommand("build", "construct a netlist and write it as JSON");
  add_spec_flags(build_cmd, build_flags);
  build_cmd->add_option("--out", build_out, "output netlist JSON path");

  // verify
  SpecFlags verify_flags;
  std::string verify_netlist, verify_mode = "random";
  std::uint64_t verify_vectors = 100000, verify_seed = 1;
  bool verify_serial = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a netlist against the integer oracle");
  verify_cmd->add_option("--netlist", verify_netlist, "netlist JSON path");
  add_spec_flags(verify_cmd, verify_flags);
  verify_cmd->add_option("--mode", verify_mode, "exhaustive|random|directed");
  verify_cmd->add_option("--vectors", verify_vectors, "random vector count");
  verify_cmd->add_option("--seed", verify_seed, "random vector seed");
  verify_cmd->add_flag("--serial", verify_serial, "use the serial reference kernel");

  // analyze
  SpecFlags analyze_flags;
  std::string analyze_netlist, analyze_timing = "unit", analyze_area = "tcount", analyze_out;
  std::uint64_t analyze_vectors = 1000, analyze_seed = 1;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "delay, area census and power proxy of one netlist");
  analyze_cmd->add_option("--netlist", analyze_netlist, "netlist JSON path");
  add_spec_flags(analyze_cmd, analyze_flags);
  analyze_cmd->add_option("--timing", analyze_timing, "timing model: unit|weighted");
  analyze_cmd->add_option("--area", analyze_area, "area model: tcount");
  analyze_cmd->add_option("--vectors", analyze_vectors, "power proxy vector count");
  analyze_cmd->add_option("--seed", analyze_seed, "power proxy vector seed");
  analyze_cmd->add_option("--out", analyze_out, "metrics JSON path");

  // sweep
  int sweep_width = 32, sweep_module_size = 4;
  std::vector<int> sweep_sizes;
  std::string sweep_style = "optimized", sweep_timing = "unit", sweep_csv, sweep_json;
  std::uint64_t sweep_vectors = 4096, sweep_seed = 1;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "partition sweep over hybrid adder split points");
  sweep_cmd->add_option("--width", sweep_width, "operand width");
  sweep_cmd->add_option("--csla-sizes", sweep_sizes, "significant-part widths to try")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--module-size", sweep_module_size, "uniform cla module size");
  sweep_cmd->add_option("--style", sweep_style, "cla style: conventional|optimized");
  sweep_cmd->add_option("--timing", sweep_timing, "timing model: unit|weighted");
  sweep_cmd->add_option("--vectors", sweep_vectors, "verification vector count per row");
  sweep_cmd->add_option("--seed", sweep_seed, "verification seed");
  sweep_cmd->add_option("--out", sweep_csv, "sweep CSV path");
  sweep_cmd->add_option("--json", sweep_json, "sweep JSON path");

  // compare
  int compare_width = 32;
  std::string compare_specs, compare_timing = "unit", compare_area = "tcount";
  std::string compare_json, compare_csv;
  std::uint64_t compare_vectors = 100000, compare_seed = 1;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "verify and measure a roster of adders at one width");
  compare_cmd->add_option("--width", compare_width, "operand width for the default roster");
  compare_cmd->add_option("--specs", compare_specs, "JSON array of adder specs");
  compare_cmd->add_option("--timing", compare_timing, "timing model: unit|weighted");
  compare_cmd->add_option("--area", compare_area, "area model: tcount");
  compare_cmd->add_option("--vectors", compare_vectors, "verification/power vector count");
  compare_cmd->add_option("--seed", compare_seed, "vector seed");
  compare_cmd->add_option("--out", compare_json, "report JSON path");
  compare_cmd->add_option("--csv", compare_csv, "report CSV path");

  // export
  SpecFlags export_flags;
  std::string export_netlist, export_out;
  CLI::App* export_cmd = app.add_subcommand("export", "emit a structural Verilog description");
  export_cmd->add_option("--netlist", export_netlist, "netlist JSON path");
  add_spec_flags(export_cmd, export_flags);
  export_cmd->add_option("--out", export_out, "output .v path");

  // plot
  std::string plot_report, plot_metric = "pdp", plot_out;
  bool plot_normalize = false;
  CLI::App* plot_cmd = app.add_subcommand("plot", "tabulate one metric from a compare report");
  plot_cmd->add_option("--report", plot_report, "compare report JSON path")->required();
  plot_cmd->add_option("--metric", plot_metric, "delay|area|power_proxy|pdp");
  plot_cmd->add_flag("--normalize", plot_normalize, "divide values by the maximum");
  plot_cmd->add_option("--out", plot_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(build_flags, build_out);
    if (verify_cmd->parsed()) {
      const Netlist nl =
          load_netlist(verify_netlist, verify_flags,
                       verify_cmd->count("--arch") > 0 || !verify_flags.spec_path.empty());
      return cmd_verify(nl, verify_mode, verify_vectors, verify_seed, verify_serial);
    }
    if (analyze_cmd->parsed()) {
      const Netlist nl =
          load_netlist(analyze_netlist, analyze_flags,
                       analyze_cmd->count("--arch") > 0 || !analyze_flags.spec_path.empty());
      return cmd_analyze(nl, analyze_timing, analyze_area, analyze_vectors, analyze_seed,
                         analyze_out);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(sweep_width, sweep_sizes, sweep_module_size, sweep_style, sweep_timing,
                       sweep_vectors, sweep_seed, sweep_csv, sweep_json);
    }
    if (compare_cmd->parsed()) {
      return cmd_compare(compare_width, compare_specs, compare_timing, compare_area,
                         compare_vectors, compare_seed, compare_json, compare_csv);
    }
    if (export_cmd->parsed()) {
      const Netlist nl =
          load_netlist(export_netlist, export_flags,
                       export_cmd->count("--arch") > 0 || !export_flags.spec_path.empty());
      return cmd_export(nl, export_out);
    }
    if (plot_cmd->parsed()) return cmd_plot(plot_report, plot_metric, plot_normalize, plot_out);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
