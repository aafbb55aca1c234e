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

// End-to-end acceptance suite. Each criterion prints one pass/fail line; the
// process exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "adderlab/analysis.hpp"
#include "adderlab/generators.hpp"
#include "adderlab/json_io.hpp"
#include "adderlab/models.hpp"
#include "adderlab/simulate.hpp"
#include "adderlab/timing.hpp"
#include "adderlab/verify.hpp"

namespace {

using namespace adderlab;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::vector<AdderSpec> roster_with_variants(int width, CarryInMode mode) {
  std::vector<AdderSpec> specs = default_roster(width);
  for (AdderSpec& s : specs) s.carry_in = mode;
  AdderSpec extra;
  extra.arch = AdderArch::kFbha;
  extra.width = width;
  extra.carry_in = mode;
  extra.style = ClaStyle::kDelayOptimized;
  switch (width) {
    case 4:
      extra.k = 3;
      extra.module_sizes = {1, 2};
      break;
    case 8:
      extra.k = 6;
      extra.module_sizes = {2, 4};
      break;
    default:
      extra.k = width / 2;
      extra.module_sizes = std::vector<int>(static_cast<std::size_t>(width / 8), 4);
      break;
  }
  specs.push_back(extra);
  return specs;
}

// criterion 1: exhaustive at 4 (variable carry) and 8 (no carry), seeded
// random plus directed corners at 16/32/64, all architectures, under 2 min.
Check criterion_functional() {
  Check c;
  const auto start = Clock::now();
  for (const AdderSpec& spec : roster_with_variants(4, CarryInMode::kVariable)) {
    const Netlist nl = build(spec);
    const VerifyOutcome out = verify(nl, VerifyMode::kExhaustive);
    c.expect(out.passed() && out.vectors_run == 512, nl.name + " exhaustive@4");
  }
  for (const AdderSpec& spec : roster_with_variants(8, CarryInMode::kNone)) {
    const Netlist nl = build(spec);
    const VerifyOutcome out = verify(nl, VerifyMode::kExhaustive);
    c.expect(out.passed() && out.vectors_run == 65536, nl.name + " exhaustive@8");
  }
  for (int width : {16, 32, 64}) {
    for (const AdderSpec& spec : roster_with_variants(width, CarryInMode::kNone)) {
      const Netlist nl = build(spec);
      VerifyOptions options;
      options.vector_count = 100000;
      options.seed = 1;
      c.expect(verify(nl, VerifyMode::kRandom, options).passed(),
               nl.name + " random@" + std::to_string(width));
      c.expect(verify(nl, VerifyMode::kDirected).passed(),
               nl.name + " directed@" + std::to_string(width));
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  c.note(std::string("runtime ") + buf);
  c.expect(secs < 120.0, "runtime exceeded 2 minutes");
  return c;
}

// criterion 2: all width-32 roster netlists agree pairwise on one seeded
// 100k-vector set.
Check criterion_pairwise() {
  Check c;
  const std::uint64_t kVectors = 100000;
  std::vector<Netlist> nls;
  for (const AdderSpec& spec : default_roster(32)) nls.push_back(build(spec));

  std::vector<std::vector<std::uint64_t>> sums(nls.size());
  std::vector<std::vector<std::uint8_t>> couts(nls.size());
  for (std::size_t k = 0; k < nls.size(); ++k) {
    const Netlist& nl = nls[k];
    sums[k].resize(kVectors);
    couts[k].resize(kVectors);
    std::vector<std::uint64_t> words(nl.nets.size(), 0);
    std::vector<InputVector> lanes(64);
    for (std::uint64_t base = 0; base < kVectors; base += 64) {
      const std::size_t lane_count = static_cast<std::size_t>(
          std::min<std::uint64_t>(64, kVectors - base));
      lanes.resize(lane_count);
      for (std::size_t l = 0; l < lane_count; ++l) {
        lanes[l] = random_input(nl.width, nl.carry_in, 2024, base + l);
      }
      fill_input_lanes(nl, lanes, words);
      eval_packed(nl, words);
      for (std::size_t l = 0; l < lane_count; ++l) {
        std::uint64_t s = 0;
        for (int bit = 0; bit < nl.width; ++bit) {
          s |= ((words[nl.outputs[bit]] >> l) & 1) << bit;
        }
        sums[k][base + l] = s;
        couts[k][base + l] = static_cast<std::uint8_t>((words[nl.outputs[nl.width]] >> l) & 1);
      }
    }
  }
  std::uint64_t disagreements = 0;
  for (std::size_t i = 0; i < nls.size(); ++i) {
    for (std::size_t j = i + 1; j < nls.size(); ++j) {
      if (sums[i] != sums[j] || couts[i] != couts[j]) ++disagreements;
    }
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreeing pairs");
  c.note(std::to_string(nls.size() * (nls.size() - 1) / 2) + " pairs x " +
         std::to_string(kVectors) + " vectors");
  return c;
}

double unit_delay(const Netlist& nl) { return critical_path(nl, TimingModel::unit()).delay; }

// criterion 3: strict unit-delay ranking KSA < FBHA < DCLA < CCLA < RCA.
Check criterion_ranking() {
  Check c;
  const std::vector<int> uniform4(8, 4);
  const double ksa = unit_delay(build_prefix_adder(32, PrefixTopology::kKoggeStone,
                                                   CarryInMode::kNone));
  const double fbha = unit_delay(build_fbha(32, 24, {2, 2, 4, 4, 4, 8},
                                            ClaStyle::kDelayOptimized));
  const double dcla = unit_delay(build_cla_cascade(32, uniform4, ClaStyle::kDelayOptimized,
                                                   CarryInMode::kNone));
  const double ccla = unit_delay(build_cla_cascade(32, uniform4, ClaStyle::kConventional,
                                                   CarryInMode::kNone));
  const double rca = unit_delay(build_rca(32, CarryInMode::kNone));
  char buf[128];
  std::snprintf(buf, sizeof buf, "KSA %g < FBHA %g < DCLA %g < CCLA %g < RCA %g", ksa, fbha,
                dcla, ccla, rca);
  c.note(buf);
  c.expect(ksa < fbha && fbha < dcla && dcla < ccla && ccla < rca, "ordering violated");
  return c;
}

// criterion 4: hybrid delay equals the cascade carry-out arrival plus one
// mux delay, given the select side is ready first.
Check criterion_subsumption() {
  Check c;
  const Netlist nl = build_fbha(32, 24, std::vector<int>(6, 4), ClaStyle::kDelayOptimized);
  const std::vector<double> arr = arrival_times(nl, TimingModel::unit());
  const NetId sel = *nl.find_net("cla_cout");
  double sum_side = 0.0;
  for (const Gate& g : nl.gates) {
    if (g.kind != GateKind::kMux2 || g.out == nl.outputs[nl.width]) continue;
    sum_side = std::max({sum_side, arr[g.in[1]], arr[g.in[2]]});
  }
  c.expect(sum_side <= arr[sel], "select-block sums not subsumed");
  const double delay = unit_delay(nl);
  const double mux = TimingModel::unit().of(GateKind::kMux2);
  char buf[96];
  std::snprintf(buf, sizeof buf, "delay %g == carry arrival %g + mux %g", delay, arr[sel], mux);
  c.note(buf);
  c.expect(delay == arr[sel] + mux, "identity violated");
  return c;
}

// criterion 5: sweep crossover at X=8 with uniform 4-bit modules, and the
// 2x12 decomposition slowest among the eight named K=24 variants.
Check criterion_sweep() {
  Check c;
  const SweepReport sweep = partition_sweep(32, {4, 8, 12, 16}, 4, ClaStyle::kDelayOptimized,
                                            TimingModel::unit());
  const double d4 = sweep.rows[0].delay, d8 = sweep.rows[1].delay, d12 = sweep.rows[2].delay,
               d16 = sweep.rows[3].delay;
  char buf[96];
  std::snprintf(buf, sizeof buf, "delays X=4:%g X=8:%g X=12:%g X=16:%g", d4, d8, d12, d16);
  c.note(buf);
  c.expect(d8 < d4, "X=8 not faster than X=4");
  c.expect(d8 < d12 && d12 < d16, "no interior minimum");
  c.expect(sweep.argmin_index == 1 && sweep.rows[1].csla_width == 8, "argmin not at X=8");

  const std::vector<std::vector<int>> named{
      {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
      {4, 4, 4, 4, 4, 4},
      {6, 6, 6, 6},
      {8, 8, 8},
      {4, 4, 4, 4, 8},
      {4, 4, 4, 6, 6},
      {2, 2, 4, 4, 4, 8},
      {2, 2, 4, 4, 6, 6},
  };
  double slowest = 0.0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < named.size(); ++i) {
    const double d = unit_delay(build_fbha(32, 24, named[i], ClaStyle::kDelayOptimized));
    if (d > slowest) {
      slowest = d;
      argmax = i;
    }
  }
  c.expect(argmax == 0, "uniform 2-bit decomposition is not the slowest");
  return c;
}

// criterion 6: gate-census sign checks over the width-32 roster.
Check criterion_area() {
  Check c;
  std::uint64_t rca_gates = 0, ksa_gates = 0, fbha_gates = 0, min_gates = ~0ull;
  std::string argmin;
  for (const AdderSpec& spec : default_roster(32)) {
    const Netlist nl = build(spec);
    const std::uint64_t gates = nl.num_gates();
    if (spec.arch == AdderArch::kRca) rca_gates = gates;
    if (spec.arch == AdderArch::kPrefix && spec.topology == PrefixTopology::kKoggeStone) {
      ksa_gates = gates;
    }
    if (spec.arch == AdderArch::kFbha) fbha_gates = gates;
    if (gates < min_gates) {
      min_gates = gates;
      argmin = nl.name;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "RCA %llu (min %llu), KSA %llu > FBHA %llu",
                static_cast<unsigned long long>(rca_gates),
                static_cast<unsigned long long>(min_gates),
                static_cast<unsigned long long>(ksa_gates),
                static_cast<unsigned long long>(fbha_gates));
  c.note(buf);
  c.expect(rca_gates == min_gates && argmin.rfind("RCA", 0) == 0, "RCA is not the minimum");
  c.expect(ksa_gates > fbha_gates, "KSA census not larger than the hybrid's");
  return c;
}

// Independent longest-path oracle (no memoization; every path walked).
double enum_rec(const Netlist& nl, const TimingModel& tm, NetId net) {
  const std::int64_t gi = nl.driver_gate(net);
  if (gi < 0) return 0.0;
  const Gate& g = nl.gates[static_cast<std::size_t>(gi)];
  double best = 0.0;
  for (int i = 0; i < arity(g.kind); ++i) best = std::max(best, enum_rec(nl, tm, g.in[i]));
  return best + tm.of(g.kind);
}

double longest_path_by_enumeration(const Netlist& nl, const TimingModel& tm) {
  double best = 0.0;
  for (NetId out : nl.outputs) best = std::max(best, enum_rec(nl, tm, out));
  return best;
}

GateKind complement_kind(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2:
      return GateKind::kNand2;
    case GateKind::kNand2:
      return GateKind::kAnd2;
    case GateKind::kOr2:
      return GateKind::kNor2;
    case GateKind::kNor2:
      return GateKind::kOr2;
    case GateKind::kXor2:
      return GateKind::kXnor2;
    case GateKind::kXnor2:
      return GateKind::kXor2;
    default:
      return kind;
  }
}

// criterion 7: the timing oracle agrees on every small netlist, and twenty
// seeded single-gate mutations are all caught with reproducing
// counterexamples.
Check criterion_oracles() {
  Check c;
  const TimingModel unit = TimingModel::unit();
  std::size_t checked = 0;
  for (int width : {4, 8}) {
    const CarryInMode mode = width == 4 ? CarryInMode::kVariable : CarryInMode::kNone;
    for (const AdderSpec& spec : roster_with_variants(width, mode)) {
      const Netlist nl = build(spec);
      if (nl.num_gates() > 200) continue;
      ++checked;
      c.expect(critical_path(nl, unit).delay == longest_path_by_enumeration(nl, unit),
               nl.name + " longest-path mismatch");
    }
  }
  c.note(std::to_string(checked) + " netlists cross-checked");

  const Netlist bases[2] = {build_rca(4, CarryInMode::kVariable),
                            build_fbha(8, 4, {4}, ClaStyle::kDelayOptimized)};
  int caught = 0;
  for (int m = 0; m < 20; ++m) {
    const Netlist& base = bases[m % 2];
    Netlist mutant = base;
    std::size_t gi = mix64(1234 + m) % mutant.gates.size();
    while (complement_kind(mutant.gates[gi].kind) == mutant.gates[gi].kind) {
      gi = (gi + 1) % mutant.gates.size();
    }
    mutant.gates[gi].kind = complement_kind(mutant.gates[gi].kind);
    const VerifyOutcome out = verify(mutant, VerifyMode::kExhaustive);
    if (out.passed()) continue;
    const Counterexample& cex = *out.counterexample;
    const SimOutputs again = simulate(mutant, cex.a, cex.b, cex.cin);
    const bool reproduces = again.sum == cex.actual_sum && again.cout == cex.actual_cout &&
                            (cex.actual_sum != cex.expected_sum ||
                             cex.actual_cout != cex.expected_cout);
    if (reproduces) ++caught;
  }
  c.note(std::to_string(caught) + "/20 mutations caught and reproduced");
  c.expect(caught == 20, "some mutations escaped");
  return c;
}

// criterion 8: byte-identical compare outputs across runs, one 1.0 in the
// normalized column.
Check criterion_determinism() {
  Check c;
  const std::vector<AdderSpec> roster = default_roster(32);
  const TimingModel timing = TimingModel::unit();
  const AreaModel area = AreaModel::transistor_count();
  const MetricsReport a = compare(roster, timing, area, 100000, 42);
  const MetricsReport b = compare(roster, timing, area, 100000, 42);
  c.expect(report_to_json(a).dump(2) == report_to_json(b).dump(2), "JSON outputs differ");
  c.expect(to_csv(a) == to_csv(b), "CSV outputs differ");
  c.expect(a.all_verified(), "roster did not verify");
  int ones = 0;
  for (const MetricsRow& r : a.rows) ones += r.normalized_pdp == 1.0 ? 1 : 0;
  c.expect(ones == 1, std::to_string(ones) + " rows at normalized pdp 1.0");
  c.note("10 rows, seed 42, 100000 vectors");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "functional correctness (exhaustive + random + directed)", criterion_functional},
      {2, "cross-architecture pairwise equivalence at width 32", criterion_pairwise},
      {3, "unit-delay ranking KSA < FBHA < DCLA < CCLA < RCA", criterion_ranking},
      {4, "hybrid subsumption identity (carry arrival + mux)", criterion_subsumption},
      {5, "partition sweep crossover and slowest decomposition", criterion_sweep},
      {6, "gate census sign checks", criterion_area},
      {7, "timing oracle agreement and mutation detection", criterion_oracles},
      {8, "deterministic compare outputs", criterion_determinism},
  };

  bool all_ok = true;
  for (const Criterion& cr : criteria) {
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.note(std::string("exception: ") + e.what());
    }
    all_ok &= result.ok;
    std::printf("[%s] criterion %d: %s%s%s\n", result.ok ? "PASS" : "FAIL", cr.id, cr.title,
                result.detail.empty() ? "" : ": ", result.detail.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
