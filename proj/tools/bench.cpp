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

// Throughput comparison of the serial reference kernels against the packed
// OpenMP kernels, over a few representative netlists.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "adderlab/analysis.hpp"
#include "adderlab/generators.hpp"
#include "adderlab/simulate.hpp"
#include "adderlab/verify.hpp"

namespace {

using namespace adderlab;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_netlist(const Netlist& nl, std::uint64_t vectors, std::uint64_t seed) {
  VerifyOptions serial{vectors, seed, ExecPolicy::kSerial};
  VerifyOptions parallel{vectors, seed, ExecPolicy::kParallel};

  auto t0 = Clock::now();
  const VerifyOutcome so = verify(nl, VerifyMode::kRandom, serial);
  const double ts = seconds_since(t0);

  t0 = Clock::now();
  const VerifyOutcome po = verify(nl, VerifyMode::kRandom, parallel);
  const double tp = seconds_since(t0);

  if (so.passed() != po.passed()) {
    std::fprintf(stderr, "kernel disagreement on %s\n", nl.name.c_str());
    std::exit(1);
  }

  const std::vector<InputVector> vecs = random_vectors(nl, vectors, seed);
  t0 = Clock::now();
  const ActivityReport as = toggle_power_proxy(nl, vecs, seed, ExecPolicy::kSerial);
  const double ps = seconds_since(t0);

  t0 = Clock::now();
  const ActivityReport ap = toggle_power_proxy(nl, vecs, seed, ExecPolicy::kParallel);
  const double pp = seconds_since(t0);

  if (as.power_proxy != ap.power_proxy) {
    std::fprintf(stderr, "power kernel disagreement on %s\n", nl.name.c_str());
    std::exit(1);
  }

  const double mvps = static_cast<double>(vectors) / 1e6;
  std::printf("%-28s %6zu  | %8.2f %8.2f %6.1fx | %8.2f %8.2f %6.1fx\n", nl.name.c_str(),
              nl.num_gates(), mvps / ts, mvps / tp, ts / tp, mvps / ps, mvps / pp, ps / pp);
}

}  // namespace

int main(int argc, char** argv) {
  int width = 32;
  std::uint64_t vectors = 200000;
  std::uint64_t seed = 7;
  if (argc > 1) width = std::atoi(argv[1]);
  if (argc > 2) vectors = std::strtoull(argv[2], nullptr, 10);
  if (argc > 3) seed = std::strtoull(argv[3], nullptr, 10);

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  std::printf("width %d, %llu vectors, seed %llu\n\n", width,
              static_cast<unsigned long long>(vectors), static_cast<unsigned long long>(seed));
  std::printf("%-28s %6s  | %8s %8s %7s | %8s %8s %7s\n", "netlist", "gates", "ver-ser", "ver-par",
              "speedup", "pwr-ser", "pwr-par", "speedup");
  std::printf("%-28s %6s  | %26s | %26s\n", "", "", "Mvec/s", "Mvec/s");

  try {
    for (const AdderSpec& spec : default_roster(width)) {
      bench_netlist(build(spec), vectors, seed);
    }
  } catch (const adderlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
