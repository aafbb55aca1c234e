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
#include <optional>
#include <span>
#include <vector>

#include "adderlab/netlist.hpp"

namespace adderlab {

/// Execution policy for the vector-level kernels. kSerial is the scalar
/// reference path; kParallel packs 64 vectors per machine word and spreads
/// packs over OpenMP threads. Both produce identical results.
enum class ExecPolicy : std::uint8_t { kSerial, kParallel };

/// One primary-input assignment. `cin` is only read for variable-carry
/// netlists.
struct InputVector {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  int cin = 0;
};

struct SimOutputs {
  std::uint64_t sum = 0;
  int cout = 0;
};

/// Zero-delay evaluation of a single assignment, one gate at a time in
/// creation order. This is the serial reference implementation the packed
/// kernels are tested against. Throws Error when the assignment does not
/// cover exactly the primary inputs (operands out of range, missing or
/// spurious cin).
SimOutputs simulate(const Netlist& netlist, std::uint64_t a, std::uint64_t b,
                    std::optional<int> cin = std::nullopt);

/// As simulate(), but returns the steady-state value of every net.
std::vector<std::uint8_t> simulate_nets(const Netlist& netlist, std::uint64_t a, std::uint64_t b,
                                        std::optional<int> cin = std::nullopt);

/// Evaluates 64 independent assignments at once, one bit lane per vector.
/// `words` must hold one word per net with the primary-input lanes
/// pre-filled; gate output words are overwritten in creation order.
void eval_packed(const Netlist& netlist, std::vector<std::uint64_t>& words);

/// Fills the primary-input words for up to 64 lanes. Unused lanes are zero.
void fill_input_lanes(const Netlist& netlist, std::span<const InputVector> lanes,
                      std::vector<std::uint64_t>& words);

/// Per-net switching activity over an ordered vector sequence plus the
/// fanout-weighted power proxy derived from it.
struct ActivityReport {
  std::vector<std::uint64_t> toggles;  // per net, indexed by net id
  std::uint64_t power_proxy = 0;       // sum over gates of toggles(out) * (1 + fanout(out))
  std::uint64_t vector_count = 0;
  std::uint64_t seed = 0;  // generator seed when the vectors were seeded, else 0
};

/// Counts functional transitions between consecutive zero-delay steady
/// states; no glitch modeling. Deterministic for a given vector sequence
/// regardless of policy or thread count.
ActivityReport toggle_power_proxy(const Netlist& netlist, std::span<const InputVector> vectors,
                                  std::uint64_t seed = 0,
                                  ExecPolicy policy = ExecPolicy::kParallel);

/// Uniform independent input bits from a counter-based splitmix64 stream;
/// vector i depends only on (seed, i), so any evaluation order sees the same
/// sequence.
InputVector random_input(int width, CarryInMode mode, std::uint64_t seed, std::uint64_t index);
std::vector<InputVector> random_vectors(const Netlist& netlist, std::uint64_t count,
                                        std::uint64_t seed);

/// splitmix64 output function; the building block of the vector streams.
std::uint64_t mix64(std::uint64_t x);

constexpr std::uint64_t width_mask(int width) {
  return width >= 64 ? ~0ull : ((1ull << width) - 1);
}

}  // namespace adderlab
