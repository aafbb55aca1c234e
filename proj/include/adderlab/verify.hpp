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
#include <string>
#include <vector>

#include "adderlab/netlist.hpp"
#include "adderlab/simulate.hpp"

namespace adderlab {

struct OracleSum {
  std::uint64_t sum = 0;
  int cout = 0;
};

/// Ground truth: (a + b + cin) mod 2^n and the carry out of bit n, computed
/// with wide integer arithmetic, independently of any netlist. Throws Error
/// for operands out of range.
OracleSum oracle_add(std::uint64_t a, std::uint64_t b, int cin, int n);

enum class VerifyMode : std::uint8_t { kExhaustive, kRandom, kDirected };

std::string_view verify_mode_name(VerifyMode mode);
VerifyMode verify_mode_from_name(std::string_view name);

struct Counterexample {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::optional<int> cin;
  std::uint64_t expected_sum = 0;
  int expected_cout = 0;
  std::uint64_t actual_sum = 0;
  int actual_cout = 0;
};

struct VerifyOutcome {
  VerifyMode mode = VerifyMode::kExhaustive;
  std::uint64_t vectors_run = 0;  // vectors evaluated up to and including a mismatch
  std::uint64_t seed = 0;         // random mode only
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

struct VerifyOptions {
  std::uint64_t vector_count = 100000;  // random mode
  std::uint64_t seed = 1;               // random mode
  ExecPolicy policy = ExecPolicy::kParallel;
};

/// Fixed corner set: the all-zeros/all-ones/alternating operand grid plus
/// single-bit-set carry-chain pairs, doubled over cin for variable-carry
/// netlists.
std::vector<InputVector> directed_corners(int width, CarryInMode mode);

/// Checks the netlist against oracle_add. Exhaustive mode walks all operand
/// (and cin) combinations in numeric order and is refused above 24 input
/// bits; random mode replays the seeded splitmix64 stream; directed mode
/// runs the corner set. Stops at the first mismatch (the numerically first
/// one in exhaustive mode, independent of thread count) and returns it.
VerifyOutcome verify(const Netlist& netlist, VerifyMode mode, VerifyOptions options = {});

/// Human-readable one-line outcome summary.
std::string describe(const VerifyOutcome& outcome);

}  // namespace adderlab
