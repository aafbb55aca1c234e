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

#include "adderlab/verify.hpp"

#include <algorithm>
#include <bit>

namespace adderlab {

OracleSum oracle_add(std::uint64_t a, std::uint64_t b, int cin, int n) {
  if (n < 1 || n > 64) throw Error("oracle width must be in [1, 64]");
  const std::uint64_t mask = width_mask(n);
  if ((a & ~mask) != 0 || (b & ~mask) != 0) throw Error("oracle operand out of range");
  if (cin != 0 && cin != 1) throw Error("oracle carry-in must be 0 or 1");
  const unsigned __int128 total = static_cast<unsigned __int128>(a) + b + cin;
  OracleSum out;
  out.sum = static_cast<std::uint64_t>(total) & mask;
  out.cout = static_cast<int>((total >> n) & 1);
  return out;
}

std::string_view verify_mode_name(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kExhaustive:
      return "exhaustive";
    case VerifyMode::kRandom:
      return "random";
    case VerifyMode::kDirected:
      return "directed";
  }
  return "exhaustive";
}

VerifyMode verify_mode_from_name(std::string_view name) {
  for (VerifyMode m : {VerifyMode::kExhaustive, VerifyMode::kRandom, VerifyMode::kDirected}) {
    if (verify_mode_name(m) == name) return m;
  }
  throw Error("unknown verify mode: " + std::string(name));
}

std::vector<InputVector> directed_corners(int width, CarryInMode mode) {
  const std::uint64_t mask = width_mask(width);
  const std::uint64_t alt01 = 0x5555555555555555ull & mask;
  const std::uint64_t alt10 = 0xaaaaaaaaaaaaaaaaull & mask;
  const std::uint64_t vals[4] = {0, mask, alt01, alt10};

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t va : vals) {
    for (std::uint64_t vb : vals) pairs.emplace_back(va, vb);
  }
  for (int i = 0; i < width; ++i) {
    const std::uint64_t bit = 1ull << i;
    pairs.emplace_back(bit, mask);                  // propagate chain from bit i
    pairs.emplace_back(mask, bit);
    pairs.emplace_back(bit, (mask - bit + 1) & mask);  // a + b == 2^width exactly
  }

  std::vector<InputVector> out;
  const int cin_hi = mode == CarryInMode::kVariable ? 1 : 0;
  for (const auto& [va, vb] : pairs) {
    for (int c = 0; c <= cin_hi; ++c) out.push_back(InputVector{va, vb, c});
  }
  return out;
}

namespace {

int effective_cin(const Netlist& nl, const InputVector& v) {
  switch (nl.carry_in) {
    case CarryInMode::kVariable:
      return v.cin;
    case CarryInMode::kConstant1:
      return 1;
    default:
      return 0;
  }
}

Counterexample make_counterexample(const Netlist& nl, const InputVector& v) {
  Counterexample cex;
  cex.a = v.a;
  cex.b = v.b;
  if (nl.has_variable_carry()) cex.cin = v.cin;
  const OracleSum want = oracle_add(v.a, v.b, effective_cin(nl, v), nl.width);
  cex.expected_sum = want.sum;
  cex.expected_cout = want.cout;
  const SimOutputs got = simulate(nl, v.a, v.b, cex.cin);
  cex.actual_sum = got.sum;
  cex.actual_cout = got.cout;
  return cex;
}

// Uniform view over the three vector sources so one kernel serves all modes.
struct VectorStream {
  const Netlist* nl;
  VerifyMode mode;
  std::uint64_t total;
  std::uint64_t seed;
  const std::vector<InputVector>* fixed;

  InputVector at(std::uint64_t index) const {
    switch (mode) {
      case VerifyMode::kExhaustive: {
        const int n = nl->width;
        const int cin_bits = nl->has_variable_carry() ? 1 : 0;
        InputVector v;
        v.cin = static_cast<int>(index & ((1ull << cin_bits) - 1));
        const std::uint64_t ab = index >> cin_bits;
        v.b = ab & width_mask(n);
        v.a = ab >> n;
        return v;
      }
      case VerifyMode::kRandom:
        return random_input(nl->width, nl->carry_in, seed, index);
      case VerifyMode::kDirected:
        return (*fixed)[index];
    }
    return {};
  }
};

std::optional<std::uint64_t> scan_serial(const Netlist& nl, const VectorStream& stream) {
  for (std::uint64_t i = 0; i < stream.total; ++i) {
    const InputVector v = stream.at(i);
    const OracleSum want = oracle_add(v.a, v.b, effective_cin(nl, v), nl.width);
    const SimOutputs got =
        simulate(nl, v.a, v.b,
                 nl.has_variable_carry() ? std::optional<int>(v.cin) : std::nullopt);
    if (got.sum != want.sum || got.cout != want.cout) return i;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> scan_packed(const Netlist& nl, const VectorStream& stream) {
  const std::int64_t n_packs = static_cast<std::int64_t>((stream.total + 63) / 64);
  const int n = nl.width;
  std::uint64_t first_bad = ~0ull;

#pragma omp parallel
  {
    std::vector<std::uint64_t> words(nl.nets.size(), 0);
    std::vector<InputVector> lanes(64);
    std::vector<std::uint64_t> expect(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t local_bad = ~0ull;

#pragma omp for schedule(static) nowait
    for (std::int64_t pk = 0; pk < n_packs; ++pk) {
      const std::uint64_t base = static_cast<std::uint64_t>(pk) * 64;
      const std::size_t lane_count = static_cast<std::size_t>(std::min<std::uint64_t>(64, stream.total - base));
      lanes.resize(lane_count);
      std::fill(expect.begin(), expect.end(), 0);
      for (std::size_t l = 0; l < lane_count; ++l) {
        lanes[l] = stream.at(base + l);
        const OracleSum want =
            oracle_add(lanes[l].a, lanes[l].b, effective_cin(nl, lanes[l]), n);
        for (int i = 0; i < n; ++i) expect[i] |= ((want.sum >> i) & 1) << l;
        expect[n] |= static_cast<std::uint64_t>(want.cout) << l;
      }
      fill_input_lanes(nl, lanes, words);
      eval_packed(nl, words);

      const std::uint64_t valid = lane_count >= 64 ? ~0ull : ((1ull << lane_count) - 1);
      std::uint64_t diff = 0;
      for (int i = 0; i <= n; ++i) diff |= (words[nl.outputs[i]] ^ expect[i]) & valid;
      if (diff != 0) {
        const std::uint64_t idx = base + static_cast<std::uint64_t>(std::countr_zero(diff));
        local_bad = std::min(local_bad, idx);
      }
    }
#pragma omp critical(adderlab_verify_min)
    first_bad = std::min(first_bad, local_bad);
  }
  if (first_bad == ~0ull) return std::nullopt;
  return first_bad;
}

}  // namespace

VerifyOutcome verify(const Netlist& nl, VerifyMode mode, VerifyOptions options) {
  {
    const std::vector<std::string> bad = validate(nl);
    if (!bad.empty()) throw Error("verify requires a valid netlist: " + bad.front());
  }

  VectorStream stream{&nl, mode, 0, options.seed, nullptr};
  std::vector<InputVector> fixed;
  switch (mode) {
    case VerifyMode::kExhaustive: {
      const int input_bits = 2 * nl.width + (nl.has_variable_carry() ? 1 : 0);
      if (input_bits > 24) {
        throw Error("width too large for exhaustive: " + std::to_string(input_bits) +
                    " input bits (limit 24)");
      }
      stream.total = 1ull << input_bits;
      break;
    }
    case VerifyMode::kRandom:
      if (options.vector_count == 0) throw Error("random verification needs vectors");
      stream.total = options.vector_count;
      break;
    case VerifyMode::kDirected:
      fixed = directed_corners(nl.width, nl.carry_in);
      stream.fixed = &fixed;
      stream.total = fixed.size();
      break;
  }

  const std::optional<std::uint64_t> bad_index = options.policy == ExecPolicy::kSerial
                                                     ? scan_serial(nl, stream)
                                                     : scan_packed(nl, stream);

  VerifyOutcome out;
  out.mode = mode;
  out.seed = mode == VerifyMode::kRandom ? options.seed : 0;
  if (bad_index) {
    out.vectors_run = *bad_index + 1;
    out.counterexample = make_counterexample(nl, stream.at(*bad_index));
  } else {
    out.vectors_run = stream.total;
  }
  return out;
}

std::string describe(const VerifyOutcome& o) {
  if (o.passed()) {
    return "pass, " + std::to_string(o.vectors_run) + " vectors (" +
           std::string(verify_mode_name(o.mode)) + ")";
  }
  const Counterexample& c = *o.counterexample;
  std::string s = "FAIL after " + std::to_string(o.vectors_run) + " vectors: a=" +
                  std::to_string(c.a) + " b=" + std::to_string(c.b);
  if (c.cin) s += " cin=" + std::to_string(*c.cin);
  s += " expected sum=" + std::to_string(c.expected_sum) +
       " cout=" + std::to_string(c.expected_cout) + ", got sum=" + std::to_string(c.actual_sum) +
       " cout=" + std::to_string(c.actual_cout);
  return s;
}

}  // namespace adderlab
