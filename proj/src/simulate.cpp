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

#include "adderlab/simulate.hpp"

#include <bit>

namespace adderlab {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

void check_assignment(const Netlist& nl, std::uint64_t a, std::uint64_t b,
                      const std::optional<int>& cin) {
  const std::uint64_t mask = width_mask(nl.width);
  if ((a & ~mask) != 0 || (b & ~mask) != 0) {
    throw Error("operand out of range for width " + std::to_string(nl.width));
  }
  if (nl.has_variable_carry()) {
    if (!cin) throw Error("missing carry-in bit for variable-carry netlist");
    if (*cin != 0 && *cin != 1) throw Error("carry-in bit must be 0 or 1");
  } else if (cin) {
    throw Error("extra carry-in bit: netlist carry mode is " +
                std::string(carry_in_mode_name(nl.carry_in)));
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::vector<std::uint8_t> simulate_nets(const Netlist& nl, std::uint64_t a, std::uint64_t b,
                                        std::optional<int> cin) {
  check_assignment(nl, a, b, cin);
  std::vector<std::uint8_t> v(nl.nets.size(), 0);
  const int n = nl.width;
  for (int i = 0; i < n; ++i) {
    v[nl.inputs[i]] = static_cast<std::uint8_t>((a >> i) & 1);
    v[nl.inputs[n + i]] = static_cast<std::uint8_t>((b >> i) & 1);
  }
  if (nl.has_variable_carry()) v[nl.inputs[2 * n]] = static_cast<std::uint8_t>(*cin);

  for (const Gate& g : nl.gates) {
    std::uint8_t r = 0;
    switch (g.kind) {
      case GateKind::kNot:
        r = v[g.in[0]] ^ 1;
        break;
      case GateKind::kAnd2:
        r = v[g.in[0]] & v[g.in[1]];
        break;
      case GateKind::kOr2:
        r = v[g.in[0]] | v[g.in[1]];
        break;
      case GateKind::kNand2:
        r = (v[g.in[0]] & v[g.in[1]]) ^ 1;
        break;
      case GateKind::kNor2:
        r = (v[g.in[0]] | v[g.in[1]]) ^ 1;
        break;
      case GateKind::kXor2:
        r = v[g.in[0]] ^ v[g.in[1]];
        break;
      case GateKind::kXnor2:
        r = (v[g.in[0]] ^ v[g.in[1]]) ^ 1;
        break;
      case GateKind::kMux2:
        r = v[g.in[0]] ? v[g.in[2]] : v[g.in[1]];
        break;
      case GateKind::kConst0:
        r = 0;
        break;
      case GateKind::kConst1:
        r = 1;
        break;
    }
    v[g.out] = r;
  }
  return v;
}

SimOutputs simulate(const Netlist& nl, std::uint64_t a, std::uint64_t b, std::optional<int> cin) {
  const std::vector<std::uint8_t> v = simulate_nets(nl, a, b, cin);
  SimOutputs out;
  for (int i = 0; i < nl.width; ++i) {
    out.sum |= static_cast<std::uint64_t>(v[nl.outputs[i]]) << i;
  }
  out.cout = v[nl.outputs[nl.width]];
  return out;
}

void eval_packed(const Netlist& nl, std::vector<std::uint64_t>& w) {
  for (const Gate& g : nl.gates) {
    std::uint64_t r = 0;
    switch (g.kind) {
      case GateKind::kNot:
        r = ~w[g.in[0]];
        break;
      case GateKind::kAnd2:
        r = w[g.in[0]] & w[g.in[1]];
        break;
      case GateKind::kOr2:
        r = w[g.in[0]] | w[g.in[1]];
        break;
      case GateKind::kNand2:
        r = ~(w[g.in[0]] & w[g.in[1]]);
        break;
      case GateKind::kNor2:
        r = ~(w[g.in[0]] | w[g.in[1]]);
        break;
      case GateKind::kXor2:
        r = w[g.in[0]] ^ w[g.in[1]];
        break;
      case GateKind::kXnor2:
        r = ~(w[g.in[0]] ^ w[g.in[1]]);
        break;
      case GateKind::kMux2: {
        const std::uint64_t s = w[g.in[0]];
        r = (s & w[g.in[2]]) | (~s & w[g.in[1]]);
        break;
      }
      case GateKind::kConst0:
        r = 0;
        break;
      case GateKind::kConst1:
        r = ~0ull;
        break;
    }
    w[g.out] = r;
  }
}

void fill_input_lanes(const Netlist& nl, std::span<const InputVector> lanes,
                      std::vector<std::uint64_t>& words) {
  const int n = nl.width;
  for (int i = 0; i < n; ++i) {
    std::uint64_t wa = 0, wb = 0;
    for (std::size_t l = 0; l < lanes.size(); ++l) {
      wa |= ((lanes[l].a >> i) & 1) << l;
      wb |= ((lanes[l].b >> i) & 1) << l;
    }
    words[nl.inputs[i]] = wa;
    words[nl.inputs[n + i]] = wb;
  }
  if (nl.has_variable_carry()) {
    std::uint64_t wc = 0;
    for (std::size_t l = 0; l < lanes.size(); ++l) {
      wc |= static_cast<std::uint64_t>(lanes[l].cin & 1) << l;
    }
    words[nl.inputs[2 * n]] = wc;
  }
}

InputVector random_input(int width, CarryInMode mode, std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t mask = width_mask(width);
  InputVector v;
  v.a = mix64(seed + (3 * index + 1) * kGolden) & mask;
  v.b = mix64(seed + (3 * index + 2) * kGolden) & mask;
  v.cin = mode == CarryInMode::kVariable
              ? static_cast<int>(mix64(seed + (3 * index + 3) * kGolden) & 1)
              : 0;
  return v;
}

std::vector<InputVector> random_vectors(const Netlist& nl, std::uint64_t count,
                                        std::uint64_t seed) {
  std::vector<InputVector> out(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out[i] = random_input(nl.width, nl.carry_in, seed, i);
  }
  return out;
}

namespace {

ActivityReport toggles_serial(const Netlist& nl, std::span<const InputVector> vectors) {
  ActivityReport rep;
  rep.toggles.assign(nl.nets.size(), 0);
  rep.vector_count = vectors.size();
  std::optional<int> cin0 = nl.has_variable_carry() ? std::optional<int>(vectors[0].cin)
                                                    : std::nullopt;
  std::vector<std::uint8_t> prev = simulate_nets(nl, vectors[0].a, vectors[0].b, cin0);
  for (std::size_t t = 1; t < vectors.size(); ++t) {
    std::optional<int> cin = nl.has_variable_carry() ? std::optional<int>(vectors[t].cin)
                                                     : std::nullopt;
    std::vector<std::uint8_t> cur = simulate_nets(nl, vectors[t].a, vectors[t].b, cin);
    for (std::size_t id = 0; id < cur.size(); ++id) rep.toggles[id] += prev[id] ^ cur[id];
    prev = std::move(cur);
  }
  return rep;
}

// Packs transitions: a pack covers 64 consecutive vectors and yields 63
// transitions, so packs overlap by one vector (stride 63).
ActivityReport toggles_packed(const Netlist& nl, std::span<const InputVector> vectors) {
  ActivityReport rep;
  rep.toggles.assign(nl.nets.size(), 0);
  rep.vector_count = vectors.size();
  const std::size_t n_nets = nl.nets.size();
  const std::int64_t n_packs =
      static_cast<std::int64_t>((vectors.size() - 2) / 63) + 1;  // vectors.size() >= 2 here

#pragma omp parallel
  {
    std::vector<std::uint64_t> words(n_nets, 0);
    std::vector<std::uint64_t> local(n_nets, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t p = 0; p < n_packs; ++p) {
      const std::size_t base = static_cast<std::size_t>(p) * 63;
      const std::size_t lanes = std::min<std::size_t>(64, vectors.size() - base);
      fill_input_lanes(nl, vectors.subspan(base, lanes), words);
      eval_packed(nl, words);
      const std::uint64_t valid = (lanes >= 64) ? ~0ull >> 1 : ((1ull << (lanes - 1)) - 1);
      for (std::size_t id = 0; id < n_nets; ++id) {
        local[id] += static_cast<std::uint64_t>(
            std::popcount((words[id] ^ (words[id] >> 1)) & valid));
      }
    }
#pragma omp critical(adderlab_toggle_merge)
    for (std::size_t id = 0; id < n_nets; ++id) rep.toggles[id] += local[id];
  }
  return rep;
}

}  // namespace

ActivityReport toggle_power_proxy(const Netlist& nl, std::span<const InputVector> vectors,
                                  std::uint64_t seed, ExecPolicy policy) {
  if (vectors.empty()) throw Error("toggle_power_proxy needs at least one vector");
  const std::uint64_t mask = width_mask(nl.width);
  for (const InputVector& v : vectors) {
    if ((v.a & ~mask) != 0 || (v.b & ~mask) != 0 || (v.cin & ~1) != 0) {
      throw Error("malformed vector for width " + std::to_string(nl.width));
    }
  }
  ActivityReport rep = (policy == ExecPolicy::kSerial || vectors.size() < 2)
                           ? toggles_serial(nl, vectors)
                           : toggles_packed(nl, vectors);
  rep.seed = seed;
  const std::vector<std::uint32_t> fanout = nl.fanout_counts();
  rep.power_proxy = 0;
  for (const Gate& g : nl.gates) {
    rep.power_proxy += rep.toggles[g.out] * (1 + fanout[g.out]);
  }
  return rep;
}

}  // namespace adderlab
