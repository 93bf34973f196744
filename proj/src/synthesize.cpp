// Copyright 2026 The bsfc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bsfc/synthesize.hpp"

#include <algorithm>
#include <optional>

#include <fmt/format.h>

#include "bsfc/error.hpp"

namespace bsfc {

std::string_view isa_name(Isa isa) { return isa == Isa::Cnot ? "cnot" : "su4"; }

Isa isa_from_name(std::string_view name) {
  if (name == "cnot" || name == "cx") return Isa::Cnot;
  if (name == "su4") return Isa::SU4;
  throw Error(fmt::format("unknown ISA '{}' (expected cnot or su4)", name));
}

std::vector<Gate> synth_pauli_rotation(std::span<const Pauli> letters, double theta, bool negative) {
  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    if (letters[q] != Pauli::I) support.push_back(q);
  }
  if (support.empty()) throw Error("cannot synthesize a rotation about the identity");

  std::vector<Gate> out;
  out.reserve(6 * support.size());
  for (std::size_t q : support) {
    if (letters[q] == Pauli::X) {
      out.push_back(Gate::h(q));
    } else if (letters[q] == Pauli::Y) {
      out.push_back(Gate::sdg(q));
      out.push_back(Gate::h(q));
    }
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) out.push_back(Gate::cx(support[k], support[k + 1]));
  out.push_back(Gate::rz(support.back(), 2.0 * (negative ? -theta : theta)));
  for (std::size_t k = support.size() - 1; k > 0; --k) out.push_back(Gate::cx(support[k - 1], support[k]));
  for (std::size_t q : support) {
    if (letters[q] == Pauli::X) {
      out.push_back(Gate::h(q));
    } else if (letters[q] == Pauli::Y) {
      out.push_back(Gate::h(q));
      out.push_back(Gate::s(q));
    }
  }
  return out;
}

std::vector<Gate> synth_generator(const Clifford2QGate& g) {
  std::vector<Gate> pre;
  std::vector<Gate> post;
  // Control: V0 maps Z onto the control axis.
  switch (control_axis(g.kind)) {
    case Pauli::X:
      pre.push_back(Gate::h(g.a));
      post.push_back(Gate::h(g.a));
      break;
    case Pauli::Y:  // V0 = S H
      pre.push_back(Gate::sdg(g.a));
      pre.push_back(Gate::h(g.a));
      post.push_back(Gate::h(g.a));
      post.push_back(Gate::s(g.a));
      break;
    default:
      break;
  }
  // Target: V1 maps X onto the target axis.
  switch (target_axis(g.kind)) {
    case Pauli::Y:  // V1 = S
      pre.push_back(Gate::sdg(g.b));
      post.push_back(Gate::s(g.b));
      break;
    case Pauli::Z:
      pre.push_back(Gate::h(g.b));
      post.push_back(Gate::h(g.b));
      break;
    default:
      break;
  }
  std::vector<Gate> out = std::move(pre);
  out.push_back(Gate::cx(g.a, g.b));
  out.insert(out.end(), post.begin(), post.end());
  return out;
}

Circuit naive_synthesis(std::span<const PauliTerm> terms, std::size_t n_qubits) {
  Circuit c(n_qubits);
  for (const auto& t : terms) {
    auto gates = synth_pauli_rotation(t.letters, t.coefficient);
    c.append(std::span<const Gate>(gates));
  }
  return c;
}

namespace {

void expand_into(const Gate& g, Circuit& out) {
  switch (g.kind) {
    case GateKind::Gen: {
      auto gates = synth_generator(Clifford2QGate{g.gen, g.q[0], g.q[1]});
      out.append(std::span<const Gate>(gates));
      break;
    }
    case GateKind::PauliRot2: {
      std::vector<Pauli> letters(out.n_qubits, Pauli::I);
      letters[g.q[0]] = g.axes[0];
      letters[g.q[1]] = g.axes[1];
      auto gates = synth_pauli_rotation(letters, g.angle / 2.0);
      out.append(std::span<const Gate>(gates));
      break;
    }
    case GateKind::SU4:
      for (const auto& inner : g.payload) expand_into(inner, out);
      break;
    default:
      out.push(g);
  }
}

}  // namespace

Circuit expand_to_cnot(const Circuit& c) {
  Circuit out(c.n_qubits);
  out.gates.reserve(c.gates.size() * 3);
  for (const auto& g : c.gates) expand_into(g, out);
  return out;
}

Circuit expand_su4(const Circuit& c) {
  Circuit out(c.n_qubits);
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::SU4) {
      out.append(std::span<const Gate>(g.payload));
    } else {
      out.push(g);
    }
  }
  return out;
}

Circuit fuse_su4(const Circuit& c) {
  struct Block {
    std::size_t a, b;
    std::vector<Gate> gates;
  };
  struct Item {
    std::optional<Gate> gate;
    std::size_t block = 0;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Block> blocks;
  std::vector<Item> items;
  std::vector<std::size_t> open(c.n_qubits, kNone);

  for (const Gate& g : c.gates) {
    if (g.is_two_qubit()) {
      const std::size_t a = g.q[0], b = g.q[1];
      const std::size_t cur = open[a];
      if (cur != kNone && cur == open[b]) {
        if (g.kind == GateKind::SU4) {
          blocks[cur].gates.insert(blocks[cur].gates.end(), g.payload.begin(), g.payload.end());
        } else {
          blocks[cur].gates.push_back(g);
        }
        continue;
      }
      for (std::size_t q : {a, b}) {
        if (open[q] != kNone) {
          const Block& blk = blocks[open[q]];
          open[blk.a] = open[blk.b] = kNone;
        }
      }
      Block blk{a, b, {}};
      if (g.kind == GateKind::SU4) {
        blk.gates = g.payload;
      } else {
        blk.gates.push_back(g);
      }
      blocks.push_back(std::move(blk));
      open[a] = open[b] = blocks.size() - 1;
      items.push_back(Item{std::nullopt, blocks.size() - 1});
    } else if (open[g.q[0]] != kNone) {
      blocks[open[g.q[0]]].gates.push_back(g);
    } else {
      items.push_back(Item{g, 0});
    }
  }

  Circuit out(c.n_qubits);
  out.gates.reserve(items.size());
  for (auto& item : items) {
    if (item.gate) {
      out.push(std::move(*item.gate));
    } else {
      Block& blk = blocks[item.block];
      out.push(Gate::su4(blk.a, blk.b, std::move(blk.gates)));
    }
  }
  return out;
}

Circuit lower(const Circuit& c, Isa target) {
  Circuit cnot = peephole(expand_to_cnot(c));
  if (target == Isa::Cnot) return cnot;
  return fuse_su4(cnot);
}

}  // namespace bsfc
