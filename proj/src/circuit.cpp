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

#include "bsfc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include <fmt/format.h>

#include "bsfc/error.hpp"

namespace bsfc {

Gate Gate::rotation(Pauli axis, std::size_t q0, double phi) {
  switch (axis) {
    case Pauli::X: return rx(q0, phi);
    case Pauli::Y: return ry(q0, phi);
    case Pauli::Z: return rz(q0, phi);
    case Pauli::I: break;
  }
  throw Error("rotation axis must be X, Y or Z");
}

bool Gate::is_two_qubit() const {
  switch (kind) {
    case GateKind::CX:
    case GateKind::Gen:
    case GateKind::Swap:
    case GateKind::PauliRot2:
    case GateKind::SU4:
      return true;
    default:
      return false;
  }
}

bool Gate::touches(std::size_t qubit) const {
  return q[0] == qubit || (is_two_qubit() && q[1] == qubit);
}

void Circuit::append(const Circuit& other) { append(std::span<const Gate>(other.gates)); }

void Circuit::append(std::span<const Gate> other) {
  gates.insert(gates.end(), other.begin(), other.end());
}

void Circuit::validate() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    for (std::size_t k = 0; k < g.arity(); ++k) {
      if (g.q[k] >= n_qubits) {
        throw Error(fmt::format("gate {} uses qubit {} on a {}-qubit circuit", i, g.q[k], n_qubits));
      }
    }
    if (g.is_two_qubit() && g.q[0] == g.q[1]) {
      throw Error(fmt::format("gate {} repeats qubit {}", i, g.q[0]));
    }
    if (!std::isfinite(g.angle)) throw Error(fmt::format("gate {} has a non-finite angle", i));
  }
}

Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit out(std::max(a.n_qubits, b.n_qubits));
  out.gates.reserve(a.gates.size() + b.gates.size());
  out.append(a);
  out.append(b);
  return out;
}

Circuit reversed(const Circuit& c) {
  Circuit out(c.n_qubits);
  out.gates.assign(c.gates.rbegin(), c.gates.rend());
  return out;
}

namespace {

Gate remap_gate(const Gate& g, std::span<const std::size_t> map) {
  Gate out = g;
  out.q[0] = map[g.q[0]];
  if (g.is_two_qubit()) out.q[1] = map[g.q[1]];
  for (auto& inner : out.payload) inner = remap_gate(inner, map);
  return out;
}

}  // namespace

Circuit remap_qubits(const Circuit& c, std::span<const std::size_t> map, std::size_t n_qubits) {
  if (map.size() < c.n_qubits) throw Error("qubit map is shorter than the circuit width");
  Circuit out(n_qubits);
  out.gates.reserve(c.gates.size());
  for (const auto& g : c.gates) out.push(remap_gate(g, map));
  return out;
}

std::vector<std::vector<std::size_t>> layers_2q(const Circuit& c) {
  std::vector<std::size_t> level(c.n_qubits, 0);
  std::vector<std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (!g.is_two_qubit()) continue;
    const std::size_t l = std::max(level[g.q[0]], level[g.q[1]]);
    if (l == layers.size()) layers.emplace_back();
    layers[l].push_back(i);
    level[g.q[0]] = level[g.q[1]] = l + 1;
  }
  return layers;
}

std::size_t depth_2q(const Circuit& c) {
  std::vector<std::size_t> level(c.n_qubits, 0);
  std::size_t depth = 0;
  for (const Gate& g : c.gates) {
    if (!g.is_two_qubit()) continue;
    const std::size_t l = std::max(level[g.q[0]], level[g.q[1]]) + 1;
    level[g.q[0]] = level[g.q[1]] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

std::size_t count_2q(const Circuit& c) {
  return static_cast<std::size_t>(
      std::count_if(c.gates.begin(), c.gates.end(), [](const Gate& g) { return g.is_two_qubit(); }));
}

std::size_t count_1q(const Circuit& c) { return c.gates.size() - count_2q(c); }

std::size_t count_kind(const Circuit& c, GateKind kind) {
  return static_cast<std::size_t>(
      std::count_if(c.gates.begin(), c.gates.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

namespace {

// First-layer index per qubit under ASAP layering of the gate range.
template <typename It>
std::vector<std::size_t> first_layers(It begin, It end, std::size_t n, std::size_t& depth) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, 0);
  std::vector<std::size_t> first(n, kUnset);
  depth = 0;
  for (It it = begin; it != end; ++it) {
    const Gate& g = *it;
    if (!g.is_two_qubit()) continue;
    const std::size_t l = std::max(level[g.q[0]], level[g.q[1]]);
    for (std::size_t q : g.q) {
      if (first[q] == kUnset) first[q] = l;
      level[q] = l + 1;
    }
    depth = std::max(depth, l + 1);
  }
  for (auto& f : first) {
    if (f == kUnset) f = depth;
  }
  return first;
}

}  // namespace

EndianVectors endian_vectors(const Circuit& c) {
  EndianVectors e;
  std::size_t depth_left = 0, depth_right = 0;
  e.left = first_layers(c.gates.begin(), c.gates.end(), c.n_qubits, depth_left);
  e.right = first_layers(c.gates.rbegin(), c.gates.rend(), c.n_qubits, depth_right);
  e.depth = depth_left;
  return e;
}

InteractionGraph::InteractionGraph(std::size_t n) : n_(n), adj_(n), degree_(n, 0) {}

void InteractionGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_ || a == b) throw Error(fmt::format("invalid edge ({}, {})", a, b));
  if (a > b) std::swap(a, b);
  if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) return;
  edges_.emplace_back(a, b);
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  ++degree_[a];
  ++degree_[b];
  dirty_ = true;
}

const std::vector<double>& InteractionGraph::distances() const {
  if (!dirty_) return dist_;
  dist_.assign(n_ * n_, 0.0);
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> d(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    if (degree_[s] == 0) continue;
    std::fill(d.begin(), d.end(), kInf);
    d[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj_[v]) {
        if (d[w] == kInf) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t t = 0; t < n_; ++t) {
      if (degree_[t] == 0 || t == s) continue;
      dist_[s * n_ + t] = d[t] == kInf ? static_cast<double>(n_) : static_cast<double>(d[t]);
    }
  }
  dirty_ = false;
  return dist_;
}

namespace {

bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ || k == GateKind::PauliRot2;
}

bool is_trivial_angle(double phi) {
  return std::abs(std::remainder(phi, 2.0 * std::numbers::pi)) < 1e-12;
}

bool same_operands(const Gate& a, const Gate& b) {
  if (a.arity() != b.arity()) return false;
  if (a.arity() == 1) return a.q[0] == b.q[0];
  return (a.q[0] == b.q[0] && a.q[1] == b.q[1]) || (a.q[0] == b.q[1] && a.q[1] == b.q[0]);
}

bool cancels(const Gate& a, const Gate& b) {
  switch (a.kind) {
    case GateKind::H:
      return b.kind == GateKind::H && a.q[0] == b.q[0];
    case GateKind::S:
      return b.kind == GateKind::Sdg && a.q[0] == b.q[0];
    case GateKind::Sdg:
      return b.kind == GateKind::S && a.q[0] == b.q[0];
    case GateKind::CX:
      return b.kind == GateKind::CX && a.q == b.q;
    case GateKind::Swap:
      return b.kind == GateKind::Swap && same_operands(a, b);
    case GateKind::Gen:
      if (b.kind != GateKind::Gen || a.gen != b.gen) return false;
      return a.q == b.q || (is_symmetric(a.gen) && a.q[0] == b.q[1] && a.q[1] == b.q[0]);
    default:
      return false;
  }
}

// Fuses b into a when both rotate about the same axis on the same operands.
bool try_merge(Gate& a, const Gate& b) {
  if (a.kind != b.kind || !is_rotation(a.kind)) return false;
  if (a.kind != GateKind::PauliRot2) {
    if (a.q[0] != b.q[0]) return false;
    a.angle += b.angle;
    return true;
  }
  if (a.q == b.q && a.axes == b.axes) {
    a.angle += b.angle;
    return true;
  }
  if (a.q[0] == b.q[1] && a.q[1] == b.q[0] && a.axes[0] == b.axes[1] && a.axes[1] == b.axes[0]) {
    a.angle += b.angle;
    return true;
  }
  return false;
}

// One sweep with per-qubit stacks of live gates, so cancellations cascade.
bool peephole_pass(const Circuit& in, Circuit& result) {
  std::vector<Gate> out;
  out.reserve(in.gates.size());
  std::vector<char> alive;
  alive.reserve(in.gates.size());
  std::vector<std::vector<std::size_t>> stacks(in.n_qubits);
  bool changed = false;

  auto pop_from_stacks = [&](const Gate& g) {
    for (std::size_t k = 0; k < g.arity(); ++k) stacks[g.q[k]].pop_back();
  };

  for (const Gate& g : in.gates) {
    if (is_rotation(g.kind) && is_trivial_angle(g.angle)) {
      changed = true;
      continue;
    }
    // The predecessor must be the top of every operand's stack and act on
    // exactly the same qubits.
    std::size_t prev = static_cast<std::size_t>(-1);
    bool adjacent = true;
    for (std::size_t k = 0; k < g.arity(); ++k) {
      const auto& st = stacks[g.q[k]];
      if (st.empty()) {
        adjacent = false;
        break;
      }
      if (k == 0) {
        prev = st.back();
      } else if (st.back() != prev) {
        adjacent = false;
      }
    }
    if (adjacent && same_operands(out[prev], g)) {
      if (cancels(out[prev], g)) {
        alive[prev] = 0;
        pop_from_stacks(g);
        changed = true;
        continue;
      }
      if (try_merge(out[prev], g)) {
        if (is_trivial_angle(out[prev].angle)) {
          alive[prev] = 0;
          pop_from_stacks(g);
        }
        changed = true;
        continue;
      }
    }
    out.push_back(g);
    alive.push_back(1);
    for (std::size_t k = 0; k < g.arity(); ++k) stacks[g.q[k]].push_back(out.size() - 1);
  }

  result = Circuit(in.n_qubits);
  result.gates.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (alive[i]) result.push(std::move(out[i]));
  }
  return changed;
}

}  // namespace

Circuit peephole(const Circuit& c) {
  Circuit current = c;
  Circuit next;
  while (peephole_pass(current, next)) current = std::move(next);
  return current;
}

}  // namespace bsfc
