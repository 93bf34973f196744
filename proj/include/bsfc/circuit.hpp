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

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bsfc/bsf.hpp"
#include "bsfc/pauli.hpp"

namespace bsfc {

enum class GateKind : std::uint8_t {
  H,
  S,
  Sdg,
  RX,
  RY,
  RZ,
  CX,
  Gen,        ///< abstract Clifford2Q generator, lowered later
  Swap,
  PauliRot2,  ///< exp(-i angle/2 * P_a (x) P_b)
  SU4,        ///< fused two-qubit block; `payload` holds its constituent gates
};

/// One instruction. Rotation angles follow the usual half-angle convention,
/// RZ(phi) = exp(-i phi Z / 2).
struct Gate {
  GateKind kind = GateKind::H;
  std::array<std::size_t, 2> q{};
  double angle = 0.0;
  GenKind gen = GenKind::ZX;
  std::array<Pauli, 2> axes{Pauli::I, Pauli::I};
  std::vector<Gate> payload;

  static Gate make(GateKind k, std::size_t a, std::size_t b = 0, double phi = 0.0) {
    Gate g;
    g.kind = k;
    g.q = {a, b};
    g.angle = phi;
    return g;
  }
  static Gate h(std::size_t q0) { return make(GateKind::H, q0, 0); }
  static Gate s(std::size_t q0) { return make(GateKind::S, q0, 0); }
  static Gate sdg(std::size_t q0) { return make(GateKind::Sdg, q0, 0); }
  static Gate rx(std::size_t q0, double phi) { return make(GateKind::RX, q0, 0, phi); }
  static Gate ry(std::size_t q0, double phi) { return make(GateKind::RY, q0, 0, phi); }
  static Gate rz(std::size_t q0, double phi) { return make(GateKind::RZ, q0, 0, phi); }
  static Gate cx(std::size_t c, std::size_t t) { return make(GateKind::CX, c, t); }
  static Gate swap(std::size_t a, std::size_t b) { return make(GateKind::Swap, a, b); }
  static Gate generator(GenKind kind, std::size_t a, std::size_t b) {
    Gate g = make(GateKind::Gen, a, b);
    g.gen = kind;
    return g;
  }
  static Gate generator(const Clifford2QGate& c) { return generator(c.kind, c.a, c.b); }
  static Gate pauli_rot2(Pauli pa, Pauli pb, std::size_t a, std::size_t b, double phi) {
    Gate g = make(GateKind::PauliRot2, a, b, phi);
    g.axes = {pa, pb};
    return g;
  }
  static Gate su4(std::size_t a, std::size_t b, std::vector<Gate> body) {
    Gate g = make(GateKind::SU4, a, b);
    g.payload = std::move(body);
    return g;
  }
  /// Single-qubit rotation about a Pauli axis.
  static Gate rotation(Pauli axis, std::size_t q0, double phi);

  bool is_two_qubit() const;
  std::size_t arity() const { return is_two_qubit() ? 2 : 1; }
  bool touches(std::size_t qubit) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n) : n_qubits(n) {}

  void push(Gate g) { gates.push_back(std::move(g)); }
  void append(const Circuit& other);
  void append(std::span<const Gate> other);
  /// Throws bsfc::Error when an operand is out of range or a gate repeats a qubit.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

Circuit concat(const Circuit& a, const Circuit& b);
/// Same gates in reverse list order (not the inverse circuit).
Circuit reversed(const Circuit& c);
/// Relabels qubit i to map[i] on an `n_qubits`-wide register.
Circuit remap_qubits(const Circuit& c, std::span<const std::size_t> map, std::size_t n_qubits);

/// ASAP layering of the two-qubit gates: each gate lands one layer after the
/// latest layer already holding one of its qubits. One-qubit gates are ignored.
/// Entries are indices into `c.gates`.
std::vector<std::vector<std::size_t>> layers_2q(const Circuit& c);
std::size_t depth_2q(const Circuit& c);
std::size_t count_2q(const Circuit& c);
std::size_t count_1q(const Circuit& c);
std::size_t count_kind(const Circuit& c, GateKind kind);

struct EndianVectors {
  std::vector<std::size_t> left;   ///< e_l
  std::vector<std::size_t> right;  ///< e_r
  std::size_t depth = 0;
};

/// Layers traversed from each boundary before a qubit is hit by a 2Q gate.
/// Qubits never touched get `depth`.
EndianVectors endian_vectors(const Circuit& c);

/// Undirected graph on n vertices with its distance matrix. Vertices without
/// edges do not take part: their rows and columns are zero. Pairs of active
/// vertices in different components get the sentinel distance n.
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(std::size_t n);

  void add_edge(std::size_t a, std::size_t b);
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool active(std::size_t v) const { return degree_[v] > 0; }
  /// Row-major n x n; recomputed lazily after edits.
  const std::vector<double>& distances() const;
  double distance(std::size_t i, std::size_t j) const { return distances()[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> degree_;
  mutable std::vector<double> dist_;
  mutable bool dirty_ = true;
};

/// Cancels adjacent self-inverse pairs (CX, Gen, Swap, H, S/Sdg), fuses adjacent
/// same-axis rotations on the same operands and drops rotations whose angle is a
/// multiple of 2*pi. "Adjacent" means no gate in between touches any operand.
Circuit peephole(const Circuit& c);

// Text format -------------------------------------------------------------

/// Optional qubit placement recorded by routing: physical = layout[logical].
struct CircuitLayouts {
  std::vector<std::size_t> initial;
  std::vector<std::size_t> final;
  /// SWAPs inserted by routing before they were decomposed; -1 when unknown.
  long routing_swaps = -1;
};

std::string gate_to_string(const Gate& g);
void write_circuit(std::ostream& out, const Circuit& c, const CircuitLayouts* layouts = nullptr);
std::string circuit_to_string(const Circuit& c, const CircuitLayouts* layouts = nullptr);
Circuit parse_circuit(std::istream& in, CircuitLayouts* layouts = nullptr);
Circuit parse_circuit_string(const std::string& text, CircuitLayouts* layouts = nullptr);
Circuit load_circuit(const std::string& path, CircuitLayouts* layouts = nullptr);

}  // namespace bsfc
