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

#include <span>
#include <string_view>
#include <vector>

#include "bsfc/bsf.hpp"
#include "bsfc/circuit.hpp"
#include "bsfc/pauli.hpp"

namespace bsfc {

enum class Isa { Cnot, SU4 };

std::string_view isa_name(Isa isa);
Isa isa_from_name(std::string_view name);

/// exp(-i theta P) (or exp(+i theta P) when `negative`) as basis changes, a CNOT
/// chain onto the highest support qubit, RZ, and the mirror image. Basis
/// changes: X -> H; Y -> Sdg then H. A weight-w string costs 2(w-1) CNOTs.
/// Throws bsfc::Error for the identity string.
std::vector<Gate> synth_pauli_rotation(std::span<const Pauli> letters, double theta,
                                       bool negative = false);

/// One CNOT dressed by local Cliffords: V0^dagger (x) V1^dagger, CX, V0 (x) V1
/// with V0 Z V0^dagger = s0 and V1 X V1^dagger = s1.
std::vector<Gate> synth_generator(const Clifford2QGate& g);

/// Conventional synthesis of every term in order; the optimization baseline.
Circuit naive_synthesis(std::span<const PauliTerm> terms, std::size_t n_qubits);

/// Expands Gen and PauliRot2 gates (and SU4 payloads) into {1Q, CX}. Swaps are
/// kept. No peephole.
Circuit expand_to_cnot(const Circuit& c);

/// Replaces each SU4 block by its payload.
Circuit expand_su4(const Circuit& c);

/// Fuses maximal same-pair runs into SU4 blocks. One-qubit gates on an open
/// block's qubits are absorbed; remaining two-qubit gates become singleton
/// blocks.
Circuit fuse_su4(const Circuit& c);

/// CNOT: expand_to_cnot then peephole. SU4: the CNOT lowering, then fusion.
Circuit lower(const Circuit& c, Isa target);

}  // namespace bsfc
