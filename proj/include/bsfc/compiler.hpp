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

#include <optional>
#include <string>
#include <vector>

#include "bsfc/circuit.hpp"
#include "bsfc/order.hpp"
#include "bsfc/pauli.hpp"
#include "bsfc/route.hpp"
#include "bsfc/simplify.hpp"
#include "bsfc/synthesize.hpp"

namespace bsfc {

struct CompileOptions {
  Isa isa = Isa::Cnot;
  /// Unset compiles at the logical level (all-to-all).
  std::optional<CouplingGraph> coupling;
  OrderConfig order;
  SimplifyConfig simplify;
  RouterConfig router;
  std::optional<TrotterConfig> trotter;
  /// Conventional per-term synthesis in input order instead of the optimizer.
  bool naive_baseline = false;
};

struct StageTiming {
  std::string name;
  double ms = 0.0;
};

struct CompileResult {
  Circuit circuit;
  CircuitLayouts layouts;  ///< filled when routed
  bool routed = false;
  std::size_t swap_count = 0;
  Isa isa = Isa::Cnot;
  /// The exponentials exp(-i theta P) the circuit realizes, in time order.
  std::vector<PauliTerm> schedule;
  std::vector<StageTiming> stages;
};

/// Group circuit over the global register (GEN gates and rotations) together
/// with the order in which it realizes the group's terms.
struct CompiledGroup {
  Circuit circuit;
  std::vector<PauliTerm> schedule;
};

CompiledGroup compile_group(const IRGroup& group, std::size_t n_qubits,
                            const SimplifyConfig& cfg = {});

/// Terms the pipeline sees: the program itself or its Trotter expansion.
std::vector<PauliTerm> program_terms(const HamiltonianProgram& program,
                                     const std::optional<TrotterConfig>& trotter);

/// grouping, simplification, ordering, ISA lowering, optional routing.
CompileResult compile_program(const HamiltonianProgram& program, const CompileOptions& opts);

}  // namespace bsfc
