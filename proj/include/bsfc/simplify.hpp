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

#include <cstddef>
#include <vector>

#include "bsfc/bsf.hpp"
#include "bsfc/circuit.hpp"

namespace bsfc {

struct SimplifyConfig {
  /// Consecutive greedy epochs without a strict cost decrease before the
  /// forced reduction takes over.
  int cost_stall_limit = 3;
  /// Same, for the sum of row weights.
  int weight_stall_limit = 6;
  /// Hard epoch budget; 0 means 4 * (initial sum of row weights).
  std::size_t max_epochs = 0;
};

struct Epoch {
  Clifford2QGate cliff;
  /// Rows peeled off right before `cliff`, expressed in the frame after all
  /// earlier epochs' generators.
  std::vector<LocalRow> locals;
  bool forced = false;
};

struct SimplifiedGroup {
  std::vector<std::size_t> qubit_map;  ///< local column -> global qubit
  std::vector<Epoch> epochs;
  BSFTableau final;                    ///< total_weight(final) <= 2
  std::vector<LocalRow> trailing_locals;
  /// Origin ids of the exponentials realized by emit_group_circuit, in time
  /// order: final rows, trailing locals, then epoch K locals ... epoch 1 locals.
  std::vector<int> reported_order;
  /// Same order, as indices into the input group's terms.
  std::vector<std::size_t> reported_sources;
};

struct CandidateScore {
  Clifford2QGate gate;
  double cost = 0.0;
};

/// Every generator placement the greedy search considers, in tie-break order
/// (kind, control, target). Symmetric kinds appear once per unordered pair.
std::vector<CandidateScore> score_candidates(const BSFTableau& t);

/// First minimum of score_candidates. Requires at least two columns.
CandidateScore best_candidate(const BSFTableau& t);

/// Generator on two support qubits (a, b) of the first maximum-weight row,
/// with target axis equal to the row's letter on b and control axis
/// anticommuting with its letter on a; it lowers that row's weight by one.
/// Among admissible placements the one with the smallest resulting sum of row
/// weights wins (ties: a, b, kind). Throws bsfc::Error if total_weight <= 2.
Clifford2QGate forced_reduction_move(const BSFTableau& t);

/// Same rule restricted to one row (weight >= 2).
Clifford2QGate forced_move_on_row(const BSFTableau& t, std::size_t row);

/// Greedy Clifford2Q search until the tableau has total weight <= 2.
SimplifiedGroup simplify_group(BSFTableau t, const SimplifyConfig& cfg = {});

/// Time-ordered circuit over the group's local qubits:
///   C_1 .. C_K, rot(final rows), rot(trailing), C_K, L_K, ..., C_1, L_1.
/// Generators stay abstract (GateKind::Gen); weight-2 rows become PauliRot2 and
/// locals single-qubit rotations, with sign bits folded into the angles.
Circuit emit_group_circuit(const SimplifiedGroup& s);

}  // namespace bsfc
