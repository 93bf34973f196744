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
#include <span>
#include <vector>

#include "bsfc/circuit.hpp"

namespace bsfc {

/// How the boundary fit between two blocks is scored.
enum class DepthModel {
  /// sum(e_r + e_l') when the blocks can slide into each other, otherwise
  /// sum(e_r + e_l' - 1).
  AsWritten,
  /// Empty cells left between the blocks after sliding the succeeding block
  /// as far as its active qubits allow: sum(e_r + e_l') - n * s with
  /// s = min over active qubits of (e_r + e_l').
  Slide,
};

/// What a candidate is scored against.
enum class Frontier {
  /// The block appended last.
  LastBlock,
  /// The whole circuit assembled so far (its right boundary profile).
  Assembled,
};

struct OrderConfig {
  std::size_t lookahead_k = 10;
  bool hardware_aware = false;
  bool use_similarity = true;
  double similarity_epsilon = 1e-6;
  DepthModel depth_model = DepthModel::Slide;
  Frontier frontier = Frontier::Assembled;

  /// Throws bsfc::Error when lookahead_k is zero or epsilon is not positive.
  void validate() const;
};

/// `block_depth` is the succeeding block's 2Q depth; qubits with
/// e_l' == block_depth are idle in it. Only the Slide model uses it.
double depth_cost(std::span<const std::size_t> e_r, std::span<const std::size_t> e_l,
                  DepthModel model = DepthModel::AsWritten, std::size_t block_depth = 0);

/// sides = number of neighbours whose 2Q depth strictly drops (0, 1 or 2).
double cancellation_adjustment(double cost, std::size_t m, int sides, double n);

/// Sum over rows of the cosine similarity of the two distance matrices, rows
/// with zero norm contributing nothing, clamped below by `epsilon`.
double similarity_factor(const InteractionGraph& tail, const InteractionGraph& head,
                         double epsilon = 1e-6);

struct HeadTail {
  InteractionGraph head;
  InteractionGraph tail;
};

/// Grows the head (tail) from the left (right) end one 2Q gate at a time until
/// every qubit the circuit touches is covered.
HeadTail head_tail_graphs(const Circuit& c);

struct Cancellation {
  std::size_t m = 0;
  int depth_drop_sides = 0;
  std::vector<std::size_t> prev_removed;  ///< indices into prev.gates
  std::vector<std::size_t> next_removed;  ///< indices into next.gates
};

/// Pairs trailing GEN gates of `prev` with identical leading GEN gates of
/// `next`. Removing a pair can expose further pairs; all are collected.
Cancellation detect_cancellation(const Circuit& prev, const Circuit& next);

/// Layers above each qubit's last 2Q gate under ASAP placement: where the next
/// gate on that qubit would land relative to the current top.
std::vector<std::size_t> skyline(const Circuit& c);

/// Removes the listed gate indices.
Circuit erase_gates(const Circuit& c, std::vector<std::size_t> indices);

/// One block in the assembly pool.
struct AssemblyCandidate {
  std::size_t index = 0;
  Circuit circuit;
  EndianVectors endian;
  HeadTail graphs;
  std::vector<std::size_t> support;

  AssemblyCandidate() = default;
  AssemblyCandidate(std::size_t index, Circuit c);
  /// Recomputes the cached analyses after `circuit` changed.
  void refresh();
};

/// Score of appending `next` after `prev`. Does not modify either.
double assembly_cost(const AssemblyCandidate& prev, const AssemblyCandidate& next,
                     const OrderConfig& cfg);

struct AssemblyResult {
  Circuit circuit;
  std::vector<std::size_t> order;  ///< input indices in assembled order
  std::size_t cancelled_pairs = 0;
};

/// Greedy lookahead assembly. Blocks are pre-sorted by descending support size
/// (stable), then each step appends the cheapest of the next `lookahead_k`
/// blocks relative to the previously appended one. Detected GEN pairs are
/// removed at commit time and the result is peepholed.
AssemblyResult assemble(std::span<const Circuit> groups, const OrderConfig& cfg);

}  // namespace bsfc
