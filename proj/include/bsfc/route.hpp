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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bsfc/circuit.hpp"

namespace bsfc {

class CouplingGraph {
 public:
  CouplingGraph() = default;
  /// Throws bsfc::Error on self-loops, out-of-range endpoints or a
  /// disconnected graph. Duplicate edges are dropped.
  CouplingGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t num_qubits() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t distance(std::size_t a, std::size_t b) const { return dist_[a * n_ + b]; }
  bool adjacent(std::size_t a, std::size_t b) const { return distance(a, b) == 1; }
  /// Next hop on a shortest path from a towards b (a != b).
  std::size_t step_towards(std::size_t a, std::size_t b) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> dist_;
};

/// Heavy-hex lattice with `rows` rows of hexagonal cells and `cols` cells per
/// row. Qubits are numbered in reading order. heavy_hex(4, 2) has 63 qubits.
CouplingGraph heavy_hex(std::size_t rows, std::size_t cols);
CouplingGraph all_to_all(std::size_t n);
CouplingGraph line_graph(std::size_t n);

/// "n" on the first line, then one "a b" edge per line; '#' starts a comment.
/// Duplicate edges produce a warning.
CouplingGraph parse_coupling(std::istream& in, std::vector<std::string>* warnings = nullptr);
CouplingGraph load_coupling(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// physical = layout[virtual]; always a permutation of the physical register.
using Layout = std::vector<std::size_t>;

Layout trivial_layout(std::size_t n);
Layout inverse_layout(const Layout& l);

struct RouterConfig {
  std::size_t extended_set_size = 20;
  double extended_weight = 0.5;
  double decay_delta = 0.001;
  std::size_t decay_reset_interval = 5;
  std::uint64_t seed = 0;
  /// One forward and one backward pass to pick the initial layout.
  bool reverse_traversal = false;
};

struct RoutingResult {
  Circuit circuit;  ///< over the physical register, with Swap gates
  Layout initial;
  Layout final;
  std::size_t swap_count = 0;
};

/// SABRE-style routing. `initial` empty means the trivial layout.
RoutingResult sabre_route(const Circuit& c, const CouplingGraph& g, const RouterConfig& cfg = {},
                          Layout initial = {});

/// Each Swap(a, b) becomes CX(a, b), CX(b, a), CX(a, b).
Circuit decompose_swap(const Circuit& c);

/// True when every two-qubit gate sits on a coupling edge.
bool respects_coupling(const Circuit& c, const CouplingGraph& g);

}  // namespace bsfc
