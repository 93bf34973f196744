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
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "bsfc/pauli.hpp"

namespace bsfc {

/// Seeded helpers that do not depend on the standard library's distribution
/// implementations, so outputs match across toolchains.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);
double uniform_real(std::mt19937_64& rng, double lo, double hi);

enum class QaoaGraph { Reg3, Rand4 };

QaoaGraph qaoa_graph_from_name(std::string_view name);
std::string_view qaoa_graph_name(QaoaGraph g);

/// Random d-regular simple graph by the pairing model with restarts. Edges
/// come back in pairing order (random), each with a < b. Throws bsfc::Error
/// when n*d is odd or d >= n.
std::vector<std::pair<std::size_t, std::size_t>> random_regular_graph(std::size_t n,
                                                                      std::size_t degree,
                                                                      std::uint64_t seed);

/// One ZZ term with unit angle per edge. Reg3 uses degree 3, Rand4 degree 4.
HamiltonianProgram qaoa_program(QaoaGraph kind, std::size_t n, std::uint64_t seed);

struct RandomProgramConfig {
  std::size_t n_qubits = 8;
  std::size_t n_terms = 16;
  std::size_t min_weight = 3;
  std::size_t max_weight = 6;
  /// Terms drawn per shared support before a new support is picked.
  std::size_t terms_per_support = 4;
  std::uint64_t seed = 0;
};

/// Heterogeneous-weight terms with random non-identity letters and angles in
/// [-1, 1), emitted in runs that share one support.
HamiltonianProgram random_program(const RandomProgramConfig& cfg);

}  // namespace bsfc
