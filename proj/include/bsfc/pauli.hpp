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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsfc {

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component,
/// which is exactly the [x|z] column pair of the symplectic encoding.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool x_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 1u) != 0; }
constexpr bool z_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 2u) != 0; }
constexpr Pauli pauli_from_bits(bool x, bool z) {
  return static_cast<Pauli>((x ? 1u : 0u) | (z ? 2u : 0u));
}

/// True when the two letters anticommute (both non-identity and distinct).
constexpr bool anticommute(Pauli a, Pauli b) {
  return a != Pauli::I && b != Pauli::I && a != b;
}

char to_char(Pauli p);
/// Accepts I, X, Y, Z in either case.
std::optional<Pauli> pauli_from_char(char c);

/// One weighted Pauli string. `coefficient` is the rotation angle theta of
/// exp(-i theta P) once the program has been Trotterized.
struct PauliTerm {
  std::vector<Pauli> letters;
  double coefficient = 0.0;
  int origin_id = 0;

  std::size_t num_qubits() const { return letters.size(); }
  std::size_t weight() const;
  /// Sorted qubit indices with a non-identity letter.
  std::vector<std::size_t> support() const;
  std::string letters_string() const;

  static PauliTerm from_string(std::string_view letters, double coefficient, int origin_id = 0);
};

struct HamiltonianProgram {
  std::size_t n_qubits = 0;
  std::vector<PauliTerm> terms;
};

struct TrotterConfig {
  int order = 1;
  int steps = 1;
  double total_time = 1.0;

  double tau() const { return total_time / static_cast<double>(steps); }
  /// Throws bsfc::Error for unsupported orders or a degenerate time step.
  void validate() const;
};

/// Parses "order=2,steps=1,t=1.0" (any subset, any order).
TrotterConfig parse_trotter_options(std::string_view text);

/// Terms sharing one non-identity support. Letters stay in global indexing.
struct IRGroup {
  std::vector<std::size_t> support;
  std::vector<PauliTerm> terms;
};

/// Parses one "coefficient letters" line. Returns nullopt for identity terms,
/// which only contribute a global phase; a warning is appended when `warnings`
/// is non-null.
std::optional<PauliTerm> parse_term(std::string_view text, std::size_t n_qubits,
                                    std::size_t line_no, int origin_id,
                                    std::vector<std::string>* warnings = nullptr);

HamiltonianProgram parse_program(std::istream& in, std::vector<std::string>* warnings = nullptr);
HamiltonianProgram load_program(const std::string& path,
                                std::vector<std::string>* warnings = nullptr);
void write_program(std::ostream& out, const HamiltonianProgram& program);

std::vector<PauliTerm> trotterize(const HamiltonianProgram& program, const TrotterConfig& cfg);

/// Partitions terms by exact support equality. Groups appear in order of first
/// appearance; within a group, input order is kept.
std::vector<IRGroup> group_by_support(std::span<const PauliTerm> terms);

}  // namespace bsfc
