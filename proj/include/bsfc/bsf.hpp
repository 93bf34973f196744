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
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "bsfc/pauli.hpp"

namespace bsfc {

/// The six Hermitian universal controlled gates
/// C(s0, s1) = 1/2 ((I + s0) (x) I + (I - s0) (x) s1), in search order.
enum class GenKind : std::uint8_t { XX, YY, ZZ, XY, YZ, ZX };

inline constexpr std::array<GenKind, 6> kGenKinds = {GenKind::XX, GenKind::YY, GenKind::ZZ,
                                                      GenKind::XY, GenKind::YZ, GenKind::ZX};

Pauli control_axis(GenKind kind);
Pauli target_axis(GenKind kind);
/// XX, YY and ZZ are invariant under exchanging the two qubits.
bool is_symmetric(GenKind kind);
/// Lower-case two-letter name, e.g. "xy".
std::string_view gen_name(GenKind kind);
/// Inverse of gen_name; throws bsfc::Error on unknown names.
GenKind gen_from_name(std::string_view name);

struct Clifford2QGate {
  GenKind kind = GenKind::ZX;
  std::size_t a = 0;  ///< control
  std::size_t b = 1;  ///< target

  friend bool operator==(const Clifford2QGate&, const Clifford2QGate&) = default;
};

/// Image of every two-qubit Pauli (on control, target) under conjugation by one
/// generator: C (P_a (x) P_b) C^dagger = sign * (P_a' (x) P_b').
class ConjugationTable {
 public:
  struct Entry {
    Pauli a = Pauli::I;
    Pauli b = Pauli::I;
    bool negative = false;
  };

  const Entry& operator()(Pauli a, Pauli b) const {
    return entries_[static_cast<std::size_t>(a) * 4 + static_cast<std::size_t>(b)];
  }

 private:
  friend const ConjugationTable& conjugation_table(GenKind kind);
  std::array<Entry, 16> entries_{};
};

/// Built once per kind by exact 4x4 matrix conjugation.
const ConjugationTable& conjugation_table(GenKind kind);

/// A weight-1 row removed from a tableau.
struct LocalRow {
  std::size_t qubit = 0;  ///< local column
  Pauli letter = Pauli::I;
  double angle = 0.0;
  bool negative = false;
  int origin_id = 0;
  std::size_t source = 0;  ///< index of the term in its IR group
};

/// Binary symplectic tableau over the local qubits of one IR group. Each row is
/// a tracked Pauli (-1)^sign P with rotation angle and provenance. Bits are
/// packed row-major into 64-bit words.
class BSFTableau {
 public:
  BSFTableau() = default;
  explicit BSFTableau(std::vector<std::size_t> qubit_map);

  /// One row per group term, columns re-indexed onto the group's support.
  static BSFTableau from_group(const IRGroup& group);

  /// Appends a row over local columns. Identity rows are rejected.
  void push_row(std::span<const Pauli> local_letters, double angle, int origin_id,
                std::size_t source, bool negative = false);

  std::size_t num_qubits() const { return qubit_map_.size(); }
  std::size_t num_rows() const { return angles_.size(); }
  std::size_t words_per_row() const { return words_; }
  bool empty() const { return angles_.empty(); }

  bool x(std::size_t row, std::size_t col) const;
  bool z(std::size_t row, std::size_t col) const;
  Pauli letter(std::size_t row, std::size_t col) const;
  std::vector<Pauli> row_letters(std::size_t row) const;
  bool negative(std::size_t row) const { return signs_[row] != 0; }
  double angle(std::size_t row) const { return angles_[row]; }
  int origin_id(std::size_t row) const { return origins_[row]; }
  std::size_t source(std::size_t row) const { return sources_[row]; }
  const std::vector<std::size_t>& qubit_map() const { return qubit_map_; }

  std::size_t row_weight(std::size_t row) const;
  /// Sum of all row weights.
  std::size_t weight_sum() const;
  /// Symplectic inner product of two rows (1 iff they anticommute).
  bool symplectic_product(std::size_t r1, std::size_t r2) const;

  /// Conjugates every row by the generator in place. Throws bsfc::Error when an
  /// operand is out of range or a == b.
  void apply(const Clifford2QGate& g);

  /// Removes and returns all weight-1 rows, in row order.
  std::vector<LocalRow> pop_local_rows();

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  friend bool operator==(const BSFTableau&, const BSFTableau&) = default;

 private:
  void set_letter(std::size_t row, std::size_t col, Pauli p);

  std::vector<std::size_t> qubit_map_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint8_t> signs_;
  std::vector<double> angles_;
  std::vector<int> origins_;
  std::vector<std::size_t> sources_;
};

BSFTableau build_tableau(const IRGroup& group);
BSFTableau apply_clifford2q(BSFTableau t, const Clifford2QGate& g);

/// Number of columns touched by any row.
std::size_t total_weight(const BSFTableau& t);

/// Splits off the weight-1 rows.
std::pair<std::vector<LocalRow>, BSFTableau> pop_local_rows(BSFTableau t);

/// Greedy search objective:
///   w_tot * n_nl^2 + sum_{i<j} |row_i v row_j|
///                  + 1/2 sum_{i<j} (|x_i v x_j| + |z_i v z_j|)
/// where n_nl counts rows of weight >= 2 and pair sums run over all rows.
double cost_bsf(const BSFTableau& t);

}  // namespace bsfc
