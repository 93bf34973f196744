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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bsfc/circuit.hpp"
#include "bsfc/pauli.hpp"

namespace bsfc {

/// Dense 2^n x 2^n complex matrix, row-major. Qubit q is bit q of the basis
/// index. A circuit [G1, G2] has matrix M(G2) * M(G1).
class DenseUnitary {
 public:
  using cplx = std::complex<double>;

  static constexpr std::size_t kMaxQubits = 12;

  DenseUnitary() = default;
  /// Identity on n qubits. Throws bsfc::Error above kMaxQubits.
  explicit DenseUnitary(std::size_t n_qubits);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  cplx* row(std::size_t r) { return data_.data() + r * dim_; }
  const cplx* row(std::size_t r) const { return data_.data() + r * dim_; }
  std::span<const cplx> data() const { return data_; }

  /// Left-multiplies by a gate (U <- M(g) U).
  void apply(const Gate& g);
  /// Left-multiplies by exp(-i theta P).
  void apply_pauli_exp(std::span<const Pauli> letters, double theta);

  /// max |(U^dagger U - I)_{ij}|.
  double unitarity_error() const;
  DenseUnitary operator*(const DenseUnitary& rhs) const;

 private:
  void apply_1q(std::size_t q, const cplx* m);
  void apply_2q(std::size_t a, std::size_t b, const cplx* m);

  std::size_t n_ = 0;
  std::size_t dim_ = 1;
  std::vector<cplx> data_{cplx{1.0, 0.0}};
};

DenseUnitary unitary_of(const Circuit& c);

/// Product of exp(-i theta_j P_j) with the first term applied first.
DenseUnitary pauli_exp_product(std::span<const PauliTerm> terms, std::size_t n_qubits);

/// exp(-i t H) with H = sum_j coefficient_j P_j (at most 10 qubits).
DenseUnitary exact_evolution(const HamiltonianProgram& h, double t);

/// 1 - |Tr(U^dagger V)| / N.
double infidelity(const DenseUnitary& u, const DenseUnitary& v);

/// The physical-register matrix a routed circuit should have when it realizes
/// `logical` with the given placements. Layouts are full permutations of the
/// physical register: physical = layout[virtual], virtual qubits past the
/// logical width are idle.
DenseUnitary embed_with_layouts(const DenseUnitary& logical, std::size_t n_physical,
                                std::span<const std::size_t> initial,
                                std::span<const std::size_t> final);

/// Infidelity between a routed physical circuit and the logical unitary it
/// should realize. Only physical qubits that the circuit touches or that hold
/// logical qubits are simulated, so wide devices are fine as long as that set
/// stays within the dense cap.
double routed_infidelity(const Circuit& physical, std::span<const std::size_t> initial,
                         std::span<const std::size_t> final, const DenseUnitary& logical);

}  // namespace bsfc
