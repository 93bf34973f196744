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

// Tiny fixed-size complex matrices for single gates. Two-qubit matrices use
// Kronecker order with the first operand as the high index bit.

#include <array>
#include <cmath>
#include <complex>

#include "bsfc/bsf.hpp"
#include "bsfc/pauli.hpp"

namespace bsfc::detail {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;
using Mat4 = std::array<cplx, 16>;

inline Mat2 pauli_matrix(Pauli p) {
  const cplx i{0.0, 1.0};
  switch (p) {
    case Pauli::I: return {1.0, 0.0, 0.0, 1.0};
    case Pauli::X: return {0.0, 1.0, 1.0, 0.0};
    case Pauli::Y: return {0.0, -i, i, 0.0};
    case Pauli::Z: return {1.0, 0.0, 0.0, -1.0};
  }
  return {};
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      m[r * 4 + c] = a[(r >> 1) * 2 + (c >> 1)] * b[(r & 1) * 2 + (c & 1)];
    }
  }
  return m;
}

inline Mat4 generator_matrix(GenKind kind) {
  const Mat2 s0 = pauli_matrix(control_axis(kind));
  const Mat2 s1 = pauli_matrix(target_axis(kind));
  const Mat2 id = pauli_matrix(Pauli::I);
  Mat2 plus{}, minus{};
  for (int k = 0; k < 4; ++k) {
    plus[k] = 0.5 * (id[k] + s0[k]);
    minus[k] = 0.5 * (id[k] - s0[k]);
  }
  const Mat4 left = kron(plus, id);
  const Mat4 right = kron(minus, s1);
  Mat4 m{};
  for (int k = 0; k < 16; ++k) m[k] = left[k] + right[k];
  return m;
}

/// exp(-i phi/2 * Pa (x) Pb).
inline Mat4 pauli_rotation_matrix(Pauli pa, Pauli pb, double phi) {
  const Mat4 p = kron(pauli_matrix(pa), pauli_matrix(pb));
  const double c = std::cos(phi / 2.0);
  const cplx ms{0.0, -std::sin(phi / 2.0)};
  Mat4 m{};
  for (int k = 0; k < 16; ++k) m[k] = ms * p[k];
  for (int d = 0; d < 4; ++d) m[d * 5] += c;
  return m;
}

}  // namespace bsfc::detail
