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

// Textbook dense-matrix oracle for tests. Built from explicit Kronecker
// products and full matrix multiplication, independent of the library's
// row-update simulator and lookup tables.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bsfc/circuit.hpp"
#include "bsfc/pauli.hpp"

namespace oracle {

using cplx = std::complex<double>;

struct Mat {
  std::size_t dim = 0;
  std::vector<cplx> a;

  explicit Mat(std::size_t d = 0) : dim(d), a(d * d) {}
  cplx& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Mat identity(std::size_t d) {
  Mat m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

inline Mat operator*(const Mat& x, const Mat& y) {
  Mat m(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k)
      for (std::size_t j = 0; j < x.dim; ++j) m(i, j) += x(i, k) * y(k, j);
  return m;
}

inline Mat operator+(const Mat& x, const Mat& y) {
  Mat m(x.dim);
  for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
  return m;
}

inline Mat scale(const Mat& x, cplx s) {
  Mat m = x;
  for (auto& v : m.a) v *= s;
  return m;
}

inline Mat dagger(const Mat& x) {
  Mat m(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j) m(i, j) = std::conj(x(j, i));
  return m;
}

/// Kronecker product, first factor on the high index bits.
inline Mat kron(const Mat& x, const Mat& y) {
  Mat m(x.dim * y.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < y.dim; ++k)
        for (std::size_t l = 0; l < y.dim; ++l) m(i * y.dim + k, j * y.dim + l) = x(i, j) * y(k, l);
  return m;
}

inline Mat pauli(bsfc::Pauli p) {
  const cplx i{0.0, 1.0};
  Mat m(2);
  switch (p) {
    case bsfc::Pauli::I: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case bsfc::Pauli::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case bsfc::Pauli::Y: m(0, 1) = -i; m(1, 0) = i; break;
    case bsfc::Pauli::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
  }
  return m;
}

/// Qubit q is bit q of the basis index, so the last qubit is the first factor.
inline Mat pauli_string(const std::vector<bsfc::Pauli>& letters) {
  Mat m = identity(1);
  for (std::size_t q = letters.size(); q-- > 0;) m = kron(m, pauli(letters[q]));
  return m;
}

/// exp(-i theta P) = cos(theta) I - i sin(theta) P.
inline Mat pauli_exp(const std::vector<bsfc::Pauli>& letters, double theta) {
  const Mat p = pauli_string(letters);
  return scale(identity(p.dim), std::cos(theta)) + scale(p, cplx{0.0, -std::sin(theta)});
}

/// C(s0, s1) = 1/2 ((I + s0) (x) I + (I - s0) (x) s1), control on the high bit.
inline Mat generator(bsfc::Pauli s0, bsfc::Pauli s1) {
  const Mat id = identity(2);
  const Mat p = pauli(s0);
  return scale(kron(id + p, id) + kron(id + scale(p, -1.0), pauli(s1)), 0.5);
}

/// Places a 2x2 or 4x4 operator on the listed qubits of an n-qubit register.
/// For two qubits, ops[0] is the high bit of the small operator.
inline Mat embed(const Mat& op, const std::vector<std::size_t>& qs, std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  Mat m(d);
  std::size_t mask = 0;
  for (std::size_t q : qs) mask |= std::size_t{1} << q;
  auto local = [&](std::size_t idx) {
    std::size_t v = 0;
    for (std::size_t q : qs) v = (v << 1) | ((idx >> q) & 1u);
    return v;
  };
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if ((r & ~mask) == (c & ~mask)) m(r, c) = op(local(r), local(c));
  return m;
}

inline Mat gate_matrix(const bsfc::Gate& g, std::size_t n) {
  using bsfc::GateKind;
  using bsfc::Pauli;
  const cplx i{0.0, 1.0};
  const double r2 = 1.0 / std::sqrt(2.0);
  Mat m(2);
  switch (g.kind) {
    case GateKind::H: m(0, 0) = r2; m(0, 1) = r2; m(1, 0) = r2; m(1, 1) = -r2; break;
    case GateKind::S: m(0, 0) = 1.0; m(1, 1) = i; break;
    case GateKind::Sdg: m(0, 0) = 1.0; m(1, 1) = -i; break;
    case GateKind::RX: return embed(pauli_exp({Pauli::X}, g.angle / 2), {g.q[0]}, n);
    case GateKind::RY: return embed(pauli_exp({Pauli::Y}, g.angle / 2), {g.q[0]}, n);
    case GateKind::RZ: return embed(pauli_exp({Pauli::Z}, g.angle / 2), {g.q[0]}, n);
    case GateKind::CX: return embed(generator(Pauli::Z, Pauli::X), {g.q[0], g.q[1]}, n);
    case GateKind::Gen:
      return embed(generator(bsfc::control_axis(g.gen), bsfc::target_axis(g.gen)), {g.q[0], g.q[1]}, n);
    case GateKind::Swap: {
      Mat s(4);
      s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
      return embed(s, {g.q[0], g.q[1]}, n);
    }
    case GateKind::PauliRot2: {
      // Operand a is the high bit of the local operator, so it is letter 1.
      return embed(pauli_exp({g.axes[1], g.axes[0]}, g.angle / 2), {g.q[0], g.q[1]}, n);
    }
    case GateKind::SU4: {
      Mat u = identity(std::size_t{1} << n);
      for (const auto& inner : g.payload) u = gate_matrix(inner, n) * u;
      return u;
    }
  }
  return embed(m, {g.q[0]}, n);
}

inline Mat circuit_matrix(const bsfc::Circuit& c) {
  Mat u = identity(std::size_t{1} << c.n_qubits);
  for (const auto& g : c.gates) u = gate_matrix(g, c.n_qubits) * u;
  return u;
}

inline Mat product(const std::vector<bsfc::PauliTerm>& terms, std::size_t n) {
  Mat u = identity(std::size_t{1} << n);
  for (const auto& t : terms) u = pauli_exp(t.letters, t.coefficient) * u;
  return u;
}

inline double infidelity(const Mat& u, const Mat& v) {
  cplx tr = 0.0;
  for (std::size_t k = 0; k < u.a.size(); ++k) tr += std::conj(u.a[k]) * v.a[k];
  return 1.0 - std::abs(tr) / static_cast<double>(u.dim);
}

inline double max_diff(const Mat& u, const Mat& v) {
  double d = 0.0;
  for (std::size_t k = 0; k < u.a.size(); ++k) d = std::max(d, std::abs(u.a[k] - v.a[k]));
  return d;
}

}  // namespace oracle
