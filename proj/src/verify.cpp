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

#include "bsfc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "bsfc/error.hpp"
#include "bsfc/kernels.hpp"
#include "small_matrix.hpp"

namespace bsfc {

using cplx = std::complex<double>;

DenseUnitary::DenseUnitary(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits > kMaxQubits) {
    throw Error(fmt::format("dense unitaries are capped at {} qubits, got {}", kMaxQubits, n_qubits));
  }
  dim_ = std::size_t{1} << n_qubits;
  data_.assign(dim_ * dim_, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < dim_; ++k) data_[k * dim_ + k] = 1.0;
}

void DenseUnitary::apply_1q(std::size_t q, const cplx* m) {
  const std::size_t bit = std::size_t{1} << q;
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i & bit) continue;
    k.mix_rows(row(i), row(i | bit), dim_, m);
  }
}

void DenseUnitary::apply_2q(std::size_t a, std::size_t b, const cplx* m) {
  const std::size_t abit = std::size_t{1} << a;
  const std::size_t bbit = std::size_t{1} << b;
  std::vector<cplx> tmp(4 * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i & (abit | bbit)) continue;
    const std::size_t idx[4] = {i, i | bbit, i | abit, i | abit | bbit};
    for (int r = 0; r < 4; ++r) {
      cplx* out = tmp.data() + static_cast<std::size_t>(r) * dim_;
      std::fill(out, out + dim_, cplx{0.0, 0.0});
      for (int c = 0; c < 4; ++c) {
        const cplx w = m[r * 4 + c];
        if (w == cplx{0.0, 0.0}) continue;
        const cplx* src = row(idx[c]);
        for (std::size_t k = 0; k < dim_; ++k) out[k] += w * src[k];
      }
    }
    for (int r = 0; r < 4; ++r) {
      std::copy_n(tmp.data() + static_cast<std::size_t>(r) * dim_, dim_, row(idx[r]));
    }
  }
}

void DenseUnitary::apply(const Gate& g) {
  const cplx i{0.0, 1.0};
  const double r2 = 1.0 / std::numbers::sqrt2;
  for (std::size_t k = 0; k < g.arity(); ++k) {
    if (g.q[k] >= n_) throw Error(fmt::format("gate qubit {} outside a {}-qubit unitary", g.q[k], n_));
  }
  switch (g.kind) {
    case GateKind::H: {
      const cplx m[4] = {r2, r2, r2, -r2};
      apply_1q(g.q[0], m);
      break;
    }
    case GateKind::S: {
      const cplx m[4] = {1.0, 0.0, 0.0, i};
      apply_1q(g.q[0], m);
      break;
    }
    case GateKind::Sdg: {
      const cplx m[4] = {1.0, 0.0, 0.0, -i};
      apply_1q(g.q[0], m);
      break;
    }
    case GateKind::RX: {
      const double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
      const cplx m[4] = {c, -i * s, -i * s, c};
      apply_1q(g.q[0], m);
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
      const cplx m[4] = {c, -s, s, c};
      apply_1q(g.q[0], m);
      break;
    }
    case GateKind::RZ: {
      const cplx m[4] = {std::exp(-i * (g.angle / 2.0)), 0.0, 0.0, std::exp(i * (g.angle / 2.0))};
      apply_1q(g.q[0], m);
      break;
    }
    case GateKind::CX: {
      const std::size_t cbit = std::size_t{1} << g.q[0];
      const std::size_t tbit = std::size_t{1} << g.q[1];
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((k & cbit) && !(k & tbit)) std::swap_ranges(row(k), row(k) + dim_, row(k | tbit));
      }
      break;
    }
    case GateKind::Swap: {
      const std::size_t abit = std::size_t{1} << g.q[0];
      const std::size_t bbit = std::size_t{1} << g.q[1];
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((k & abit) && !(k & bbit)) std::swap_ranges(row(k), row(k) + dim_, row(k ^ abit ^ bbit));
      }
      break;
    }
    case GateKind::Gen: {
      const auto m = detail::generator_matrix(g.gen);
      apply_2q(g.q[0], g.q[1], m.data());
      break;
    }
    case GateKind::PauliRot2: {
      const auto m = detail::pauli_rotation_matrix(g.axes[0], g.axes[1], g.angle);
      apply_2q(g.q[0], g.q[1], m.data());
      break;
    }
    case GateKind::SU4:
      for (const auto& inner : g.payload) {
        if (!inner.touches(g.q[0]) && !inner.touches(g.q[1])) {
          throw Error("SU4 payload gate acts outside its block");
        }
        apply(inner);
      }
      break;
  }
}

void DenseUnitary::apply_pauli_exp(std::span<const Pauli> letters, double theta) {
  if (letters.size() != n_) throw Error("Pauli string width does not match the unitary");
  std::size_t xmask = 0, zmask = 0, n_y = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    if (x_bit(letters[q])) xmask |= std::size_t{1} << q;
    if (z_bit(letters[q])) zmask |= std::size_t{1} << q;
    if (letters[q] == Pauli::Y) ++n_y;
  }
  const cplx i{0.0, 1.0};
  const cplx y_phase = std::pow(i, static_cast<int>(n_y % 4));
  const double c = std::cos(theta);
  const cplx ms = -i * std::sin(theta);
  // P|j> = phase(j) |j ^ xmask>, phase(j) = i^{#Y} (-1)^{popcount(j & zmask)}.
  auto phase = [&](std::size_t j) {
    return (std::popcount(j & zmask) & 1) ? -y_phase : y_phase;
  };
  const auto& k = kernels::active();
  if (xmask == 0) {
    for (std::size_t j = 0; j < dim_; ++j) k.scale_row(row(j), dim_, c + ms * phase(j));
    return;
  }
  for (std::size_t j = 0; j < dim_; ++j) {
    const std::size_t partner = j ^ xmask;
    if (partner < j) continue;
    const cplx m[4] = {c, ms * phase(partner), ms * phase(j), c};
    k.mix_rows(row(j), row(partner), dim_, m);
  }
}

double DenseUnitary::unitarity_error() const {
  double worst = 0.0;
  const auto& k = kernels::active();
  // (U^dagger U)_{ij} = sum_r conj(U_ri) U_rj: use columns via a transpose copy.
  std::vector<cplx> cols(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) cols[c * dim_ + r] = data_[r * dim_ + c];
  }
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      cplx v = k.conj_dot(cols.data() + a * dim_, cols.data() + b * dim_, dim_);
      if (a == b) v -= 1.0;
      worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary& rhs) const {
  if (dim_ != rhs.dim_) throw Error("dimension mismatch in unitary product");
  DenseUnitary out(n_);
  std::fill(out.data_.begin(), out.data_.end(), cplx{0.0, 0.0});
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t m = 0; m < dim_; ++m) {
      const cplx a = (*this)(r, m);
      if (a == cplx{0.0, 0.0}) continue;
      const cplx* src = rhs.row(m);
      cplx* dst = out.row(r);
      for (std::size_t c = 0; c < dim_; ++c) dst[c] += a * src[c];
    }
  }
  return out;
}

DenseUnitary unitary_of(const Circuit& c) {
  DenseUnitary u(c.n_qubits);
  for (const auto& g : c.gates) u.apply(g);
  return u;
}

DenseUnitary pauli_exp_product(std::span<const PauliTerm> terms, std::size_t n_qubits) {
  DenseUnitary u(n_qubits);
  for (const auto& t : terms) u.apply_pauli_exp(t.letters, t.coefficient);
  return u;
}

DenseUnitary exact_evolution(const HamiltonianProgram& h, double t) {
  if (h.n_qubits > 10) throw Error("exact evolution is capped at 10 qubits");
  const std::size_t dim = std::size_t{1} << h.n_qubits;
  // Build H by applying each Pauli to the identity.
  Eigen::MatrixXcd ham = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& term : h.terms) {
    std::size_t xmask = 0, zmask = 0, n_y = 0;
    for (std::size_t q = 0; q < h.n_qubits; ++q) {
      if (x_bit(term.letters[q])) xmask |= std::size_t{1} << q;
      if (z_bit(term.letters[q])) zmask |= std::size_t{1} << q;
      if (term.letters[q] == Pauli::Y) ++n_y;
    }
    const cplx y_phase = std::pow(cplx{0.0, 1.0}, static_cast<int>(n_y % 4));
    for (std::size_t j = 0; j < dim; ++j) {
      const cplx ph = (std::popcount(j & zmask) & 1) ? -y_phase : y_phase;
      ham(static_cast<Eigen::Index>(j ^ xmask), static_cast<Eigen::Index>(j)) += term.coefficient * ph;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(ham);
  if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const Eigen::MatrixXcd& vecs = solver.eigenvectors();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) phases[k] = std::exp(cplx{0.0, -t * evals[k]});
  const Eigen::MatrixXcd u = vecs * phases.asDiagonal() * vecs.adjoint();

  DenseUnitary out(h.n_qubits);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  return out;
}

double infidelity(const DenseUnitary& u, const DenseUnitary& v) {
  if (u.dim() != v.dim()) {
    throw Error(fmt::format("infidelity of {}- and {}-dimensional matrices", u.dim(), v.dim()));
  }
  const cplx tr = kernels::active().conj_dot(u.data().data(), v.data().data(), u.data().size());
  return 1.0 - std::abs(tr) / static_cast<double>(u.dim());
}

DenseUnitary embed_with_layouts(const DenseUnitary& logical, std::size_t n_physical,
                                std::span<const std::size_t> initial,
                                std::span<const std::size_t> final) {
  if (initial.size() != n_physical || final.size() != n_physical) {
    throw Error("layouts must be permutations of the physical register");
  }
  const std::size_t n_log = logical.num_qubits();
  if (n_log > n_physical) throw Error("logical register wider than the physical one");
  DenseUnitary out(n_physical);
  const std::size_t dim = out.dim();
  const std::size_t log_mask = (std::size_t{1} << n_log) - 1;
  // virtual basis index -> physical basis index
  auto place = [n_physical](std::span<const std::size_t> layout, std::size_t v) {
    std::size_t p = 0;
    for (std::size_t q = 0; q < n_physical; ++q) {
      if ((v >> q) & 1u) p |= std::size_t{1} << layout[q];
    }
    return p;
  };
  for (std::size_t r = 0; r < dim; ++r) std::fill(out.row(r), out.row(r) + dim, cplx{0.0, 0.0});
  for (std::size_t vin = 0; vin < dim; ++vin) {
    const std::size_t pin = place(initial, vin);
    const std::size_t idle = vin & ~log_mask;
    for (std::size_t lout = 0; lout <= log_mask; ++lout) {
      const cplx a = logical(lout, vin & log_mask);
      if (a == cplx{0.0, 0.0}) continue;
      out(place(final, idle | lout), pin) = a;
    }
  }
  return out;
}

double routed_infidelity(const Circuit& physical, std::span<const std::size_t> initial,
                         std::span<const std::size_t> final, const DenseUnitary& logical) {
  const std::size_t n_phys = physical.n_qubits;
  const std::size_t n_log = logical.num_qubits();
  if (initial.size() != n_phys || final.size() != n_phys) {
    throw Error("layouts must be permutations of the physical register");
  }
  std::vector<bool> keep(n_phys, false);
  for (const auto& g : physical.gates) {
    for (std::size_t k = 0; k < g.arity(); ++k) keep[g.q[k]] = true;
  }
  for (std::size_t v = 0; v < n_log; ++v) keep[initial[v]] = keep[final[v]] = true;

  // Virtual qubits on kept physical qubits: logical ones first, in order.
  std::vector<std::size_t> phys_index(n_phys, n_phys);
  std::size_t m = 0;
  for (std::size_t p = 0; p < n_phys; ++p) {
    if (keep[p]) phys_index[p] = m++;
  }
  std::vector<std::size_t> virtuals;
  for (std::size_t v = 0; v < n_phys; ++v) {
    if (v < n_log || keep[initial[v]]) virtuals.push_back(v);
  }
  if (virtuals.size() != m) throw Error("routed register does not close over its qubits");
  std::vector<std::size_t> init_c(m), final_c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t v = virtuals[i];
    if (!keep[final[v]]) throw Error("a virtual qubit left the simulated register");
    init_c[i] = phys_index[initial[v]];
    final_c[i] = phys_index[final[v]];
  }
  Circuit compact = remap_qubits(physical, phys_index, m);
  return infidelity(unitary_of(compact), embed_with_layouts(logical, m, init_c, final_c));
}

}  // namespace bsfc
