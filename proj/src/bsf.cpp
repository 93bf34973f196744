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

#include "bsfc/bsf.hpp"

#include <algorithm>
#include <bit>
#include <complex>

#include <fmt/format.h>

#include "bsfc/error.hpp"
#include "bsfc/kernels.hpp"
#include "small_matrix.hpp"

namespace bsfc {

Pauli control_axis(GenKind kind) {
  switch (kind) {
    case GenKind::XX: return Pauli::X;
    case GenKind::YY: return Pauli::Y;
    case GenKind::ZZ: return Pauli::Z;
    case GenKind::XY: return Pauli::X;
    case GenKind::YZ: return Pauli::Y;
    case GenKind::ZX: return Pauli::Z;
  }
  return Pauli::I;
}

Pauli target_axis(GenKind kind) {
  switch (kind) {
    case GenKind::XX: return Pauli::X;
    case GenKind::YY: return Pauli::Y;
    case GenKind::ZZ: return Pauli::Z;
    case GenKind::XY: return Pauli::Y;
    case GenKind::YZ: return Pauli::Z;
    case GenKind::ZX: return Pauli::X;
  }
  return Pauli::I;
}

bool is_symmetric(GenKind kind) {
  return kind == GenKind::XX || kind == GenKind::YY || kind == GenKind::ZZ;
}

std::string_view gen_name(GenKind kind) {
  switch (kind) {
    case GenKind::XX: return "xx";
    case GenKind::YY: return "yy";
    case GenKind::ZZ: return "zz";
    case GenKind::XY: return "xy";
    case GenKind::YZ: return "yz";
    case GenKind::ZX: return "zx";
  }
  return "??";
}

GenKind gen_from_name(std::string_view name) {
  for (GenKind k : kGenKinds) {
    if (gen_name(k) == name) return k;
  }
  throw Error(fmt::format("unknown generator '{}'", name));
}

namespace {

using detail::cplx;
using detail::kron;
using detail::Mat4;
using detail::pauli_matrix;

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 m{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[r * 4 + k] * b[k * 4 + c];
      m[r * 4 + c] = s;
    }
  }
  return m;
}

ConjugationTable::Entry identify(const Mat4& m) {
  constexpr std::array<Pauli, 4> letters = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
  for (Pauli a : letters) {
    for (Pauli b : letters) {
      const Mat4 p = kron(pauli_matrix(a), pauli_matrix(b));
      // Tr(P^dagger M) / 4; Pauli matrices are Hermitian.
      cplx overlap = 0.0;
      for (int k = 0; k < 16; ++k) overlap += std::conj(p[k]) * m[k];
      overlap /= 4.0;
      if (std::abs(overlap - 1.0) < 1e-12) return {a, b, false};
      if (std::abs(overlap + 1.0) < 1e-12) return {a, b, true};
    }
  }
  throw Error("conjugation did not produce a signed Pauli");
}

}  // namespace

const ConjugationTable& conjugation_table(GenKind kind) {
  static const std::array<ConjugationTable, 6> tables = [] {
    std::array<ConjugationTable, 6> out{};
    for (GenKind k : kGenKinds) {
      const Mat4 c = detail::generator_matrix(k);  // Hermitian, so C^dagger = C
      auto& table = out[static_cast<std::size_t>(k)];
      for (std::uint8_t a = 0; a < 4; ++a) {
        for (std::uint8_t b = 0; b < 4; ++b) {
          const Mat4 p = kron(pauli_matrix(static_cast<Pauli>(a)), pauli_matrix(static_cast<Pauli>(b)));
          table.entries_[a * 4 + b] = identify(mul(mul(c, p), c));
        }
      }
    }
    return out;
  }();
  return tables[static_cast<std::size_t>(kind)];
}

BSFTableau::BSFTableau(std::vector<std::size_t> qubit_map)
    : qubit_map_(std::move(qubit_map)), words_((qubit_map_.size() + 63) / 64) {}

BSFTableau BSFTableau::from_group(const IRGroup& group) {
  BSFTableau t(group.support);
  std::vector<Pauli> local(group.support.size());
  for (std::size_t r = 0; r < group.terms.size(); ++r) {
    const auto& term = group.terms[r];
    for (std::size_t c = 0; c < group.support.size(); ++c) local[c] = term.letters.at(group.support[c]);
    t.push_row(local, term.coefficient, term.origin_id, r);
  }
  return t;
}

void BSFTableau::push_row(std::span<const Pauli> local_letters, double angle, int origin_id,
                          std::size_t source, bool negative) {
  if (local_letters.size() != num_qubits()) {
    throw Error(fmt::format("row has {} letters, tableau has {} columns", local_letters.size(),
                            num_qubits()));
  }
  if (std::all_of(local_letters.begin(), local_letters.end(), [](Pauli p) { return p == Pauli::I; })) {
    throw Error("identity rows cannot be stored in a tableau");
  }
  const std::size_t row = num_rows();
  x_.resize(x_.size() + words_, 0);
  z_.resize(z_.size() + words_, 0);
  signs_.push_back(negative ? 1 : 0);
  angles_.push_back(angle);
  origins_.push_back(origin_id);
  sources_.push_back(source);
  for (std::size_t c = 0; c < local_letters.size(); ++c) set_letter(row, c, local_letters[c]);
}

bool BSFTableau::x(std::size_t row, std::size_t col) const {
  return ((x_[row * words_ + col / 64] >> (col % 64)) & 1u) != 0;
}

bool BSFTableau::z(std::size_t row, std::size_t col) const {
  return ((z_[row * words_ + col / 64] >> (col % 64)) & 1u) != 0;
}

Pauli BSFTableau::letter(std::size_t row, std::size_t col) const {
  return pauli_from_bits(x(row, col), z(row, col));
}

std::vector<Pauli> BSFTableau::row_letters(std::size_t row) const {
  std::vector<Pauli> out(num_qubits());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = letter(row, c);
  return out;
}

void BSFTableau::set_letter(std::size_t row, std::size_t col, Pauli p) {
  const std::uint64_t bit = std::uint64_t{1} << (col % 64);
  std::uint64_t& xw = x_[row * words_ + col / 64];
  std::uint64_t& zw = z_[row * words_ + col / 64];
  xw = x_bit(p) ? (xw | bit) : (xw & ~bit);
  zw = z_bit(p) ? (zw | bit) : (zw & ~bit);
}

std::size_t BSFTableau::row_weight(std::size_t row) const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < words_; ++k) {
    w += static_cast<std::size_t>(std::popcount(x_[row * words_ + k] | z_[row * words_ + k]));
  }
  return w;
}

std::size_t BSFTableau::weight_sum() const {
  std::size_t s = 0;
  for (std::size_t r = 0; r < num_rows(); ++r) s += row_weight(r);
  return s;
}

bool BSFTableau::symplectic_product(std::size_t r1, std::size_t r2) const {
  std::uint64_t parity = 0;
  for (std::size_t k = 0; k < words_; ++k) {
    parity ^= static_cast<std::uint64_t>(std::popcount((x_[r1 * words_ + k] & z_[r2 * words_ + k]) ^
                                                       (z_[r1 * words_ + k] & x_[r2 * words_ + k])));
  }
  return (parity & 1u) != 0;
}

void BSFTableau::apply(const Clifford2QGate& g) {
  if (g.a >= num_qubits() || g.b >= num_qubits()) {
    throw Error(fmt::format("generator on ({}, {}) is out of range for {} columns", g.a, g.b,
                            num_qubits()));
  }
  if (g.a == g.b) throw Error("generator operands must be distinct");
  const ConjugationTable& table = conjugation_table(g.kind);
  for (std::size_t r = 0; r < num_rows(); ++r) {
    const auto& e = table(letter(r, g.a), letter(r, g.b));
    set_letter(r, g.a, e.a);
    set_letter(r, g.b, e.b);
    signs_[r] ^= e.negative ? 1 : 0;
  }
}

std::vector<LocalRow> BSFTableau::pop_local_rows() {
  std::vector<LocalRow> locals;
  std::size_t keep = 0;
  for (std::size_t r = 0; r < num_rows(); ++r) {
    if (row_weight(r) == 1) {
      std::size_t col = 0;
      while (letter(r, col) == Pauli::I) ++col;
      locals.push_back(LocalRow{col, letter(r, col), angles_[r], signs_[r] != 0, origins_[r], sources_[r]});
      continue;
    }
    if (keep != r) {
      std::copy_n(x_.begin() + static_cast<std::ptrdiff_t>(r * words_), words_,
                  x_.begin() + static_cast<std::ptrdiff_t>(keep * words_));
      std::copy_n(z_.begin() + static_cast<std::ptrdiff_t>(r * words_), words_,
                  z_.begin() + static_cast<std::ptrdiff_t>(keep * words_));
      signs_[keep] = signs_[r];
      angles_[keep] = angles_[r];
      origins_[keep] = origins_[r];
      sources_[keep] = sources_[r];
    }
    ++keep;
  }
  x_.resize(keep * words_);
  z_.resize(keep * words_);
  signs_.resize(keep);
  angles_.resize(keep);
  origins_.resize(keep);
  sources_.resize(keep);
  return locals;
}

BSFTableau build_tableau(const IRGroup& group) { return BSFTableau::from_group(group); }

BSFTableau apply_clifford2q(BSFTableau t, const Clifford2QGate& g) {
  t.apply(g);
  return t;
}

std::size_t total_weight(const BSFTableau& t) {
  const std::size_t words = t.words_per_row();
  std::size_t w = 0;
  auto xs = t.x_words();
  auto zs = t.z_words();
  for (std::size_t k = 0; k < words; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < t.num_rows(); ++r) acc |= xs[r * words + k] | zs[r * words + k];
    w += static_cast<std::size_t>(std::popcount(acc));
  }
  return w;
}

std::pair<std::vector<LocalRow>, BSFTableau> pop_local_rows(BSFTableau t) {
  auto locals = t.pop_local_rows();
  return {std::move(locals), std::move(t)};
}

double cost_bsf(const BSFTableau& t) {
  if (t.empty()) return 0.0;
  std::size_t nonlocal = 0;
  for (std::size_t r = 0; r < t.num_rows(); ++r) nonlocal += t.row_weight(r) >= 2 ? 1 : 0;
  const auto sums = kernels::active().pair_overlap(t.x_words().data(), t.z_words().data(),
                                                   t.num_rows(), t.words_per_row());
  const double wtot = static_cast<double>(total_weight(t));
  const double nnl = static_cast<double>(nonlocal);
  return wtot * nnl * nnl + static_cast<double>(sums.any) +
         0.5 * static_cast<double>(sums.x + sums.z);
}

}  // namespace bsfc
