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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bsfc/bsf.hpp"
#include "bsfc/error.hpp"
#include "oracle.hpp"

namespace bsfc {
namespace {

IRGroup group_of(std::initializer_list<const char*> rows) {
  IRGroup g;
  int id = 0;
  for (const char* r : rows) g.terms.push_back(PauliTerm::from_string(r, 0.1 * (id + 1), id)), ++id;
  std::set<std::size_t> qs;
  for (const auto& t : g.terms)
    for (std::size_t q : t.support()) qs.insert(q);
  g.support.assign(qs.begin(), qs.end());
  return g;
}

TEST(Tableau, EncodesLetters) {
  auto t = build_tableau(group_of({"XX"}));
  EXPECT_TRUE(t.x(0, 0));
  EXPECT_TRUE(t.x(0, 1));
  EXPECT_FALSE(t.z(0, 0));
  EXPECT_FALSE(t.z(0, 1));

  auto y = build_tableau(group_of({"Y"}));
  EXPECT_TRUE(y.x(0, 0));
  EXPECT_TRUE(y.z(0, 0));
}

TEST(Tableau, ReindexesOntoSupport) {
  auto t = build_tableau(group_of({"IZIX", "IXIX"}));
  EXPECT_EQ(t.num_qubits(), 2u);
  EXPECT_EQ(t.qubit_map(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(t.letter(0, 0), Pauli::Z);
  EXPECT_EQ(t.letter(1, 1), Pauli::X);
}

// Conjugates P_a (x) P_b by the dense generator and reads back the image.
ConjugationTable::Entry dense_image(GenKind kind, Pauli a, Pauli b) {
  auto g = oracle::generator(control_axis(kind), target_axis(kind));
  auto in = oracle::kron(oracle::pauli(a), oracle::pauli(b));
  auto out = g * in * oracle::dagger(g);
  for (Pauli pa : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z})
    for (Pauli pb : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      auto cand = oracle::kron(oracle::pauli(pa), oracle::pauli(pb));
      if (oracle::max_diff(out, cand) < 1e-12) return {pa, pb, false};
      if (oracle::max_diff(out, oracle::scale(cand, -1.0)) < 1e-12) return {pa, pb, true};
    }
  ADD_FAILURE() << "image is not a signed Pauli";
  return {};
}

TEST(ConjugationTable, CnotImages) {
  const auto& t = conjugation_table(GenKind::ZX);
  EXPECT_EQ(t(Pauli::X, Pauli::X).a, Pauli::X);
  EXPECT_EQ(t(Pauli::X, Pauli::X).b, Pauli::I);
  EXPECT_FALSE(t(Pauli::X, Pauli::X).negative);
  EXPECT_EQ(t(Pauli::Z, Pauli::I).a, Pauli::Z);
  EXPECT_EQ(t(Pauli::Z, Pauli::I).b, Pauli::I);
  EXPECT_FALSE(t(Pauli::Z, Pauli::I).negative);
}

TEST(ConjugationTable, YYOnXYMatchesDense) {
  auto want = dense_image(GenKind::YY, Pauli::X, Pauli::Y);
  const auto& got = conjugation_table(GenKind::YY)(Pauli::X, Pauli::Y);
  EXPECT_EQ(got.a, want.a);
  EXPECT_EQ(got.b, want.b);
  EXPECT_EQ(got.negative, want.negative);
}

TEST(ConjugationTable, EveryEntryMatchesDense) {
  for (GenKind k : kGenKinds)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        auto pa = static_cast<Pauli>(a), pb = static_cast<Pauli>(b);
        auto want = dense_image(k, pa, pb);
        const auto& got = conjugation_table(k)(pa, pb);
        EXPECT_EQ(got.a, want.a) << gen_name(k) << " " << to_char(pa) << to_char(pb);
        EXPECT_EQ(got.b, want.b) << gen_name(k) << " " << to_char(pa) << to_char(pb);
        EXPECT_EQ(got.negative, want.negative) << gen_name(k) << " " << to_char(pa) << to_char(pb);
      }
}

BSFTableau random_tableau(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
  std::vector<std::size_t> map(n);
  for (std::size_t q = 0; q < n; ++q) map[q] = q;
  BSFTableau t(std::move(map));
  std::uniform_int_distribution<int> letter(0, 3);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Pauli> ls(n);
    do {
      for (auto& p : ls) p = static_cast<Pauli>(letter(rng));
    } while (std::all_of(ls.begin(), ls.end(), [](Pauli p) { return p == Pauli::I; }));
    t.push_row(ls, 0.1 * static_cast<double>(r), static_cast<int>(r), r, (rng() & 1u) != 0);
  }
  return t;
}

TEST(ApplyClifford, IsInvolution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = random_tableau(rng, 5, 7);
    Clifford2QGate g{kGenKinds[trial % 6], static_cast<std::size_t>(trial % 5),
                     static_cast<std::size_t>((trial + 2) % 5)};
    EXPECT_EQ(apply_clifford2q(apply_clifford2q(t, g), g), t);
  }
}

TEST(ApplyClifford, PreservesSymplecticProducts) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = random_tableau(rng, 4, 6);
    Clifford2QGate g{kGenKinds[trial % 6], 3, static_cast<std::size_t>(trial % 3)};
    auto u = apply_clifford2q(t, g);
    for (std::size_t i = 0; i < t.num_rows(); ++i)
      for (std::size_t j = 0; j < t.num_rows(); ++j)
        EXPECT_EQ(t.symplectic_product(i, j), u.symplectic_product(i, j));
  }
}

TEST(ApplyClifford, CnotDropsWeight) {
  auto t = apply_clifford2q(build_tableau(group_of({"XX"})), {GenKind::ZX, 0, 1});
  EXPECT_EQ(t.row_letters(0), (std::vector<Pauli>{Pauli::X, Pauli::I}));
}

TEST(ApplyClifford, RejectsBadOperands) {
  auto t = build_tableau(group_of({"XX"}));
  EXPECT_THROW(apply_clifford2q(t, {GenKind::ZX, 0, 0}), Error);
  EXPECT_THROW(apply_clifford2q(t, {GenKind::ZX, 0, 2}), Error);
}

TEST(TotalWeight, CountsOccupiedColumns) {
  EXPECT_EQ(total_weight(build_tableau(group_of({"ZYY", "ZZY", "XYY", "XZY"}))), 3u);
  EXPECT_EQ(total_weight(build_tableau(group_of({"XXI", "ZYI"}))), 2u);
  EXPECT_EQ(total_weight(BSFTableau{}), 0u);
}

TEST(PopLocalRows, Examples) {
  auto [locals, rest] = pop_local_rows(build_tableau(group_of({"XI", "XX"})));
  ASSERT_EQ(locals.size(), 1u);
  EXPECT_EQ(locals[0].qubit, 0u);
  EXPECT_EQ(locals[0].letter, Pauli::X);
  EXPECT_EQ(rest.num_rows(), 1u);

  auto full = build_tableau(group_of({"XX", "ZY"}));
  auto [none, same] = pop_local_rows(full);
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(same, full);

  auto [both, empty] = pop_local_rows(build_tableau(group_of({"Z", "Y"})));
  EXPECT_EQ(both.size(), 2u);
  EXPECT_TRUE(empty.empty());
}

TEST(CostBsf, HandValues) {
  EXPECT_DOUBLE_EQ(cost_bsf(build_tableau(group_of({"XX"}))), 2.0);
  EXPECT_DOUBLE_EQ(cost_bsf(build_tableau(group_of({"XX", "YY"}))), 12.0);
  EXPECT_DOUBLE_EQ(cost_bsf(BSFTableau{}), 0.0);
}

}  // namespace
}  // namespace bsfc
