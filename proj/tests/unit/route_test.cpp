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
#include <sstream>

#include "bsfc/error.hpp"
#include "bsfc/route.hpp"
#include "oracle.hpp"

namespace bsfc {
namespace {

void expect_heavy_hex_shape(const CouplingGraph& g) {
  for (std::size_t v = 0; v < g.num_qubits(); ++v) {
    EXPECT_GE(g.degree(v), 1u);
    EXPECT_LE(g.degree(v), 3u);
    EXPECT_FALSE(g.adjacent(v, v));
  }
}

TEST(HeavyHex, SmallestCell) {
  auto g = heavy_hex(1, 1);
  expect_heavy_hex_shape(g);
  EXPECT_EQ(g.num_qubits(), 14u);
}

TEST(HeavyHex, ManhattanSize) {
  auto g = heavy_hex(4, 2);
  EXPECT_EQ(g.num_qubits(), 65u);
  expect_heavy_hex_shape(g);
  std::size_t deg3 = 0;
  for (std::size_t v = 0; v < g.num_qubits(); ++v) deg3 += g.degree(v) == 3 ? 1 : 0;
  EXPECT_GT(deg3, 0u);
}

TEST(Coupling, ParsesPath) {
  std::istringstream in("3\n0 1\n1 2\n");
  auto g = parse_coupling(in);
  EXPECT_EQ(g.num_qubits(), 3u);
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.distance(0, 2), 2u);
  EXPECT_EQ(g.step_towards(0, 2), 1u);
}

TEST(Coupling, Errors) {
  std::istringstream loop("2\n0 0\n0 1\n");
  EXPECT_THROW(parse_coupling(loop), Error);
  std::istringstream split("4\n0 1\n2 3\n");
  try {
    parse_coupling(split);
    FAIL() << "disconnected graph accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("{2,3}"), std::string::npos) << e.what();
  }
  std::vector<std::string> warnings;
  std::istringstream dup("2\n0 1\n1 0\n");
  EXPECT_EQ(parse_coupling(dup, &warnings).edges().size(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Layout, Inverse) {
  Layout l{2, 0, 1};
  EXPECT_EQ(inverse_layout(l), (Layout{1, 2, 0}));
  EXPECT_EQ(trivial_layout(3), (Layout{0, 1, 2}));
}

TEST(Sabre, ConformingCircuitUnchanged) {
  Circuit c(3);
  c.push(Gate::cx(0, 1));
  c.push(Gate::rz(1, 0.2));
  c.push(Gate::cx(2, 1));
  auto r = sabre_route(c, line_graph(3), {}, trivial_layout(3));
  EXPECT_EQ(r.swap_count, 0u);
  EXPECT_EQ(r.circuit, c);
}

TEST(Sabre, DistanceTwoNeedsOneSwap) {
  Circuit c(3);
  c.push(Gate::cx(0, 2));
  auto r = sabre_route(c, line_graph(3), {}, trivial_layout(3));
  EXPECT_EQ(r.swap_count, 1u);
  EXPECT_TRUE(respects_coupling(r.circuit, line_graph(3)));
}

// Permutation matrix sending logical basis states to physical ones.
oracle::Mat placement(const Layout& l) {
  const std::size_t dim = std::size_t{1} << l.size();
  oracle::Mat m(dim);
  for (std::size_t in = 0; in < dim; ++in) {
    std::size_t out = 0;
    for (std::size_t q = 0; q < l.size(); ++q)
      if ((in >> q) & 1u) out |= std::size_t{1} << l[q];
    m(out, in) = 1.0;
  }
  return m;
}

TEST(Sabre, RoutedCircuitsAreEquivalent) {
  std::mt19937_64 rng(8);
  const auto p5 = line_graph(5);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(5);
    for (int k = 0; k < 12; ++k) {
      std::size_t a = rng() % 5, b = (a + 1 + rng() % 4) % 5;
      if (k % 3 == 0) c.push(Gate::ry(a, 0.3 * k));
      else c.push(Gate::cx(a, b));
    }
    RouterConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    cfg.reverse_traversal = trial % 2 == 1;
    auto r = sabre_route(c, p5, cfg);
    ASSERT_TRUE(respects_coupling(r.circuit, p5));
    auto lhs = oracle::circuit_matrix(r.circuit) * placement(r.initial);
    auto rhs = placement(r.final) * oracle::circuit_matrix(c);
    EXPECT_LT(oracle::infidelity(lhs, rhs), 1e-12) << "trial " << trial;
  }
}

TEST(Sabre, Deterministic) {
  Circuit c(6);
  for (std::size_t k = 0; k < 6; ++k) c.push(Gate::cx(k, (k + 3) % 6));
  RouterConfig cfg;
  cfg.seed = 4;
  EXPECT_EQ(sabre_route(c, line_graph(6), cfg).circuit, sabre_route(c, line_graph(6), cfg).circuit);
}

TEST(DecomposeSwap, ThreeCnots) {
  Circuit c(2);
  c.push(Gate::swap(0, 1));
  auto d = decompose_swap(c);
  EXPECT_EQ(count_kind(d, GateKind::CX), 3u);
  EXPECT_EQ(count_kind(d, GateKind::Swap), 0u);
  EXPECT_LT(oracle::max_diff(oracle::circuit_matrix(c), oracle::circuit_matrix(d)), 1e-15);

  Circuit plain(2);
  plain.push(Gate::cx(0, 1));
  EXPECT_EQ(decompose_swap(plain), plain);
}

}  // namespace
}  // namespace bsfc
