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

#include <sstream>

#include "bsfc/error.hpp"
#include "bsfc/pauli.hpp"

namespace bsfc {
namespace {

TEST(ParseTerm, ReadsCoefficientAndLetters) {
  auto t = parse_term("0.5 ZYY", 3, 1, 7);
  ASSERT_TRUE(t.has_value());
  EXPECT_DOUBLE_EQ(t->coefficient, 0.5);
  EXPECT_EQ(t->letters_string(), "ZYY");
  EXPECT_EQ(t->weight(), 3u);
  EXPECT_EQ(t->origin_id, 7);
}

TEST(ParseTerm, DropsIdentityWithWarning) {
  std::vector<std::string> warnings;
  auto t = parse_term("1.0 III", 3, 4, 0, &warnings);
  EXPECT_FALSE(t.has_value());
  ASSERT_EQ(warnings.size(), 1u);
}

TEST(ParseTerm, RejectsLengthMismatch) {
  EXPECT_THROW(parse_term("0.25 XZ", 3, 2, 0), Error);
}

TEST(ParseProgram, RoundTrips) {
  std::istringstream in("qubits 3\n0.1 ZYY\n# comment\n0.2 ZZY\n");
  auto p = parse_program(in);
  ASSERT_EQ(p.n_qubits, 3u);
  ASSERT_EQ(p.terms.size(), 2u);
  std::ostringstream out;
  write_program(out, p);
  std::istringstream again(out.str());
  auto q = parse_program(again);
  ASSERT_EQ(q.terms.size(), 2u);
  EXPECT_EQ(q.terms[1].letters_string(), "ZZY");
  EXPECT_DOUBLE_EQ(q.terms[1].coefficient, 0.2);
}

HamiltonianProgram two_terms() {
  HamiltonianProgram p;
  p.n_qubits = 2;
  p.terms = {PauliTerm::from_string("XX", 0.3, 0), PauliTerm::from_string("ZI", 0.7, 1)};
  return p;
}

TEST(Trotterize, FirstOrderRepeatsSteps) {
  auto out = trotterize(two_terms(), TrotterConfig{1, 2, 2.0});
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].origin_id, 0);
  EXPECT_EQ(out[1].origin_id, 1);
  EXPECT_EQ(out[2].origin_id, 0);
  EXPECT_EQ(out[3].origin_id, 1);
  EXPECT_DOUBLE_EQ(out[2].coefficient, 0.3);
  EXPECT_DOUBLE_EQ(out[3].coefficient, 0.7);
}

TEST(Trotterize, SecondOrderIsPalindrome) {
  auto out = trotterize(two_terms(), TrotterConfig{2, 1, 1.0});
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].origin_id, 0);
  EXPECT_EQ(out[1].origin_id, 1);
  EXPECT_EQ(out[2].origin_id, 1);
  EXPECT_EQ(out[3].origin_id, 0);
  EXPECT_DOUBLE_EQ(out[0].coefficient, 0.15);
  EXPECT_DOUBLE_EQ(out[3].coefficient, 0.15);
}

TEST(Trotterize, EmptyProgram) {
  HamiltonianProgram p;
  p.n_qubits = 2;
  EXPECT_TRUE(trotterize(p, TrotterConfig{}).empty());
}

TEST(Trotterize, RejectsBadConfig) {
  EXPECT_THROW(trotterize(two_terms(), TrotterConfig{3, 1, 1.0}), Error);
  EXPECT_THROW(trotterize(two_terms(), TrotterConfig{1, 0, 1.0}), Error);
}

TEST(TrotterOptions, Parses) {
  auto cfg = parse_trotter_options("order=2,steps=4,t=0.5");
  EXPECT_EQ(cfg.order, 2);
  EXPECT_EQ(cfg.steps, 4);
  EXPECT_DOUBLE_EQ(cfg.total_time, 0.5);
}

TEST(GroupBySupport, PartitionsBySupport) {
  std::vector<PauliTerm> terms = {PauliTerm::from_string("XXI", 1, 0),
                                  PauliTerm::from_string("YYI", 1, 1),
                                  PauliTerm::from_string("IXZ", 1, 2)};
  auto groups = group_by_support(terms);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].support, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(groups[0].terms.size(), 2u);
  EXPECT_EQ(groups[1].support, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(groups[1].terms.size(), 1u);
}

TEST(GroupBySupport, SharedSupportIsOneGroup) {
  std::vector<PauliTerm> terms;
  for (const char* s : {"ZYY", "ZZY", "XYY", "XZY"}) terms.push_back(PauliTerm::from_string(s, 1));
  auto groups = group_by_support(terms);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].terms.size(), 4u);
  EXPECT_TRUE(group_by_support({}).empty());
}

}  // namespace
}  // namespace bsfc
