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

// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run everything, exit 1 if anything fails
//   acceptance 3 7        run only criteria 3 and 7

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bsfc/bench.hpp"
#include "bsfc/bsf.hpp"
#include "bsfc/compiler.hpp"
#include "bsfc/report.hpp"
#include "bsfc/route.hpp"
#include "bsfc/simplify.hpp"
#include "bsfc/synthesize.hpp"
#include "bsfc/verify.hpp"
#include "oracle.hpp"

namespace {

using namespace bsfc;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

Pauli random_letter(std::mt19937_64& rng) { return static_cast<Pauli>(1 + uniform_index(rng, 3)); }

HamiltonianProgram parse_text(const std::string& text) {
  std::istringstream is(text);
  return parse_program(is);
}

// Terms in a group of the given support with random non-identity letters.
IRGroup random_group(std::mt19937_64& rng, std::size_t n, std::size_t w, std::size_t terms) {
  std::vector<std::size_t> qs(n);
  for (std::size_t i = 0; i < n; ++i) qs[i] = i;
  for (std::size_t i = 0; i < w; ++i) std::swap(qs[i], qs[i + uniform_index(rng, n - i)]);
  IRGroup g;
  g.support.assign(qs.begin(), qs.begin() + static_cast<std::ptrdiff_t>(w));
  std::sort(g.support.begin(), g.support.end());
  for (std::size_t t = 0; t < terms; ++t) {
    PauliTerm term;
    term.letters.assign(n, Pauli::I);
    for (std::size_t q : g.support) term.letters[q] = random_letter(rng);
    term.coefficient = uniform_real(rng, -std::numbers::pi, std::numbers::pi);
    term.origin_id = static_cast<int>(t);
    g.terms.push_back(std::move(term));
  }
  return g;
}

// Heterogeneous-weight suite shared by the reduction and SU4 criteria.
std::vector<HamiltonianProgram> reduction_suite() {
  std::vector<HamiltonianProgram> out;
  for (std::uint64_t s = 0; s < 20; ++s) {
    RandomProgramConfig rc;
    rc.n_qubits = 8 + s % 3;
    rc.min_weight = 3;
    rc.max_weight = 6;
    rc.terms_per_support = 4 + s % 3;
    rc.n_terms = rc.terms_per_support * (4 + s % 4);
    rc.seed = 500 + s;
    out.push_back(random_program(rc));
  }
  return out;
}

std::size_t naive_cnots(const HamiltonianProgram& p) {
  return count_kind(peephole(naive_synthesis(p.terms, p.n_qubits)), GateKind::CX);
}

Outcome tableau_regression() {
  const auto p = parse_text("qubits 3\n0.1 ZYY\n0.2 ZZY\n0.3 XYY\n0.4 XZY\n");
  const auto groups = group_by_support(p.terms);
  BSFTableau t = build_tableau(groups.at(0));
  const std::size_t before = total_weight(t);
  t.apply(Clifford2QGate{GenKind::XY, 1, 2});
  // Right-hand tableau, rows [x0 x1 x2 | z0 z1 z2].
  const int expect[4][6] = {{0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 0}, {1, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0}};
  std::size_t mismatches = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      mismatches += t.x(r, c) != (expect[r][c] != 0);
      mismatches += t.z(r, c) != (expect[r][3 + c] != 0);
    }
  }
  const std::size_t after = total_weight(t);
  return {mismatches == 0 && before == 3 && after == 2,
          fmt::format("{} bit mismatches, total weight {} -> {}", mismatches, before, after)};
}

Outcome conjugation_oracle() {
  std::size_t matrix_ok = 0, matrix_total = 0;
  for (GenKind k : kGenKinds) {
    const auto c = oracle::generator(control_axis(k), target_axis(k));
    const auto& table = conjugation_table(k);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const Pauli pa = static_cast<Pauli>(a), pb = static_cast<Pauli>(b);
        // Control is the high bit: letters vector is {target, control}.
        const auto lhs = c * oracle::pauli_string({pb, pa}) * oracle::dagger(c);
        const auto& e = table(pa, pb);
        const auto rhs = oracle::scale(oracle::pauli_string({e.b, e.a}), e.negative ? -1.0 : 1.0);
        ++matrix_total;
        matrix_ok += oracle::max_diff(lhs, rhs) < 1e-12;
      }
    }
  }
  // Closed-form C(X,Y) rule as published:
  //   [x_a, x_b | z_a, z_b] -> [x_a^x_b^z_b, z_a^z_b | z_a, z_a^z_b].
  const auto& xy = conjugation_table(GenKind::XY);
  std::size_t rule_ok = 0;
  for (int bits = 0; bits < 16; ++bits) {
    const bool xa = bits & 1, xb = bits & 2, za = bits & 4, zb = bits & 8;
    const auto& e = xy(pauli_from_bits(xa, za), pauli_from_bits(xb, zb));
    const bool ok = x_bit(e.a) == (xa ^ xb ^ zb) && x_bit(e.b) == (za ^ zb) && z_bit(e.a) == za &&
                    z_bit(e.b) == (za ^ zb);
    rule_ok += ok;
  }
  return {matrix_ok == matrix_total && rule_ok == 16,
          fmt::format("{}/{} table entries match matrix conjugation; closed-form C(X,Y) bit rule "
                      "matches {}/16 patterns (the rule maps X on either qubit to the same row, so "
                      "no unitary satisfies it)",
                      matrix_ok, matrix_total, rule_ok)};
}

Outcome group_equivalence() {
  std::mt19937_64 rng(20240);
  double worst = 0.0;
  std::size_t bad_schedule = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + uniform_index(rng, 5);
    const std::size_t w = 1 + uniform_index(rng, n);
    const std::size_t terms = 1 + uniform_index(rng, 8);
    const IRGroup g = random_group(rng, n, w, terms);
    const CompiledGroup cg = compile_group(g, n);
    std::multiset<int> want, got;
    for (const auto& t : g.terms) want.insert(t.origin_id);
    for (const auto& t : cg.schedule) got.insert(t.origin_id);
    bad_schedule += want != got;
    const Circuit c = lower(cg.circuit, Isa::Cnot);
    worst = std::max(worst, infidelity(unitary_of(c), pauli_exp_product(cg.schedule, n)));
  }
  return {worst < 1e-9 && bad_schedule == 0,
          fmt::format("200 groups, worst infidelity {:.2e}, {} schedules not a permutation", worst,
                      bad_schedule)};
}

Outcome motivating_example() {
  const auto p = parse_text("qubits 3\n0.1 ZYY\n0.2 ZZY\n0.3 XYY\n0.4 XZY\n");
  const std::size_t naive_raw = count_kind(naive_synthesis(p.terms, 3), GateKind::CX);
  const std::size_t naive = naive_cnots(p);
  const std::size_t ours = count_kind(compile_program(p, {}).circuit, GateKind::CX);
  return {naive_raw == 16 && ours < naive && ours <= 12,
          fmt::format("naive {} CNOTs ({} after peephole), compiled {}", naive_raw, naive, ours)};
}

Outcome aggregate_reduction() {
  double sum = 0.0, worst = 0.0;
  const auto suite = reduction_suite();
  for (const auto& p : suite) {
    const double r = static_cast<double>(count_kind(compile_program(p, {}).circuit, GateKind::CX)) /
                     static_cast<double>(naive_cnots(p));
    sum += r;
    worst = std::max(worst, r);
  }
  const double mean = sum / static_cast<double>(suite.size());
  return {mean <= 0.75 && worst <= 1.0,
          fmt::format("{} cases, mean CNOT ratio {:.3f}, worst {:.3f}", suite.size(), mean, worst)};
}

Outcome su4_isa() {
  std::size_t violations = 0;
  for (const auto& p : reduction_suite()) {
    CompileOptions su4;
    su4.isa = Isa::SU4;
    const auto n_su4 = count_kind(compile_program(p, su4).circuit, GateKind::SU4);
    const auto n_cx = count_kind(compile_program(p, {}).circuit, GateKind::CX);
    violations += n_su4 > n_cx;
  }
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    RandomProgramConfig rc;
    rc.n_qubits = 4 + s % 3;
    rc.min_weight = 2;
    rc.max_weight = rc.n_qubits;
    rc.terms_per_support = 4;
    rc.n_terms = 16;
    rc.seed = 900 + s;
    const auto p = random_program(rc);
    CompileOptions su4;
    su4.isa = Isa::SU4;
    const auto a = compile_program(p, su4).circuit;
    const auto b = compile_program(p, {}).circuit;
    worst = std::max(worst, infidelity(unitary_of(expand_su4(a)), unitary_of(b)));
  }
  return {violations == 0 && worst < 1e-9,
          fmt::format("{} suite cases with n_su4 > n_cnot; 10 small cases, worst infidelity {:.2e}",
                      violations, worst)};
}

Outcome ordering_quality() {
  std::size_t ok = 0;
  double sum_t = 0.0, sum_f = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    RandomProgramConfig rc;
    rc.n_qubits = 8;
    rc.min_weight = rc.max_weight = 3;
    rc.terms_per_support = 2;
    rc.n_terms = 24;
    rc.seed = 1000 + s;
    const auto p = random_program(rc);
    const auto tetris = depth_2q(compile_program(p, {}).circuit);
    Circuit first(p.n_qubits);
    for (const auto& g : group_by_support(p.terms)) first.append(compile_group(g, p.n_qubits).circuit);
    const auto baseline = depth_2q(lower(peephole(first), Isa::Cnot));
    ok += tetris <= baseline;
    sum_t += static_cast<double>(tetris);
    sum_f += static_cast<double>(baseline);
  }
  std::size_t worst_qaoa = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    CompileOptions o;
    o.isa = Isa::SU4;
    worst_qaoa = std::max(worst_qaoa, depth_2q(compile_program(qaoa_program(QaoaGraph::Reg3, 16, s), o).circuit));
  }
  return {ok == 50 && worst_qaoa <= 5,
          fmt::format("{}/50 programs no deeper than first-appearance order (mean {:.1f} vs {:.1f}); "
                      "QAOA Reg3-16 worst depth {} over 10 graphs",
                      ok, sum_t / 50, sum_f / 50, worst_qaoa)};
}

Outcome routing() {
  const CouplingGraph hh = heavy_hex(4, 2);
  std::size_t illegal = 0, swap_mismatch = 0, total_swaps = 0;
  double worst = 0.0;
  std::vector<HamiltonianProgram> programs;
  for (std::uint64_t s = 0; s < 10; ++s) {
    RandomProgramConfig rc;
    rc.n_qubits = 4 + s % 3;
    rc.min_weight = 2;
    rc.max_weight = rc.n_qubits;
    rc.terms_per_support = 3;
    rc.n_terms = 12;
    rc.seed = 700 + s;
    programs.push_back(random_program(rc));
  }
  for (std::uint64_t s = 0; s < 3; ++s) programs.push_back(qaoa_program(QaoaGraph::Reg3, 16, s));
  const auto suite = reduction_suite();
  programs.insert(programs.end(), suite.begin(), suite.begin() + 5);

  for (const auto& p : programs) {
    for (Isa isa : {Isa::Cnot, Isa::SU4}) {
      CompileOptions o;
      o.isa = isa;
      o.coupling = hh;
      o.order.hardware_aware = true;
      const auto r = compile_program(p, o);
      illegal += !respects_coupling(r.circuit, hh);
      if (p.n_qubits <= 6) {
        const Circuit c = isa == Isa::SU4 ? expand_su4(r.circuit) : r.circuit;
        worst = std::max(worst, routed_infidelity(c, r.layouts.initial, r.layouts.final,
                                                  pauli_exp_product(r.schedule, p.n_qubits)));
      }
    }
    // SWAP accounting on the routed pre-ISA circuit.
    std::vector<Circuit> blocks;
    for (const auto& g : group_by_support(p.terms)) blocks.push_back(compile_group(g, p.n_qubits).circuit);
    Circuit logical = expand_to_cnot(assemble(blocks, OrderConfig{}).circuit);
    logical.n_qubits = hh.num_qubits();
    const auto routed = sabre_route(logical, hh);
    const auto expanded = decompose_swap(routed.circuit);
    total_swaps += routed.swap_count;
    swap_mismatch += routed.swap_count != count_kind(routed.circuit, GateKind::Swap) ||
                     count_kind(expanded, GateKind::Swap) != 0 ||
                     count_kind(expanded, GateKind::CX) !=
                         count_kind(routed.circuit, GateKind::CX) + 3 * routed.swap_count;
  }
  Circuit one_swap(2);
  one_swap.push(Gate::swap(0, 1));
  const auto swap_u = oracle::circuit_matrix(one_swap);
  const auto cx3 = oracle::circuit_matrix(decompose_swap(one_swap));
  const bool identity_ok = oracle::max_diff(swap_u, cx3) < 1e-12;
  return {illegal == 0 && worst < 1e-9 && swap_mismatch == 0 && identity_ok,
          fmt::format("{} programs x 2 ISAs on {}-qubit heavy-hex: {} illegal, worst small-case "
                      "infidelity {:.2e}, {} SWAPs, {} SWAP-count mismatches",
                      programs.size(), hh.num_qubits(), illegal, worst, total_swaps, swap_mismatch)};
}

Outcome trotter_sanity() {
  std::mt19937_64 rng(31337);
  double worst = 0.0;
  for (int c = 0; c < 10; ++c) {
    HamiltonianProgram h;
    h.n_qubits = 4 + static_cast<std::size_t>(c % 2);
    while (h.terms.size() < 6) {
      PauliTerm t;
      t.letters.resize(h.n_qubits);
      for (auto& l : t.letters) l = static_cast<Pauli>(uniform_index(rng, 4));
      if (t.weight() == 0) continue;
      bool commutes = true;
      for (const auto& u : h.terms) {
        std::size_t anti = 0;
        for (std::size_t q = 0; q < h.n_qubits; ++q) anti += anticommute(t.letters[q], u.letters[q]);
        commutes = commutes && anti % 2 == 0;
      }
      if (!commutes) continue;
      t.coefficient = uniform_real(rng, -1.0, 1.0);
      t.origin_id = static_cast<int>(h.terms.size());
      h.terms.push_back(std::move(t));
    }
    CompileOptions o;
    o.trotter = TrotterConfig{1, 1, 0.7};
    const auto r = compile_program(h, o);
    worst = std::max(worst, infidelity(unitary_of(r.circuit), exact_evolution(h, 0.7)));
  }
  std::size_t wins = 0, trials = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    RandomProgramConfig rc;
    rc.n_qubits = 4;
    rc.min_weight = 1;
    rc.max_weight = 4;
    rc.terms_per_support = 1;
    rc.n_terms = 6;
    rc.seed = 4000 + s;
    const auto h = random_program(rc);
    const auto exact = exact_evolution(h, 1.0);
    for (int steps : {4, 8}) {
      const auto s1 = pauli_exp_product(trotterize(h, {1, steps, 1.0}), 4);
      const auto s2 = pauli_exp_product(trotterize(h, {2, steps, 1.0}), 4);
      wins += infidelity(exact, s2) < infidelity(exact, s1);
      ++trials;
    }
  }
  return {worst < 1e-9 && wins * 10 >= trials * 9,
          fmt::format("commuting worst infidelity {:.2e}; order 2 beats order 1 in {}/{}", worst, wins,
                      trials)};
}

Outcome termination_determinism() {
  std::mt19937_64 rng(77);
  std::size_t over_budget = 0, max_ratio_num = 0, max_ratio_den = 1;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + uniform_index(rng, 7);
    const std::size_t rows = 1 + uniform_index(rng, 10);
    std::vector<std::size_t> map(n);
    for (std::size_t q = 0; q < n; ++q) map[q] = q;
    BSFTableau t(map);
    std::vector<Pauli> letters(n);
    while (t.num_rows() < rows) {
      for (auto& l : letters) l = static_cast<Pauli>(uniform_index(rng, 4));
      if (std::all_of(letters.begin(), letters.end(), [](Pauli p) { return p == Pauli::I; })) continue;
      t.push_row(letters, 0.1, static_cast<int>(t.num_rows()), t.num_rows());
    }
    const std::size_t budget = 4 * t.weight_sum();
    const auto s = simplify_group(t);
    over_budget += s.epochs.size() > budget;
    if (s.epochs.size() * max_ratio_den > max_ratio_num * budget) {
      max_ratio_num = s.epochs.size();
      max_ratio_den = budget;
    }
  }

  auto run = [](const HamiltonianProgram& p, const CompileOptions& o) {
    const auto r = compile_program(p, o);
    std::ostringstream os;
    os << circuit_to_string(r.circuit, r.routed ? &r.layouts : nullptr);
    MetricsReport::of(r, 0.0).write_key_value(os, false);
    for (const auto& t : r.schedule) os << t.origin_id << ' ';
    return os.str();
  };
  std::size_t differing = 0;
  const auto suite = reduction_suite();
  CompileOptions routed;
  routed.coupling = heavy_hex(4, 2);
  CompileOptions trot;
  trot.trotter = TrotterConfig{2, 2, 1.0};
  trot.isa = Isa::SU4;
  const std::vector<std::pair<HamiltonianProgram, CompileOptions>> cases = {
      {suite[0], {}}, {suite[1], trot}, {qaoa_program(QaoaGraph::Rand4, 16, 3), routed}, {suite[2], routed}};
  for (const auto& [p, o] : cases) differing += run(p, o) != run(p, o);
  return {over_budget == 0 && differing == 0,
          fmt::format("1000 tableaus, {} over budget (max epochs/budget {}/{}); {} of {} pipelines "
                      "differ between runs",
                      over_budget, max_ratio_num, max_ratio_den, differing, cases.size())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "tableau regression", 0.001, tableau_regression},
      {2, "conjugation oracle", 1, conjugation_oracle},
      {3, "group equivalence", 60, group_equivalence},
      {4, "motivating-example reduction", 1, motivating_example},
      {5, "aggregate reduction", 300, aggregate_reduction},
      {6, "SU4 ISA", 120, su4_isa},
      {7, "ordering quality", 120, ordering_quality},
      {8, "routing legality and semantics", 120, routing},
      {9, "Trotter and verify sanity", 60, trotter_sanity},
      {10, "termination and determinism", 120, termination_determinism},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::cout << fmt::format("[{}] {:>2}. {}: {} ({:.3f} s{})\n", pass ? "PASS" : "FAIL", c.id, c.name,
                             o.detail, secs, in_time ? "" : fmt::format(", over {} s budget", c.budget_s));
  }
  return failures == 0 ? 0 : 1;
}
