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

// Command-line driver: compile, verify, stats and benchmark generators.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bsfc/bench.hpp"
#include "bsfc/compiler.hpp"
#include "bsfc/error.hpp"
#include "bsfc/kernels.hpp"
#include "bsfc/report.hpp"
#include "bsfc/route.hpp"
#include "bsfc/verify.hpp"

namespace {

using namespace bsfc;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write '{}'", path));
  out << text;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw Error(fmt::format("expected RxC, got '{}'", text));
  try {
    return {std::stoul(text.substr(0, x)), std::stoul(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw Error(fmt::format("expected RxC, got '{}'", text));
  }
}

struct CompileArgs {
  std::string input;
  std::string out;
  std::string report;
  std::string schedule;
  std::string isa = "cnot";
  std::string topology;
  std::string heavy_hex;
  std::string coupling;
  std::string trotter;
  std::string baseline;
  std::size_t lookahead = 10;
  bool hardware_aware = false;
  bool no_similarity = false;
  bool reverse_traversal = false;
  bool json = false;
  bool quiet = false;
  std::uint64_t seed = 0;
};

int run_compile(const CompileArgs& a) {
  std::vector<std::string> warnings;
  const HamiltonianProgram program = load_program(a.input, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

  CompileOptions opts;
  opts.isa = isa_from_name(a.isa);
  if (!a.topology.empty() && a.topology != "all-to-all") {
    throw Error(fmt::format("unknown topology '{}'", a.topology));
  }
  if (!a.heavy_hex.empty()) {
    const auto [r, c] = parse_grid(a.heavy_hex);
    opts.coupling = heavy_hex(r, c);
  } else if (!a.coupling.empty()) {
    std::vector<std::string> cw;
    opts.coupling = load_coupling(a.coupling, &cw);
    for (const auto& w : cw) std::cerr << "warning: " << w << '\n';
  }
  opts.order.lookahead_k = a.lookahead;
  opts.order.hardware_aware = a.hardware_aware || opts.coupling.has_value();
  opts.order.use_similarity = !a.no_similarity;
  opts.router.seed = a.seed;
  opts.router.reverse_traversal = a.reverse_traversal;
  if (!a.trotter.empty()) opts.trotter = parse_trotter_options(a.trotter);
  if (!a.baseline.empty()) {
    if (a.baseline != "naive") throw Error(fmt::format("unknown baseline '{}'", a.baseline));
    opts.naive_baseline = true;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const CompileResult result = compile_program(program, opts);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  write_text(a.out, circuit_to_string(result.circuit, result.routed ? &result.layouts : nullptr));
  if (!a.schedule.empty()) {
    HamiltonianProgram sched{program.n_qubits, result.schedule};
    std::ostringstream os;
    write_program(os, sched);
    write_text(a.schedule, os.str());
  }
  const MetricsReport report = MetricsReport::of(result, ms);
  if (!a.report.empty()) {
    std::ostringstream os;
    if (a.json) {
      os << report.to_json() << '\n';
    } else {
      report.write_key_value(os);
    }
    write_text(a.report, os.str());
  }
  if (!a.quiet) report.write_table(std::cerr);
  return 0;
}

int run_verify(const std::string& circuit_path, const std::string& reference_path,
               const std::string& trotter, bool exact, double time, double tolerance) {
  CircuitLayouts layouts;
  const Circuit c = load_circuit(circuit_path, &layouts);
  const HamiltonianProgram reference = load_program(reference_path);
  DenseUnitary target;
  if (exact) {
    target = exact_evolution(reference, time);
  } else {
    std::optional<TrotterConfig> cfg;
    if (!trotter.empty()) cfg = parse_trotter_options(trotter);
    target = pauli_exp_product(program_terms(reference, cfg), reference.n_qubits);
  }
  double infid = 0.0;
  if (!layouts.initial.empty()) {
    infid = routed_infidelity(c, layouts.initial, layouts.final, target);
  } else {
    Circuit widened = c;
    if (widened.n_qubits < reference.n_qubits) widened.n_qubits = reference.n_qubits;
    if (widened.n_qubits != reference.n_qubits) {
      throw Error(fmt::format("circuit has {} qubits, reference {}", c.n_qubits, reference.n_qubits));
    }
    infid = infidelity(unitary_of(widened), target);
  }
  std::cout << fmt::format("infidelity={:.3e}\n", infid);
  return infid < tolerance ? 0 : 1;
}

int run_stats(const std::string& path, bool json) {
  CircuitLayouts layouts;
  const Circuit c = load_circuit(path, &layouts);
  const MetricsReport m = MetricsReport::of(c, layouts.routing_swaps);
  if (json) {
    std::cout << m.to_json(false) << '\n';
  } else {
    m.write_key_value(std::cout, false);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-exponentiation compiler"};
  app.require_subcommand(1);
  std::string kernels;
  app.add_option("--kernels", kernels, "Force a kernel variant (scalar or avx2)");

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "Compile a Hamiltonian program to a circuit");
  compile->add_option("input", ca.input, "Hamiltonian file")->required()->check(CLI::ExistingFile);
  compile->add_option("--out,-o", ca.out, "Circuit output file (default stdout)");
  compile->add_option("--report", ca.report, "Write the machine-readable report here");
  compile->add_option("--schedule", ca.schedule,
                      "Write the realized term order as a program file (for verify)");
  compile->add_option("--isa", ca.isa, "Target ISA")->check(CLI::IsMember({"cnot", "su4"}));
  auto* topo = compile->add_option("--topology", ca.topology, "all-to-all");
  auto* hh = compile->add_option("--heavy-hex", ca.heavy_hex, "Heavy-hex device, RxC");
  auto* cp = compile->add_option("--coupling", ca.coupling, "Coupling graph file");
  topo->excludes(hh)->excludes(cp);
  hh->excludes(cp);
  compile->add_option("--lookahead", ca.lookahead, "Ordering lookahead window")
      ->check(CLI::PositiveNumber);
  compile->add_flag("--hardware-aware", ca.hardware_aware,
                    "Use interaction-graph similarity while ordering");
  compile->add_flag("--no-similarity", ca.no_similarity, "Disable the similarity factor");
  compile->add_flag("--reverse-traversal", ca.reverse_traversal,
                    "Refine the initial layout with a forward/backward routing sweep");
  compile->add_option("--trotter", ca.trotter, "e.g. order=2,steps=1,t=1.0");
  compile->add_option("--baseline", ca.baseline, "naive: per-term CNOT-tree synthesis")
      ->check(CLI::IsMember({"naive"}));
  compile->add_option("--seed", ca.seed, "Router tie-break seed");
  compile->add_flag("--json", ca.json, "Report in JSON instead of key=value");
  compile->add_flag("--quiet,-q", ca.quiet, "No table on stderr");

  std::string v_circuit, v_reference, v_trotter;
  bool v_exact = false;
  double v_time = 1.0, v_tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "Compare a circuit against a term schedule");
  verify->add_option("circuit", v_circuit)->required()->check(CLI::ExistingFile);
  verify->add_option("reference", v_reference, "Program or schedule file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--trotter", v_trotter, "Expand the reference before comparing");
  verify->add_flag("--exact", v_exact, "Compare against exp(-i t H) instead");
  verify->add_option("--time,-t", v_time, "Evolution time for --exact");
  verify->add_option("--tolerance", v_tol, "Exit status 1 above this infidelity");

  std::string s_path;
  bool s_json = false;
  auto* stats = app.add_subcommand("stats", "Recount metrics of a circuit file");
  stats->add_option("circuit", s_path)->required()->check(CLI::ExistingFile);
  stats->add_flag("--json", s_json);

  std::string q_graph = "reg3", q_out;
  std::size_t q_size = 16;
  std::uint64_t q_seed = 0;
  auto* bq = app.add_subcommand("bench-qaoa", "Emit a QAOA cost Hamiltonian");
  bq->add_option("--graph", q_graph)->check(CLI::IsMember({"reg3", "rand", "rand4"}));
  bq->add_option("--size", q_size)->check(CLI::PositiveNumber);
  bq->add_option("--seed", q_seed);
  bq->add_option("--out,-o", q_out);

  RandomProgramConfig rc;
  std::string r_out;
  auto* br = app.add_subcommand("bench-random", "Emit a random grouped Pauli program");
  br->add_option("--qubits", rc.n_qubits)->check(CLI::PositiveNumber);
  br->add_option("--terms", rc.n_terms)->check(CLI::PositiveNumber);
  br->add_option("--min-weight", rc.min_weight)->check(CLI::PositiveNumber);
  br->add_option("--max-weight", rc.max_weight)->check(CLI::PositiveNumber);
  br->add_option("--per-support", rc.terms_per_support)->check(CLI::PositiveNumber);
  br->add_option("--seed", rc.seed);
  br->add_option("--out,-o", r_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!kernels.empty() && !kernels::select(kernels)) {
      throw Error(fmt::format("kernel variant '{}' is unavailable", kernels));
    }
    if (*compile) return run_compile(ca);
    if (*verify) return run_verify(v_circuit, v_reference, v_trotter, v_exact, v_time, v_tol);
    if (*stats) return run_stats(s_path, s_json);
    if (*bq) {
      std::ostringstream os;
      write_program(os, qaoa_program(qaoa_graph_from_name(q_graph), q_size, q_seed));
      write_text(q_out, os.str());
      return 0;
    }
    if (*br) {
      std::ostringstream os;
      write_program(os, random_program(rc));
      write_text(r_out, os.str());
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
