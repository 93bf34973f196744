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

#include "bsfc/compiler.hpp"

#include <chrono>

#include "bsfc/bsf.hpp"
#include "bsfc/error.hpp"

namespace bsfc {

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out) : out_(out), t0_(Clock::now()) {}
  void lap(std::string name) {
    const auto now = Clock::now();
    out_.push_back({std::move(name), std::chrono::duration<double, std::milli>(now - t0_).count()});
    t0_ = now;
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::vector<StageTiming>& out_;
  Clock::time_point t0_;
};

Circuit finish_lowering(const Circuit& c, Isa isa) {
  if (isa == Isa::SU4) return lower(c, Isa::SU4);
  return peephole(decompose_swap(lower(c, Isa::Cnot)));
}

}  // namespace

CompiledGroup compile_group(const IRGroup& group, std::size_t n_qubits, const SimplifyConfig& cfg) {
  const SimplifiedGroup s = simplify_group(build_tableau(group), cfg);
  CompiledGroup out;
  out.circuit = remap_qubits(emit_group_circuit(s), s.qubit_map, n_qubits);
  out.schedule.reserve(s.reported_sources.size());
  for (std::size_t src : s.reported_sources) out.schedule.push_back(group.terms[src]);
  return out;
}

std::vector<PauliTerm> program_terms(const HamiltonianProgram& program,
                                     const std::optional<TrotterConfig>& trotter) {
  if (trotter) return trotterize(program, *trotter);
  return program.terms;
}

CompileResult compile_program(const HamiltonianProgram& program, const CompileOptions& opts) {
  CompileResult r;
  r.isa = opts.isa;
  StageClock clock(r.stages);
  const std::size_t n = program.n_qubits;
  if (opts.coupling && opts.coupling->num_qubits() < n) {
    throw Error("the coupling graph has fewer qubits than the program");
  }
  const auto terms = program_terms(program, opts.trotter);
  clock.lap("trotter");

  Circuit logical(n);
  if (opts.naive_baseline) {
    logical = naive_synthesis(terms, n);
    r.schedule = terms;
    clock.lap("synthesize");
  } else {
    const auto groups = group_by_support(terms);
    clock.lap("group");
    std::vector<CompiledGroup> compiled;
    compiled.reserve(groups.size());
    for (const auto& g : groups) compiled.push_back(compile_group(g, n, opts.simplify));
    clock.lap("simplify");
    std::vector<Circuit> blocks;
    blocks.reserve(compiled.size());
    for (const auto& cg : compiled) blocks.push_back(cg.circuit);
    auto assembled = assemble(blocks, opts.order);
    for (std::size_t idx : assembled.order) {
      r.schedule.insert(r.schedule.end(), compiled[idx].schedule.begin(), compiled[idx].schedule.end());
    }
    logical = std::move(assembled.circuit);
    clock.lap("order");
  }

  if (opts.coupling) {
    Circuit widened = logical;
    widened.n_qubits = opts.coupling->num_qubits();
    auto routed = sabre_route(widened, *opts.coupling, opts.router);
    clock.lap("route");
    r.routed = true;
    r.swap_count = routed.swap_count;
    r.layouts.initial = std::move(routed.initial);
    r.layouts.final = std::move(routed.final);
    r.layouts.routing_swaps = static_cast<long>(routed.swap_count);
    r.circuit = finish_lowering(routed.circuit, opts.isa);
  } else {
    r.circuit = finish_lowering(logical, opts.isa);
  }
  clock.lap("lower");
  return r;
}

}  // namespace bsfc
