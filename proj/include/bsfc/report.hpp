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

#include <iosfwd>
#include <string>
#include <vector>

#include "bsfc/circuit.hpp"
#include "bsfc/compiler.hpp"

namespace bsfc {

struct MetricsReport {
  std::size_t n_qubits = 0;
  std::size_t n_2q = 0;
  std::size_t depth_2q = 0;
  std::size_t n_1q = 0;
  std::size_t n_cnot = 0;
  std::size_t n_swap = 0;
  std::size_t n_su4 = 0;
  std::string isa;
  bool routed = false;
  double wall_time_ms = 0.0;
  std::vector<StageTiming> stages;

  /// Recount of a circuit. SWAP gates still present are counted in n_swap
  /// (and in n_2q); `routing_swaps` >= 0 overrides n_swap for circuits whose
  /// SWAPs were already decomposed.
  static MetricsReport of(const Circuit& c, long routing_swaps = -1);
  static MetricsReport of(const CompileResult& r, double wall_time_ms);

  /// One "key=value" line per field; timings last.
  void write_key_value(std::ostream& out, bool with_timings = true) const;
  void write_table(std::ostream& out, bool with_timings = true) const;
  std::string to_json(bool with_timings = true) const;
};

}  // namespace bsfc
