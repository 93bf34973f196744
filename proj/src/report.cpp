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

#include "bsfc/report.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

namespace bsfc {

MetricsReport MetricsReport::of(const Circuit& c, long routing_swaps) {
  MetricsReport m;
  m.n_qubits = c.n_qubits;
  m.n_2q = bsfc::count_2q(c);
  m.depth_2q = bsfc::depth_2q(c);
  m.n_1q = bsfc::count_1q(c);
  m.n_cnot = count_kind(c, GateKind::CX);
  m.n_su4 = count_kind(c, GateKind::SU4);
  m.n_swap = routing_swaps >= 0 ? static_cast<std::size_t>(routing_swaps) : count_kind(c, GateKind::Swap);
  m.isa = m.n_su4 > 0 ? "su4" : "cnot";
  m.routed = routing_swaps >= 0;
  return m;
}

MetricsReport MetricsReport::of(const CompileResult& r, double wall_time_ms) {
  MetricsReport m = of(r.circuit, r.routed ? static_cast<long>(r.swap_count) : -1);
  m.isa = std::string(isa_name(r.isa));
  m.routed = r.routed;
  m.wall_time_ms = wall_time_ms;
  m.stages = r.stages;
  return m;
}

namespace {

std::vector<std::pair<std::string, std::string>> fields(const MetricsReport& m) {
  return {
      {"isa", m.isa},
      {"routed", m.routed ? "true" : "false"},
      {"n_qubits", fmt::format("{}", m.n_qubits)},
      {"n_2q", fmt::format("{}", m.n_2q)},
      {"depth_2q", fmt::format("{}", m.depth_2q)},
      {"n_1q", fmt::format("{}", m.n_1q)},
      {"n_cnot", fmt::format("{}", m.n_cnot)},
      {"n_su4", fmt::format("{}", m.n_su4)},
      {"n_swap", fmt::format("{}", m.n_swap)},
  };
}

}  // namespace

void MetricsReport::write_key_value(std::ostream& out, bool with_timings) const {
  for (const auto& [k, v] : fields(*this)) out << k << '=' << v << '\n';
  if (!with_timings) return;
  out << fmt::format("wall_time_ms={:.3f}\n", wall_time_ms);
  for (const auto& s : stages) out << fmt::format("stage.{}_ms={:.3f}\n", s.name, s.ms);
}

void MetricsReport::write_table(std::ostream& out, bool with_timings) const {
  auto rows = fields(*this);
  if (with_timings) {
    rows.emplace_back("wall_time_ms", fmt::format("{:.3f}", wall_time_ms));
    for (const auto& s : stages) rows.emplace_back("  " + s.name + " (ms)", fmt::format("{:.3f}", s.ms));
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << fmt::format("{:<{}}  {}\n", k, width, v);
}

std::string MetricsReport::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["isa"] = isa;
  j["routed"] = routed;
  j["n_qubits"] = n_qubits;
  j["n_2q"] = n_2q;
  j["depth_2q"] = depth_2q;
  j["n_1q"] = n_1q;
  j["n_cnot"] = n_cnot;
  j["n_su4"] = n_su4;
  j["n_swap"] = n_swap;
  if (with_timings) {
    j["wall_time_ms"] = wall_time_ms;
    auto& st = j["stages"];
    st = nlohmann::ordered_json::object();
    for (const auto& s : stages) st[s.name] = s.ms;
  }
  return j.dump(2);
}

}  // namespace bsfc
