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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bsfc/circuit.hpp"
#include "bsfc/error.hpp"
#include "text_util.hpp"

namespace bsfc {

namespace {

std::string angle_text(double phi) { return fmt::format("{:#.12g}", phi); }

std::string operands(const Gate& g) {
  if (g.is_two_qubit()) return fmt::format("q[{}],q[{}]", g.q[0], g.q[1]);
  return fmt::format("q[{}]", g.q[0]);
}

char lower_letter(Pauli p) { return static_cast<char>(to_char(p) - 'A' + 'a'); }

}  // namespace

std::string gate_to_string(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: return "h " + operands(g);
    case GateKind::S: return "s " + operands(g);
    case GateKind::Sdg: return "sdg " + operands(g);
    case GateKind::RX: return fmt::format("rx({}) {}", angle_text(g.angle), operands(g));
    case GateKind::RY: return fmt::format("ry({}) {}", angle_text(g.angle), operands(g));
    case GateKind::RZ: return fmt::format("rz({}) {}", angle_text(g.angle), operands(g));
    case GateKind::CX: return "cx " + operands(g);
    case GateKind::Swap: return "swap " + operands(g);
    case GateKind::Gen: return fmt::format("gen({}) {}", gen_name(g.gen), operands(g));
    case GateKind::PauliRot2:
      return fmt::format("r{}{}({}) {}", lower_letter(g.axes[0]), lower_letter(g.axes[1]),
                         angle_text(g.angle), operands(g));
    case GateKind::SU4: {
      std::string body;
      for (std::size_t i = 0; i < g.payload.size(); ++i) {
        if (i) body += "; ";
        body += gate_to_string(g.payload[i]);
      }
      return fmt::format("su4 {} {{ {} }}", operands(g), body);
    }
  }
  return "?";
}

void write_circuit(std::ostream& out, const Circuit& c, const CircuitLayouts* layouts) {
  out << "qubits " << c.n_qubits << '\n';
  if (layouts != nullptr && !layouts->initial.empty()) {
    out << "initial_layout " << fmt::format("{}", fmt::join(layouts->initial, " ")) << '\n';
    out << "final_layout " << fmt::format("{}", fmt::join(layouts->final, " ")) << '\n';
  }
  if (layouts != nullptr && layouts->routing_swaps >= 0) {
    out << "routing_swaps " << layouts->routing_swaps << '\n';
  }
  for (const Gate& g : c.gates) out << gate_to_string(g) << '\n';
}

std::string circuit_to_string(const Circuit& c, const CircuitLayouts* layouts) {
  std::ostringstream os;
  write_circuit(os, c, layouts);
  return os.str();
}

namespace {

std::size_t parse_qubit(std::string_view tok, std::size_t line) {
  tok = detail::trim(tok);
  if (tok.size() < 4 || tok.substr(0, 2) != "q[" || tok.back() != ']') {
    throw ParseError(line, fmt::format("bad qubit operand '{}'", tok));
  }
  auto v = detail::parse_int(tok.substr(2, tok.size() - 3));
  if (!v || *v < 0) throw ParseError(line, fmt::format("bad qubit index in '{}'", tok));
  return static_cast<std::size_t>(*v);
}

Gate parse_gate(std::string_view text, std::size_t line) {
  text = detail::trim(text);
  std::string_view head = text;
  std::string_view rest;
  std::string_view payload;
  bool has_payload = false;
  if (auto brace = text.find('{'); brace != std::string_view::npos) {
    auto close = text.rfind('}');
    if (close == std::string_view::npos || close < brace) throw ParseError(line, "unbalanced '{'");
    payload = text.substr(brace + 1, close - brace - 1);
    text = detail::trim(text.substr(0, brace));
    has_payload = true;
  }
  // Split "name(arg) operands".
  std::size_t name_end = 0;
  while (name_end < text.size() && text[name_end] != ' ' && text[name_end] != '\t') {
    if (text[name_end] == '(') {
      auto close = text.find(')', name_end);
      if (close == std::string_view::npos) throw ParseError(line, "unbalanced '('");
      name_end = close + 1;
      break;
    }
    ++name_end;
  }
  head = text.substr(0, name_end);
  rest = detail::trim(text.substr(name_end));

  std::string_view name = head;
  std::string_view arg;
  bool has_arg = false;
  if (auto paren = head.find('('); paren != std::string_view::npos) {
    name = head.substr(0, paren);
    arg = head.substr(paren + 1, head.size() - paren - 2);
    has_arg = true;
  }

  std::vector<std::size_t> qs;
  for (auto tok : detail::split(rest, ',')) {
    if (!detail::trim(tok).empty()) qs.push_back(parse_qubit(tok, line));
  }
  auto need = [&](std::size_t count) {
    if (qs.size() != count) {
      throw ParseError(line, fmt::format("'{}' takes {} qubit operand(s)", name, count));
    }
  };
  auto angle = [&]() {
    if (!has_arg) throw ParseError(line, fmt::format("'{}' needs an angle", name));
    auto v = detail::parse_double(detail::trim(arg));
    if (!v) throw ParseError(line, fmt::format("bad angle '{}'", arg));
    return *v;
  };
  if (has_payload && name != "su4") throw ParseError(line, "only su4 takes a payload");

  if (name == "h") { need(1); return Gate::h(qs[0]); }
  if (name == "s") { need(1); return Gate::s(qs[0]); }
  if (name == "sdg") { need(1); return Gate::sdg(qs[0]); }
  if (name == "rx") { need(1); return Gate::rx(qs[0], angle()); }
  if (name == "ry") { need(1); return Gate::ry(qs[0], angle()); }
  if (name == "rz") { need(1); return Gate::rz(qs[0], angle()); }
  if (name == "cx" || name == "cnot") { need(2); return Gate::cx(qs[0], qs[1]); }
  if (name == "swap") { need(2); return Gate::swap(qs[0], qs[1]); }
  if (name == "gen") {
    need(2);
    if (!has_arg) throw ParseError(line, "gen needs a kind, e.g. gen(xy)");
    try {
      return Gate::generator(gen_from_name(detail::trim(arg)), qs[0], qs[1]);
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  if (name == "su4") {
    need(2);
    std::vector<Gate> body;
    for (auto part : detail::split(payload, ';')) {
      if (!detail::trim(part).empty()) body.push_back(parse_gate(part, line));
    }
    return Gate::su4(qs[0], qs[1], std::move(body));
  }
  if (name.size() == 3 && name[0] == 'r') {
    auto pa = pauli_from_char(name[1]);
    auto pb = pauli_from_char(name[2]);
    if (pa && pb && *pa != Pauli::I && *pb != Pauli::I) {
      need(2);
      return Gate::pauli_rot2(*pa, *pb, qs[0], qs[1], angle());
    }
  }
  throw ParseError(line, fmt::format("unknown gate '{}'", name));
}

std::vector<std::size_t> parse_index_list(std::string_view text, std::size_t line) {
  std::vector<std::size_t> out;
  for (auto tok : detail::split_ws(text)) {
    auto v = detail::parse_int(tok);
    if (!v || *v < 0) throw ParseError(line, fmt::format("bad layout entry '{}'", tok));
    out.push_back(static_cast<std::size_t>(*v));
  }
  return out;
}

}  // namespace

Circuit parse_circuit(std::istream& in, CircuitLayouts* layouts) {
  Circuit c;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  CircuitLayouts parsed;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    if (!have_header) {
      auto fields = detail::split_ws(line);
      if (fields.size() != 2 || fields[0] != "qubits") throw ParseError(line_no, "expected header 'qubits N'");
      auto n = detail::parse_int(fields[1]);
      if (!n || *n < 0) throw ParseError(line_no, "bad qubit count");
      c.n_qubits = static_cast<std::size_t>(*n);
      have_header = true;
      continue;
    }
    if (line.starts_with("initial_layout")) {
      parsed.initial = parse_index_list(line.substr(14), line_no);
      continue;
    }
    if (line.starts_with("final_layout")) {
      parsed.final = parse_index_list(line.substr(12), line_no);
      continue;
    }
    if (line.starts_with("routing_swaps")) {
      const auto fields = detail::split_ws(line);
      const auto v = fields.size() == 2 ? detail::parse_int(fields[1]) : std::nullopt;
      if (!v || *v < 0) throw ParseError(line_no, "bad routing_swaps count");
      parsed.routing_swaps = static_cast<long>(*v);
      continue;
    }
    c.push(parse_gate(line, line_no));
  }
  if (!have_header) throw ParseError(line_no, "missing 'qubits N' header");
  try {
    c.validate();
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  if (parsed.initial.size() != parsed.final.size()) {
    throw ParseError(0, "initial_layout and final_layout must have equal length");
  }
  if (layouts != nullptr) *layouts = std::move(parsed);
  return c;
}

Circuit parse_circuit_string(const std::string& text, CircuitLayouts* layouts) {
  std::istringstream is(text);
  return parse_circuit(is, layouts);
}

Circuit load_circuit(const std::string& path, CircuitLayouts* layouts) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open circuit file '{}'", path));
  return parse_circuit(in, layouts);
}

}  // namespace bsfc
