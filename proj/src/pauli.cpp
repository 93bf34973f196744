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

#include "bsfc/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "bsfc/error.hpp"
#include "text_util.hpp"

namespace bsfc {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

std::optional<Pauli> pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default: return std::nullopt;
  }
}

std::size_t PauliTerm::weight() const {
  return static_cast<std::size_t>(
      std::count_if(letters.begin(), letters.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::vector<std::size_t> PauliTerm::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    if (letters[q] != Pauli::I) out.push_back(q);
  }
  return out;
}

std::string PauliTerm::letters_string() const {
  std::string s;
  s.reserve(letters.size());
  for (Pauli p : letters) s.push_back(to_char(p));
  return s;
}

PauliTerm PauliTerm::from_string(std::string_view text, double coefficient, int origin_id) {
  PauliTerm t;
  t.coefficient = coefficient;
  t.origin_id = origin_id;
  t.letters.reserve(text.size());
  for (char c : text) {
    auto p = pauli_from_char(c);
    if (!p) throw Error(fmt::format("invalid Pauli letter '{}'", c));
    t.letters.push_back(*p);
  }
  return t;
}

void TrotterConfig::validate() const {
  if (order != 1 && order != 2) {
    throw Error(fmt::format("unsupported Trotter order {} (supported: 1, 2)", order));
  }
  if (steps < 1) throw Error(fmt::format("Trotter steps must be positive, got {}", steps));
  const double t = tau();
  if (!std::isfinite(t) || t == 0.0) {
    throw Error("Trotter time step must be finite and nonzero");
  }
}

TrotterConfig parse_trotter_options(std::string_view text) {
  TrotterConfig cfg;
  for (std::string_view item : detail::split(text, ',')) {
    item = detail::trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(fmt::format("bad trotter option '{}'", item));
    auto key = detail::trim(item.substr(0, eq));
    auto value = detail::trim(item.substr(eq + 1));
    if (key == "order" || key == "k") {
      cfg.order = detail::parse_int(value).value_or(-1);
    } else if (key == "steps" || key == "r") {
      cfg.steps = detail::parse_int(value).value_or(-1);
    } else if (key == "t" || key == "time") {
      auto v = detail::parse_double(value);
      if (!v) throw Error(fmt::format("bad trotter time '{}'", value));
      cfg.total_time = *v;
    } else {
      throw Error(fmt::format("unknown trotter option '{}'", key));
    }
  }
  cfg.validate();
  return cfg;
}

std::optional<PauliTerm> parse_term(std::string_view text, std::size_t n_qubits,
                                    std::size_t line_no, int origin_id,
                                    std::vector<std::string>* warnings) {
  auto fields = detail::split_ws(text);
  if (fields.size() != 2) {
    throw ParseError(line_no, "expected 'coefficient letters'");
  }
  auto coeff = detail::parse_double(fields[0]);
  if (!coeff || !std::isfinite(*coeff)) {
    throw ParseError(line_no, fmt::format("non-numeric coefficient '{}'", fields[0]));
  }
  PauliTerm term;
  term.coefficient = *coeff;
  term.origin_id = origin_id;
  for (char c : fields[1]) {
    auto p = pauli_from_char(c);
    if (!p) throw ParseError(line_no, fmt::format("malformed Pauli letter '{}'", c));
    term.letters.push_back(*p);
  }
  if (term.letters.size() != n_qubits) {
    throw ParseError(line_no, fmt::format("term has {} letters but the program has {} qubits",
                                          term.letters.size(), n_qubits));
  }
  if (term.weight() == 0) {
    if (warnings) {
      warnings->push_back(fmt::format("line {}: identity term dropped (global phase)", line_no));
    }
    return std::nullopt;
  }
  return term;
}

HamiltonianProgram parse_program(std::istream& in, std::vector<std::string>* warnings) {
  HamiltonianProgram program;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  int next_id = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    if (!have_header) {
      auto fields = detail::split_ws(line);
      if (fields.size() != 2 || fields[0] != "qubits") {
        throw ParseError(line_no, "expected header 'qubits N'");
      }
      auto n = detail::parse_int(fields[1]);
      if (!n || *n < 1) throw ParseError(line_no, "qubit count must be a positive integer");
      program.n_qubits = static_cast<std::size_t>(*n);
      have_header = true;
      continue;
    }
    // Every non-empty line gets an id, dropped identity terms included, so ids
    // stay stable when the file is edited.
    auto term = parse_term(line, program.n_qubits, line_no, next_id++, warnings);
    if (term) program.terms.push_back(std::move(*term));
  }
  if (!have_header) throw ParseError(line_no, "missing 'qubits N' header");
  return program;
}

HamiltonianProgram load_program(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open Hamiltonian file '{}'", path));
  return parse_program(in, warnings);
}

void write_program(std::ostream& out, const HamiltonianProgram& program) {
  out << "qubits " << program.n_qubits << '\n';
  for (const auto& t : program.terms) {
    out << fmt::format("{} {}\n", t.coefficient, t.letters_string());
  }
}

std::vector<PauliTerm> trotterize(const HamiltonianProgram& program, const TrotterConfig& cfg) {
  cfg.validate();
  const double tau = cfg.tau();
  std::vector<PauliTerm> out;
  const auto& terms = program.terms;
  out.reserve(terms.size() * static_cast<std::size_t>(cfg.steps) * static_cast<std::size_t>(cfg.order));
  auto scaled = [](const PauliTerm& t, double factor) {
    PauliTerm s = t;
    s.coefficient = t.coefficient * factor;
    return s;
  };
  for (int step = 0; step < cfg.steps; ++step) {
    if (cfg.order == 1) {
      for (const auto& t : terms) out.push_back(scaled(t, tau));
    } else {
      for (const auto& t : terms) out.push_back(scaled(t, tau / 2.0));
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) out.push_back(scaled(*it, tau / 2.0));
    }
  }
  return out;
}

std::vector<IRGroup> group_by_support(std::span<const PauliTerm> terms) {
  std::vector<IRGroup> groups;
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (const auto& t : terms) {
    auto support = t.support();
    auto [it, inserted] = index.try_emplace(support, groups.size());
    if (inserted) groups.push_back(IRGroup{std::move(support), {}});
    groups[it->second].terms.push_back(t);
  }
  return groups;
}

}  // namespace bsfc
