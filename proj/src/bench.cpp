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

#include "bsfc/bench.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "bsfc/error.hpp"

namespace bsfc {

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  if (n == 0) throw Error("uniform_index over an empty range");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

QaoaGraph qaoa_graph_from_name(std::string_view name) {
  if (name == "reg3") return QaoaGraph::Reg3;
  if (name == "rand" || name == "rand4") return QaoaGraph::Rand4;
  throw Error(fmt::format("unknown QAOA graph kind '{}' (expected reg3 or rand4)", name));
}

std::string_view qaoa_graph_name(QaoaGraph g) { return g == QaoaGraph::Reg3 ? "reg3" : "rand4"; }

std::vector<std::pair<std::size_t, std::size_t>> random_regular_graph(std::size_t n,
                                                                      std::size_t degree,
                                                                      std::uint64_t seed) {
  if (degree >= n) throw Error(fmt::format("no {}-regular graph on {} vertices", degree, n));
  if ((n * degree) % 2 != 0) {
    throw Error(fmt::format("a {}-regular graph needs an even vertex count, got {}", degree, n));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> points(n * degree);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = i / degree;
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[uniform_index(rng, i)]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      auto e = std::minmax(points[i], points[i + 1]);
      if (e.first == e.second) ok = false;
      edges.emplace_back(e.first, e.second);
    }
    if (!ok) continue;
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    return edges;
  }
  throw Error("random regular graph generation did not converge");
}

HamiltonianProgram qaoa_program(QaoaGraph kind, std::size_t n, std::uint64_t seed) {
  const std::size_t degree = kind == QaoaGraph::Reg3 ? 3 : 4;
  HamiltonianProgram p;
  p.n_qubits = n;
  int id = 0;
  for (auto [a, b] : random_regular_graph(n, degree, seed)) {
    PauliTerm t;
    t.letters.assign(n, Pauli::I);
    t.letters[a] = t.letters[b] = Pauli::Z;
    t.coefficient = 1.0;
    t.origin_id = id++;
    p.terms.push_back(std::move(t));
  }
  return p;
}

HamiltonianProgram random_program(const RandomProgramConfig& cfg) {
  if (cfg.min_weight == 0 || cfg.min_weight > cfg.max_weight) {
    throw Error("weight range must satisfy 1 <= min <= max");
  }
  if (cfg.max_weight > cfg.n_qubits) {
    throw Error(fmt::format("weight {} exceeds {} qubits", cfg.max_weight, cfg.n_qubits));
  }
  if (cfg.terms_per_support == 0) throw Error("terms_per_support must be positive");
  std::mt19937_64 rng(cfg.seed);
  HamiltonianProgram p;
  p.n_qubits = cfg.n_qubits;
  std::vector<std::size_t> qubits(cfg.n_qubits);
  std::vector<std::size_t> support;
  std::size_t left_in_run = 0;
  for (std::size_t t = 0; t < cfg.n_terms; ++t) {
    if (left_in_run == 0) {
      const std::size_t w = cfg.min_weight + uniform_index(rng, cfg.max_weight - cfg.min_weight + 1);
      std::iota(qubits.begin(), qubits.end(), std::size_t{0});
      for (std::size_t i = 0; i < w; ++i) {
        std::swap(qubits[i], qubits[i + uniform_index(rng, cfg.n_qubits - i)]);
      }
      support.assign(qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(w));
      std::sort(support.begin(), support.end());
      left_in_run = cfg.terms_per_support;
    }
    --left_in_run;
    PauliTerm term;
    term.letters.assign(cfg.n_qubits, Pauli::I);
    for (std::size_t q : support) term.letters[q] = static_cast<Pauli>(1 + uniform_index(rng, 3));
    term.coefficient = uniform_real(rng, -1.0, 1.0);
    term.origin_id = static_cast<int>(t);
    p.terms.push_back(std::move(term));
  }
  return p;
}

}  // namespace bsfc
