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

#include "bsfc/simplify.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "bsfc/error.hpp"

namespace bsfc {

std::vector<CandidateScore> score_candidates(const BSFTableau& t) {
  const std::size_t n = t.num_qubits();
  std::vector<CandidateScore> out;
  out.reserve(6 * n * n);
  for (GenKind kind : kGenKinds) {
    const bool symmetric = is_symmetric(kind);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || (symmetric && a > b)) continue;
        const Clifford2QGate g{kind, a, b};
        out.push_back(CandidateScore{g, cost_bsf(apply_clifford2q(t, g))});
      }
    }
  }
  return out;
}

CandidateScore best_candidate(const BSFTableau& t) {
  if (t.num_qubits() < 2) throw Error("greedy search needs at least two columns");
  const std::size_t n = t.num_qubits();
  CandidateScore best{{}, std::numeric_limits<double>::infinity()};
  BSFTableau scratch;
  for (GenKind kind : kGenKinds) {
    const bool symmetric = is_symmetric(kind);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || (symmetric && a > b)) continue;
        const Clifford2QGate g{kind, a, b};
        scratch = t;
        scratch.apply(g);
        const double cost = cost_bsf(scratch);
        if (cost < best.cost) best = CandidateScore{g, cost};
      }
    }
  }
  return best;
}

Clifford2QGate forced_move_on_row(const BSFTableau& t, std::size_t row) {
  if (row >= t.num_rows() || t.row_weight(row) < 2) {
    throw Error("forced reduction needs a row of weight >= 2");
  }
  std::optional<Clifford2QGate> best;
  std::size_t best_sum = std::numeric_limits<std::size_t>::max();
  const std::size_t n = t.num_qubits();
  BSFTableau scratch;
  for (std::size_t a = 0; a < n; ++a) {
    const Pauli pa = t.letter(row, a);
    if (pa == Pauli::I) continue;
    for (std::size_t b = 0; b < n; ++b) {
      const Pauli pb = t.letter(row, b);
      if (b == a || pb == Pauli::I) continue;
      for (GenKind kind : kGenKinds) {
        if (target_axis(kind) != pb || !anticommute(control_axis(kind), pa)) continue;
        const Clifford2QGate g{kind, a, b};
        scratch = t;
        scratch.apply(g);
        const std::size_t sum = scratch.weight_sum();
        if (sum < best_sum) {
          best_sum = sum;
          best = g;
        }
      }
    }
  }
  // Every target axis is paired with two distinct control axes in the
  // generator set, and a non-identity letter commutes with only one of them.
  if (!best) throw Error("no admissible forced move");
  return *best;
}

Clifford2QGate forced_reduction_move(const BSFTableau& t) {
  if (total_weight(t) <= 2) throw Error("forced reduction requested on a simplified tableau");
  std::size_t row = 0;
  std::size_t max_w = 0;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    const std::size_t w = t.row_weight(r);
    if (w > max_w) {
      max_w = w;
      row = r;
    }
  }
  return forced_move_on_row(t, row);
}

namespace {

std::optional<std::size_t> find_source(const BSFTableau& t, std::size_t source) {
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    if (t.source(r) == source) return r;
  }
  return std::nullopt;
}

std::size_t first_max_weight_row(const BSFTableau& t) {
  std::size_t row = 0, max_w = 0;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    if (t.row_weight(r) > max_w) {
      max_w = t.row_weight(r);
      row = r;
    }
  }
  return row;
}

}  // namespace

SimplifiedGroup simplify_group(BSFTableau t, const SimplifyConfig& cfg) {
  SimplifiedGroup sg;
  sg.qubit_map = t.qubit_map();
  const std::size_t budget = cfg.max_epochs != 0 ? cfg.max_epochs : 4 * t.weight_sum();
  const std::size_t n = t.num_qubits();

  int cost_stall = 0;
  int weight_stall = 0;
  // Once forced, keep reducing the same row until it is peeled off.
  std::optional<std::size_t> locked_source;

  std::vector<LocalRow> locals = t.pop_local_rows();
  while (total_weight(t) > 2) {
    if (locked_source && !find_source(t, *locked_source)) {
      locked_source.reset();
      cost_stall = weight_stall = 0;
    }
    // Reserve enough epochs to finish by peeling rows one at a time.
    const bool out_of_budget = sg.epochs.size() + t.num_rows() * (n - 1) >= budget;
    const bool stalled = cost_stall >= cfg.cost_stall_limit || weight_stall >= cfg.weight_stall_limit;

    Epoch epoch;
    epoch.locals = std::move(locals);
    if (locked_source || stalled || out_of_budget) {
      if (!locked_source) locked_source = t.source(first_max_weight_row(t));
      epoch.cliff = forced_move_on_row(t, *find_source(t, *locked_source));
      epoch.forced = true;
      t.apply(epoch.cliff);
    } else {
      const double cost_before = cost_bsf(t);
      const std::size_t weight_before = t.weight_sum();
      const CandidateScore best = best_candidate(t);
      epoch.cliff = best.gate;
      t.apply(epoch.cliff);
      cost_stall = best.cost < cost_before ? 0 : cost_stall + 1;
      weight_stall = t.weight_sum() < weight_before ? 0 : weight_stall + 1;
    }
    sg.epochs.push_back(std::move(epoch));
    locals = t.pop_local_rows();
  }

  sg.trailing_locals = std::move(locals);
  sg.final = std::move(t);

  for (std::size_t r = 0; r < sg.final.num_rows(); ++r) {
    sg.reported_order.push_back(sg.final.origin_id(r));
    sg.reported_sources.push_back(sg.final.source(r));
  }
  for (const auto& l : sg.trailing_locals) {
    sg.reported_order.push_back(l.origin_id);
    sg.reported_sources.push_back(l.source);
  }
  for (auto it = sg.epochs.rbegin(); it != sg.epochs.rend(); ++it) {
    for (const auto& l : it->locals) {
      sg.reported_order.push_back(l.origin_id);
      sg.reported_sources.push_back(l.source);
    }
  }
  return sg;
}

namespace {

void emit_local(const LocalRow& l, Circuit& c) {
  c.push(Gate::rotation(l.letter, l.qubit, 2.0 * (l.negative ? -l.angle : l.angle)));
}

void emit_row(const BSFTableau& t, std::size_t r, Circuit& c) {
  std::vector<std::size_t> cols;
  for (std::size_t q = 0; q < t.num_qubits(); ++q) {
    if (t.letter(r, q) != Pauli::I) cols.push_back(q);
  }
  const double phi = 2.0 * (t.negative(r) ? -t.angle(r) : t.angle(r));
  if (cols.size() == 1) {
    c.push(Gate::rotation(t.letter(r, cols[0]), cols[0], phi));
  } else if (cols.size() == 2) {
    c.push(Gate::pauli_rot2(t.letter(r, cols[0]), t.letter(r, cols[1]), cols[0], cols[1], phi));
  } else {
    throw Error("simplified rows must have weight at most 2");
  }
}

}  // namespace

Circuit emit_group_circuit(const SimplifiedGroup& s) {
  Circuit c(s.qubit_map.size());
  for (const auto& e : s.epochs) c.push(Gate::generator(e.cliff));
  for (std::size_t r = 0; r < s.final.num_rows(); ++r) emit_row(s.final, r, c);
  for (const auto& l : s.trailing_locals) emit_local(l, c);
  for (auto it = s.epochs.rbegin(); it != s.epochs.rend(); ++it) {
    c.push(Gate::generator(it->cliff));
    for (const auto& l : it->locals) emit_local(l, c);
  }
  return c;
}

}  // namespace bsfc
