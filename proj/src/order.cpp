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

#include "bsfc/order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "bsfc/error.hpp"

namespace bsfc {

void OrderConfig::validate() const {
  if (lookahead_k == 0) throw Error("lookahead must be at least 1");
  if (!(similarity_epsilon > 0.0)) throw Error("similarity epsilon must be positive");
}

double depth_cost(std::span<const std::size_t> e_r, std::span<const std::size_t> e_l,
                  DepthModel model, std::size_t block_depth) {
  if (e_r.size() != e_l.size()) {
    throw Error(fmt::format("endian vectors of length {} and {}", e_r.size(), e_l.size()));
  }
  double sum = 0.0;
  bool slidable = true;
  std::size_t slide = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < e_r.size(); ++i) {
    sum += static_cast<double>(e_r[i] + e_l[i]);
    if (e_r[i] == 0 && e_l[i] == 0) slidable = false;
    if (block_depth == 0 || e_l[i] < block_depth) slide = std::min(slide, e_r[i] + e_l[i]);
  }
  const double n = static_cast<double>(e_r.size());
  if (model == DepthModel::AsWritten) return slidable ? sum : sum - n;
  if (slide == std::numeric_limits<std::size_t>::max()) return sum;
  return sum - n * static_cast<double>(slide);
}

double cancellation_adjustment(double cost, std::size_t m, int sides, double n) {
  if (sides < 0 || sides > 2) throw Error("depth_drop_sides must be 0, 1 or 2");
  return cost - 2.0 * static_cast<double>(m) - static_cast<double>(sides) * n;
}

double similarity_factor(const InteractionGraph& tail, const InteractionGraph& head,
                         double epsilon) {
  const std::size_t n = tail.num_vertices();
  if (head.num_vertices() != n) {
    throw Error(fmt::format("interaction graphs on {} and {} vertices", n, head.num_vertices()));
  }
  const auto& d = tail.distances();
  const auto& e = head.distances();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dot = 0.0, nd = 0.0, ne = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = d[i * n + j], b = e[i * n + j];
      dot += a * b;
      nd += a * a;
      ne += b * b;
    }
    if (nd > 0.0 && ne > 0.0) s += dot / (std::sqrt(nd) * std::sqrt(ne));
  }
  return std::max(s, epsilon);
}

namespace {

std::vector<bool> touched_qubits(const Circuit& c) {
  std::vector<bool> t(c.n_qubits, false);
  for (const auto& g : c.gates) {
    for (std::size_t k = 0; k < g.arity(); ++k) t[g.q[k]] = true;
  }
  return t;
}

template <typename It>
InteractionGraph grow(It first, It last, std::size_t n, std::vector<bool> pending) {
  InteractionGraph g(n);
  std::size_t left = static_cast<std::size_t>(std::count(pending.begin(), pending.end(), true));
  for (; first != last && left > 0; ++first) {
    if (!first->is_two_qubit()) continue;
    g.add_edge(first->q[0], first->q[1]);
    for (std::size_t k = 0; k < 2; ++k) {
      if (pending[first->q[k]]) {
        pending[first->q[k]] = false;
        --left;
      }
    }
  }
  return g;
}

bool same_generator(const Gate& a, const Gate& b) {
  if (a.kind != GateKind::Gen || b.kind != GateKind::Gen || a.gen != b.gen) return false;
  if (a.q == b.q) return true;
  return is_symmetric(a.gen) && a.q[0] == b.q[1] && a.q[1] == b.q[0];
}

}  // namespace

std::vector<std::size_t> skyline(const Circuit& c) {
  std::vector<std::size_t> level(c.n_qubits, 0);
  std::size_t depth = 0;
  for (const auto& g : c.gates) {
    if (!g.is_two_qubit()) continue;
    const std::size_t l = std::max(level[g.q[0]], level[g.q[1]]) + 1;
    level[g.q[0]] = level[g.q[1]] = l;
    depth = std::max(depth, l);
  }
  for (auto& v : level) v = depth - v;
  return level;
}

HeadTail head_tail_graphs(const Circuit& c) {
  const auto touched = touched_qubits(c);
  return HeadTail{grow(c.gates.begin(), c.gates.end(), c.n_qubits, touched),
                  grow(c.gates.rbegin(), c.gates.rend(), c.n_qubits, touched)};
}

Cancellation detect_cancellation(const Circuit& prev, const Circuit& next) {
  Cancellation out;
  std::vector<bool> prev_gone(prev.gates.size(), false);
  std::vector<bool> next_gone(next.gates.size(), false);
  const std::size_t n = std::max(prev.n_qubits, next.n_qubits);

  for (;;) {
    // Gates of `prev` not followed by anything on their qubits, and gates of
    // `next` not preceded by anything on theirs.
    std::vector<bool> blocked(n, false);
    std::vector<std::size_t> trailing;
    for (std::size_t i = prev.gates.size(); i-- > 0;) {
      if (prev_gone[i]) continue;
      const Gate& g = prev.gates[i];
      bool free = true;
      for (std::size_t k = 0; k < g.arity(); ++k) free = free && !blocked[g.q[k]];
      if (free && g.kind == GateKind::Gen) trailing.push_back(i);
      for (std::size_t k = 0; k < g.arity(); ++k) blocked[g.q[k]] = true;
    }
    std::fill(blocked.begin(), blocked.end(), false);
    std::vector<std::size_t> leading;
    for (std::size_t i = 0; i < next.gates.size(); ++i) {
      if (next_gone[i]) continue;
      const Gate& g = next.gates[i];
      bool free = true;
      for (std::size_t k = 0; k < g.arity(); ++k) free = free && !blocked[g.q[k]];
      if (free && g.kind == GateKind::Gen) leading.push_back(i);
      for (std::size_t k = 0; k < g.arity(); ++k) blocked[g.q[k]] = true;
    }
    bool found = false;
    for (std::size_t i : trailing) {
      for (std::size_t j : leading) {
        if (same_generator(prev.gates[i], next.gates[j])) {
          prev_gone[i] = next_gone[j] = true;
          out.prev_removed.push_back(i);
          out.next_removed.push_back(j);
          ++out.m;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }

  if (out.m > 0) {
    if (depth_2q(erase_gates(prev, out.prev_removed)) < depth_2q(prev)) ++out.depth_drop_sides;
    if (depth_2q(erase_gates(next, out.next_removed)) < depth_2q(next)) ++out.depth_drop_sides;
  }
  return out;
}

Circuit erase_gates(const Circuit& c, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  Circuit out(c.n_qubits);
  out.gates.reserve(c.gates.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (k < indices.size() && indices[k] == i) {
      ++k;
      continue;
    }
    out.gates.push_back(c.gates[i]);
  }
  return out;
}

AssemblyCandidate::AssemblyCandidate(std::size_t idx, Circuit c) : index(idx), circuit(std::move(c)) {
  refresh();
}

void AssemblyCandidate::refresh() {
  endian = endian_vectors(circuit);
  graphs = head_tail_graphs(circuit);
  const auto touched = touched_qubits(circuit);
  support.clear();
  for (std::size_t q = 0; q < touched.size(); ++q) {
    if (touched[q]) support.push_back(q);
  }
}

double assembly_cost(const AssemblyCandidate& prev, const AssemblyCandidate& next,
                     const OrderConfig& cfg) {
  double cost = depth_cost(prev.endian.right, next.endian.left, cfg.depth_model, next.endian.depth);
  const Cancellation canc = detect_cancellation(prev.circuit, next.circuit);
  if (canc.m > 0) {
    std::vector<std::size_t> joint;
    std::set_union(prev.support.begin(), prev.support.end(), next.support.begin(),
                   next.support.end(), std::back_inserter(joint));
    cost = cancellation_adjustment(cost, canc.m, canc.depth_drop_sides,
                                   static_cast<double>(joint.size()));
  }
  if (cfg.hardware_aware && cfg.use_similarity) {
    const double s = similarity_factor(prev.graphs.tail, next.graphs.head, cfg.similarity_epsilon);
    // Dividing a negative cost by s would penalize similarity.
    cost = cost >= 0.0 ? cost / s : cost * s;
  }
  return cost;
}

AssemblyResult assemble(std::span<const Circuit> groups, const OrderConfig& cfg) {
  cfg.validate();
  AssemblyResult result;
  if (groups.empty()) return result;
  std::size_t n = 0;
  for (const auto& g : groups) n = std::max(n, g.n_qubits);

  std::vector<AssemblyCandidate> pool;
  pool.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Circuit c = groups[i];
    c.n_qubits = n;
    pool.emplace_back(i, std::move(c));
  }
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
    return a.support.size() > b.support.size();
  });

  // `placed` keeps the committed blocks; `frontier` is what candidates are
  // scored against and is rebuilt after every commit.
  std::vector<AssemblyCandidate> placed;
  placed.push_back(std::move(pool.front()));
  pool.erase(pool.begin());
  AssemblyCandidate frontier = placed.back();

  while (!pool.empty()) {
    const std::size_t window = std::min(cfg.lookahead_k, pool.size());
    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < window; ++j) {
      const double c = assembly_cost(frontier, pool[j], cfg);
      if (c < best_cost) {
        best_cost = c;
        best = j;
      }
    }
    AssemblyCandidate next = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));

    if (cfg.frontier == Frontier::LastBlock) {
      AssemblyCandidate& last = placed.back();
      const Cancellation canc = detect_cancellation(last.circuit, next.circuit);
      if (canc.m > 0) {
        last.circuit = erase_gates(last.circuit, canc.prev_removed);
        next.circuit = erase_gates(next.circuit, canc.next_removed);
        last.refresh();
        next.refresh();
        result.cancelled_pairs += canc.m;
      }
      placed.push_back(std::move(next));
      frontier = placed.back();
    } else {
      const Cancellation canc = detect_cancellation(frontier.circuit, next.circuit);
      if (canc.m > 0) {
        frontier.circuit = erase_gates(frontier.circuit, canc.prev_removed);
        next.circuit = erase_gates(next.circuit, canc.next_removed);
        result.cancelled_pairs += canc.m;
      }
      result.order.push_back(next.index);
      frontier.circuit.append(next.circuit);
      frontier.refresh();
      frontier.endian.right = skyline(frontier.circuit);
    }
  }

  if (cfg.frontier == Frontier::Assembled) {
    result.order.insert(result.order.begin(), placed.front().index);
    result.circuit = peephole(frontier.circuit);
    return result;
  }
  result.circuit = Circuit(n);
  for (const auto& p : placed) {
    result.order.push_back(p.index);
    result.circuit.append(p.circuit);
  }
  result.circuit = peephole(result.circuit);
  return result;
}

}  // namespace bsfc
