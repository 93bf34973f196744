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

#include "bsfc/route.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bsfc/error.hpp"
#include "text_util.hpp"

namespace bsfc {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

Gate remap(const Gate& g, const Layout& l) {
  Gate out = g;
  for (std::size_t k = 0; k < g.arity(); ++k) out.q[k] = l[g.q[k]];
  for (auto& inner : out.payload) inner = remap(inner, l);
  return out;
}

}  // namespace

CouplingGraph::CouplingGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), adj_(n) {
  if (n == 0) throw Error("coupling graph has no qubits");
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error(fmt::format("edge ({}, {}) outside {} qubits", a, b, n));
    if (a == b) throw Error(fmt::format("self-loop on qubit {}", a));
    if (a > b) std::swap(a, b);
    if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) continue;
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edges_.emplace_back(a, b);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  dist_.assign(n * n, kUnreached);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t* d = dist_.data() + s * n;
    d[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj_[v]) {
        if (d[w] == kUnreached) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<std::size_t> comp(n, kUnreached);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t v = 0; v < n; ++v) {
    if (comp[v] != kUnreached) continue;
    components.emplace_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (dist_[v * n + w] != kUnreached) {
        comp[w] = components.size() - 1;
        components.back().push_back(w);
      }
    }
  }
  if (components.size() > 1) {
    std::string parts;
    for (const auto& c : components) parts += fmt::format(" {{{}}}", fmt::join(c, ","));
    throw Error(fmt::format("coupling graph is disconnected; components:{}", parts));
  }
}

std::size_t CouplingGraph::step_towards(std::size_t a, std::size_t b) const {
  for (std::size_t w : adj_[a]) {
    if (distance(w, b) + 1 == distance(a, b)) return w;
  }
  throw Error("no path between qubits");
}

CouplingGraph heavy_hex(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error("heavy-hex needs at least one row and one column");
  // rows + 1 horizontal lines joined by bridge qubits. Gap r carries bridges at
  // positions off(r) + 4k, k = 0..cols, with off(r) = 0 for even r and 2 for
  // odd r. Interior lines span positions 0..4*cols+2; the top line spans
  // 0..4*cols+1 and the bottom line is the same length, shifted to end at the
  // last bridge column plus one.
  auto offset = [](std::size_t r) -> std::size_t { return r % 2 == 0 ? 0 : 2; };
  struct Line {
    std::size_t first_pos, last_pos, base;
  };
  std::vector<Line> lines(rows + 1);
  std::vector<std::vector<std::size_t>> bridges(rows);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t next = 0;
  for (std::size_t r = 0; r <= rows; ++r) {
    Line& line = lines[r];
    if (r == 0) {
      line.first_pos = 0;
      line.last_pos = 4 * cols + 1;
    } else if (r == rows) {
      line.first_pos = offset(rows - 1) == 0 ? 0 : 1;
      line.last_pos = line.first_pos + 4 * cols + 1;
    } else {
      line.first_pos = 0;
      line.last_pos = 4 * cols + 2;
    }
    line.base = next;
    next += line.last_pos - line.first_pos + 1;
    for (std::size_t p = line.first_pos; p < line.last_pos; ++p) {
      edges.emplace_back(line.base + p - line.first_pos, line.base + p + 1 - line.first_pos);
    }
    if (r < rows) {
      for (std::size_t k = 0; k <= cols; ++k) bridges[r].push_back(next++);
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k <= cols; ++k) {
      const std::size_t pos = offset(r) + 4 * k;
      const Line& up = lines[r];
      const Line& down = lines[r + 1];
      edges.emplace_back(up.base + pos - up.first_pos, bridges[r][k]);
      edges.emplace_back(bridges[r][k], down.base + pos - down.first_pos);
    }
  }
  return CouplingGraph(next, std::move(edges));
}

CouplingGraph all_to_all(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return CouplingGraph(n, std::move(edges));
}

CouplingGraph line_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return CouplingGraph(n, std::move(edges));
}

CouplingGraph parse_coupling(std::istream& in, std::vector<std::string>* warnings) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    const auto fields = detail::split_ws(line);
    if (!n) {
      if (fields.size() != 1) throw ParseError(line_no, "expected the qubit count");
      const auto v = detail::parse_int(fields[0]);
      if (!v || *v <= 0) throw ParseError(line_no, "qubit count must be a positive integer");
      n = static_cast<std::size_t>(*v);
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected an edge 'a b'");
    const auto a = detail::parse_int(fields[0]);
    const auto b = detail::parse_int(fields[1]);
    if (!a || !b || *a < 0 || *b < 0) throw ParseError(line_no, "edge endpoints must be integers");
    const auto ua = static_cast<std::size_t>(*a), ub = static_cast<std::size_t>(*b);
    if (ua >= *n || ub >= *n) {
      throw ParseError(line_no, fmt::format("edge ({}, {}) outside {} qubits", ua, ub, *n));
    }
    if (ua == ub) throw ParseError(line_no, fmt::format("self-loop on qubit {}", ua));
    const auto key = std::minmax(ua, ub);
    if (std::find(seen.begin(), seen.end(), std::pair(key.first, key.second)) != seen.end()) {
      if (warnings) warnings->push_back(fmt::format("line {}: duplicate edge ({}, {})", line_no, ua, ub));
      continue;
    }
    seen.emplace_back(key.first, key.second);
    edges.emplace_back(ua, ub);
  }
  if (!n) throw Error("coupling file is empty");
  return CouplingGraph(*n, std::move(edges));
}

CouplingGraph load_coupling(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open coupling file '{}'", path));
  return parse_coupling(in, warnings);
}

Layout trivial_layout(std::size_t n) {
  Layout l(n);
  std::iota(l.begin(), l.end(), std::size_t{0});
  return l;
}

Layout inverse_layout(const Layout& l) {
  Layout inv(l.size(), kUnreached);
  for (std::size_t v = 0; v < l.size(); ++v) {
    if (l[v] >= l.size() || inv[l[v]] != kUnreached) throw Error("layout is not a permutation");
    inv[l[v]] = v;
  }
  return inv;
}

namespace {

class Router {
 public:
  Router(const Circuit& c, const CouplingGraph& g, const RouterConfig& cfg, Layout layout)
      : c_(c), g_(g), cfg_(cfg), layout_(std::move(layout)), rng_(cfg.seed),
        decay_(g.num_qubits(), 1.0) {
    inv_ = inverse_layout(layout_);
    const std::size_t m = c.gates.size();
    succ_.resize(m);
    preds_.assign(m, 0);
    std::vector<std::size_t> last(c.n_qubits, kUnreached);
    for (std::size_t i = 0; i < m; ++i) {
      const Gate& gt = c.gates[i];
      for (std::size_t k = 0; k < gt.arity(); ++k) {
        const std::size_t q = gt.q[k];
        if (last[q] != kUnreached && (succ_[last[q]].empty() || succ_[last[q]].back() != i)) {
          succ_[last[q]].push_back(i);
          ++preds_[i];
        }
        last[q] = i;
      }
      if (preds_[i] == 0) front_.push_back(i);
    }
  }

  RoutingResult run() {
    RoutingResult r;
    r.initial = layout_;
    r.circuit = Circuit(g_.num_qubits());
    const std::size_t valve = 10 + 2 * g_.num_qubits();
    std::size_t stalled = 0, since_reset = 0;

    while (!front_.empty()) {
      if (execute_ready(r.circuit)) {
        stalled = 0;
        std::fill(decay_.begin(), decay_.end(), 1.0);
        since_reset = 0;
        continue;
      }
      if (stalled >= valve) {
        // Livelock guard: walk the oldest blocked gate together.
        const Gate& gt = c_.gates[front_.front()];
        std::size_t pa = layout_[gt.q[0]];
        const std::size_t pb = layout_[gt.q[1]];
        while (!g_.adjacent(pa, pb)) {
          const std::size_t hop = g_.step_towards(pa, pb);
          do_swap(pa, hop, r);
          pa = hop;
        }
        stalled = 0;
        continue;
      }
      const auto [a, b] = choose_swap();
      do_swap(a, b, r);
      decay_[a] += cfg_.decay_delta;
      decay_[b] += cfg_.decay_delta;
      ++stalled;
      if (++since_reset >= cfg_.decay_reset_interval) {
        std::fill(decay_.begin(), decay_.end(), 1.0);
        since_reset = 0;
      }
    }
    r.final = layout_;
    return r;
  }

 private:
  bool executable(const Gate& gt) const {
    return !gt.is_two_qubit() || g_.adjacent(layout_[gt.q[0]], layout_[gt.q[1]]);
  }

  bool execute_ready(Circuit& out) {
    bool any = false;
    for (bool progress = true; progress;) {
      progress = false;
      std::vector<std::size_t> next;
      for (std::size_t i : front_) {
        if (!executable(c_.gates[i])) {
          next.push_back(i);
          continue;
        }
        out.push(remap(c_.gates[i], layout_));
        progress = any = true;
        for (std::size_t s : succ_[i]) {
          if (--preds_[s] == 0) next.push_back(s);
        }
      }
      std::sort(next.begin(), next.end());
      front_ = std::move(next);
    }
    return any;
  }

  std::vector<std::size_t> extended_set() const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> pending = preds_;
    std::deque<std::size_t> queue(front_.begin(), front_.end());
    while (!queue.empty() && out.size() < cfg_.extended_set_size) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t s : succ_[i]) {
        if (--pending[s] != 0) continue;
        if (c_.gates[s].is_two_qubit()) {
          out.push_back(s);
          if (out.size() >= cfg_.extended_set_size) break;
        }
        queue.push_back(s);
      }
    }
    return out;
  }

  double distance_sum(const std::vector<std::size_t>& gates) const {
    double s = 0.0;
    for (std::size_t i : gates) {
      const Gate& gt = c_.gates[i];
      if (gt.is_two_qubit()) s += static_cast<double>(g_.distance(layout_[gt.q[0]], layout_[gt.q[1]]));
    }
    return s;
  }

  std::pair<std::size_t, std::size_t> choose_swap() {
    std::vector<std::pair<std::size_t, std::size_t>> cands;
    for (std::size_t i : front_) {
      const Gate& gt = c_.gates[i];
      if (!gt.is_two_qubit()) continue;
      for (std::size_t k = 0; k < 2; ++k) {
        const std::size_t p = layout_[gt.q[k]];
        for (std::size_t w : g_.neighbors(p)) cands.emplace_back(std::min(p, w), std::max(p, w));
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    const auto ext = extended_set();
    std::size_t n_front = 0;
    for (std::size_t i : front_) n_front += c_.gates[i].is_two_qubit() ? 1 : 0;

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::size_t, std::size_t>> ties;
    for (auto [a, b] : cands) {
      swap_layout(a, b);
      double h = distance_sum(front_) / static_cast<double>(n_front);
      if (!ext.empty()) h += cfg_.extended_weight * distance_sum(ext) / static_cast<double>(ext.size());
      h *= std::max(decay_[a], decay_[b]);
      swap_layout(a, b);
      if (h < best - 1e-12) {
        best = h;
        ties.assign(1, {a, b});
      } else if (h <= best + 1e-12) {
        ties.emplace_back(a, b);
      }
    }
    return ties[ties.size() == 1 ? 0 : rng_() % ties.size()];
  }

  void swap_layout(std::size_t pa, std::size_t pb) {
    const std::size_t va = inv_[pa], vb = inv_[pb];
    std::swap(inv_[pa], inv_[pb]);
    layout_[va] = pb;
    layout_[vb] = pa;
  }

  void do_swap(std::size_t pa, std::size_t pb, RoutingResult& r) {
    swap_layout(pa, pb);
    r.circuit.push(Gate::swap(pa, pb));
    ++r.swap_count;
  }

  const Circuit& c_;
  const CouplingGraph& g_;
  const RouterConfig& cfg_;
  Layout layout_;
  Layout inv_;
  std::mt19937_64 rng_;
  std::vector<double> decay_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::size_t> preds_;
  std::vector<std::size_t> front_;
};

}  // namespace

RoutingResult sabre_route(const Circuit& c, const CouplingGraph& g, const RouterConfig& cfg,
                          Layout initial) {
  if (c.n_qubits > g.num_qubits()) {
    throw Error(fmt::format("circuit needs {} qubits, device has {}", c.n_qubits, g.num_qubits()));
  }
  c.validate();
  if (initial.empty()) {
    initial = trivial_layout(g.num_qubits());
  } else if (initial.size() != g.num_qubits()) {
    throw Error("initial layout must cover the physical register");
  }
  if (cfg.reverse_traversal) {
    const Layout forward_end = Router(c, g, cfg, initial).run().final;
    initial = Router(reversed(c), g, cfg, forward_end).run().final;
  }
  return Router(c, g, cfg, std::move(initial)).run();
}

Circuit decompose_swap(const Circuit& c) {
  Circuit out(c.n_qubits);
  out.gates.reserve(c.gates.size());
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Swap) {
      out.push(Gate::cx(g.q[0], g.q[1]));
      out.push(Gate::cx(g.q[1], g.q[0]));
      out.push(Gate::cx(g.q[0], g.q[1]));
    } else {
      out.push(g);
    }
  }
  return out;
}

bool respects_coupling(const Circuit& c, const CouplingGraph& g) {
  for (const auto& gt : c.gates) {
    if (!gt.is_two_qubit()) continue;
    if (gt.q[0] >= g.num_qubits() || gt.q[1] >= g.num_qubits()) return false;
    if (!g.adjacent(gt.q[0], gt.q[1])) return false;
  }
  return true;
}

}  // namespace bsfc
