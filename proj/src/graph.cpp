#include "loctest/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace loctest {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

SccIndex scc(const GraphView& g) {
  const std::size_t n = g.nodes;
  const std::size_t letters = g.letters;
  std::vector<std::uint32_t> index(n, kNone);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  SccIndex out;
  out.component.assign(n, kNone);

  struct Frame {
    std::uint32_t node;
    std::uint32_t letter;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;
  std::uint32_t comps = 0;

  auto push = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    call.push_back({v, 0});
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    push(static_cast<std::uint32_t>(root));
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.letter < letters) {
        std::uint32_t v = f.node;
        State t = g.successor(v, f.letter++);
        if (t == kUndefined) continue;
        auto w = static_cast<std::uint32_t>(t);
        if (index[w] == kNone) {
          push(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::uint32_t v = f.node;
      call.pop_back();
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component[w] = comps;
        } while (w != v);
        ++comps;
      }
      if (!call.empty()) {
        std::uint32_t u = call.back().node;
        low[u] = std::min(low[u], low[v]);
      }
    }
  }
  out.component_count = comps;

  std::vector<std::uint32_t> size(comps, 0);
  for (std::size_t v = 0; v < n; ++v) ++size[out.component[v]];
  out.on_cycle.assign(n, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    std::uint32_t cv = out.component[v];
    if (size[cv] > 1) out.on_cycle[v] = 1;
    for (std::size_t a = 0; a < letters; ++a) {
      State t = g.successor(v, a);
      if (t == kUndefined) continue;
      std::uint32_t ct = out.component[static_cast<std::size_t>(t)];
      if (static_cast<std::size_t>(t) == v) out.on_cycle[v] = 1;
      if (ct != cv) edges.emplace_back(cv, ct);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.dag_offsets.assign(comps + 1, 0);
  for (const auto& e : edges) ++out.dag_offsets[e.first + 1];
  for (std::size_t c = 0; c < comps; ++c) out.dag_offsets[c + 1] += out.dag_offsets[c];
  out.dag_targets.reserve(edges.size());
  for (const auto& e : edges) out.dag_targets.push_back(e.second);
  return out;
}

ReachTable reach_table(const GraphView& g, const SccIndex& index) {
  BitMatrix reach(index.component_count, g.nodes);
  for (std::size_t v = 0; v < g.nodes; ++v) reach.set(index.component[v], v);
  // Successor components carry lower ids, so they are complete when used.
  for (std::size_t c = 0; c < index.component_count; ++c) {
    for (auto i = index.dag_offsets[c]; i < index.dag_offsets[c + 1]; ++i) {
      reach.merge_row(c, index.dag_targets[i]);
    }
  }
  return ReachTable(index.component, std::move(reach));
}

ReachTable reach_table(const GraphView& g) { return reach_table(g, scc(g)); }

ProductGraph::ProductGraph(const Dfa& d, std::size_t arity, std::size_t node_cap)
    : arity_(arity), base_(d.state_count()), letters_(d.alphabet_size()), nodes_(1) {
  if (arity < 1) throw std::invalid_argument("product arity must be positive");
  for (std::size_t i = 0; i < arity; ++i) {
    nodes_ *= base_;
    if (nodes_ > node_cap) throw CapExceeded("product graph", node_cap, nodes_);
  }

  next_.assign(nodes_ * letters_, kUndefined);
  std::vector<State> tuple(arity_, 0);
  for (std::size_t node = 0; node < nodes_; ++node) {
    for (std::size_t a = 0; a < letters_; ++a) {
      std::size_t target = 0;
      bool defined = true;
      for (std::size_t i = 0; i < arity_; ++i) {
        State t = d.delta(tuple[i], static_cast<Letter>(a));
        if (t == kUndefined) {
          defined = false;
          break;
        }
        target = target * base_ + static_cast<std::size_t>(t);
      }
      if (defined) next_[node * letters_ + a] = static_cast<State>(target);
    }
    // Advance the mixed-radix odometer; last component varies fastest.
    for (std::size_t i = arity_; i-- > 0;) {
      if (static_cast<std::size_t>(++tuple[i]) < base_) break;
      tuple[i] = 0;
    }
  }
}

std::size_t ProductGraph::encode(std::span<const State> tuple) const {
  std::size_t node = 0;
  for (State s : tuple) node = node * base_ + static_cast<std::size_t>(s);
  return node;
}

std::vector<State> ProductGraph::decode(std::size_t node) const {
  std::vector<State> tuple(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    tuple[i] = static_cast<State>(node % base_);
    node /= base_;
  }
  return tuple;
}

std::vector<std::size_t> scc_nodes(const SccIndex& index) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < index.on_cycle.size(); ++v) {
    if (index.on_cycle[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> scc_nodes(const ProductGraph& pg) {
  return scc_nodes(scc(pg.graph()));
}

std::optional<Word> shortest_word(const GraphView& g, std::size_t from,
                                  std::size_t to, bool nonempty) {
  if (from == to && !nonempty) return Word{};
  std::vector<std::uint32_t> parent(g.nodes, kNone);
  std::vector<Letter> via(g.nodes, 0);
  std::deque<std::uint32_t> queue;
  auto walk_back = [&](std::size_t node, Letter a) {
    Word w{a};
    for (; node != from; node = parent[node]) w.push_back(via[node]);
    std::reverse(w.begin(), w.end());
    return w;
  };
  // Expand `from` without marking it, so a nonempty cycle back to it is found.
  auto expand = [&](std::size_t node) -> std::optional<Word> {
    for (std::size_t a = 0; a < g.letters; ++a) {
      State t = g.successor(node, a);
      if (t == kUndefined) continue;
      auto tn = static_cast<std::size_t>(t);
      if (tn == to) return walk_back(node, static_cast<Letter>(a));
      if (tn == from || parent[tn] != kNone) continue;
      parent[tn] = static_cast<std::uint32_t>(node);
      via[tn] = static_cast<Letter>(a);
      queue.push_back(static_cast<std::uint32_t>(tn));
    }
    return std::nullopt;
  };
  if (auto w = expand(from)) return w;
  while (!queue.empty()) {
    std::size_t node = queue.front();
    queue.pop_front();
    if (auto w = expand(node)) return w;
  }
  return std::nullopt;
}

PairAnalysis::PairAnalysis(const Dfa& d, std::size_t node_cap)
    : dfa(&d),
      base_scc(scc(d.graph())),
      base_reach(reach_table(d.graph(), base_scc)),
      pairs(d, 2, node_cap),
      pair_scc(scc(pairs.graph())) {}

TripleAnalysis::TripleAnalysis(const Dfa& d, std::size_t node_cap)
    : triples(d, 3, node_cap), triple_scc(scc(triples.graph())) {}

bool condition2_violates(const PairAnalysis& pa, Condition2Mode mode, State q,
                         State r, State s, Letter a) {
  const Dfa& d = *pa.dfa;
  bool first = pa.reaches_defined(d.delta(r, a), q);
  bool second = pa.reaches_defined(d.delta(s, a), q);
  return mode == Condition2Mode::RightOrIdem ? (first && !second) : (first != second);
}

namespace {

bool is_root(const PairAnalysis& pa, State p, State q) {
  return pa.pair_scc.on_cycle[pa.pairs.pair(p, q)] && pa.reaches(p, q);
}

bool pair_violates(const PairAnalysis& pa, Condition2Mode mode, State q,
                   std::size_t node, Letter* letter) {
  auto r = static_cast<State>(node / pa.n());
  auto s = static_cast<State>(node % pa.n());
  for (std::size_t a = 0; a < pa.dfa->alphabet_size(); ++a) {
    if (condition2_violates(pa, mode, q, r, s, static_cast<Letter>(a))) {
      if (letter != nullptr) *letter = static_cast<Letter>(a);
      return true;
    }
  }
  return false;
}

std::optional<Condition2Violation> scan_from_root(const PairAnalysis& pa,
                                                  Condition2Mode mode,
                                                  std::size_t root) {
  const GraphView g = pa.pairs.graph();
  const auto n = pa.n();
  const auto q = static_cast<State>(root % n);
  std::vector<std::uint32_t> parent(g.nodes, kNone);
  std::vector<Letter> via(g.nodes, 0);
  std::vector<char> seen(g.nodes, 0);
  std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(root)};
  seen[root] = 1;
  while (!queue.empty()) {
    std::size_t node = queue.front();
    queue.pop_front();
    Letter letter = 0;
    if (pair_violates(pa, mode, q, node, &letter)) {
      Condition2Violation v;
      v.root = {static_cast<State>(root / n), q};
      v.reached = {static_cast<State>(node / n), static_cast<State>(node % n)};
      v.letter = letter;
      for (std::size_t cur = node; cur != root; cur = parent[cur]) v.path.push_back(via[cur]);
      std::reverse(v.path.begin(), v.path.end());
      return v;
    }
    for (std::size_t a = 0; a < g.letters; ++a) {
      State t = g.successor(node, a);
      if (t == kUndefined || seen[static_cast<std::size_t>(t)]) continue;
      auto tn = static_cast<std::size_t>(t);
      seen[tn] = 1;
      parent[tn] = static_cast<std::uint32_t>(node);
      via[tn] = static_cast<Letter>(a);
      queue.push_back(static_cast<std::uint32_t>(tn));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Condition2Violation> condition2_scan_reference(
    const PairAnalysis& pa, Condition2Mode mode) {
  const auto n = pa.n();
  for (std::size_t root = 0; root < n * n; ++root) {
    if (!is_root(pa, static_cast<State>(root / n), static_cast<State>(root % n))) continue;
    if (auto v = scan_from_root(pa, mode, root)) return v;
  }
  return std::nullopt;
}

std::optional<Condition2Violation> condition2_scan(const PairAnalysis& pa,
                                                   Condition2Mode mode) {
  const GraphView g = pa.pairs.graph();
  const auto n = pa.n();
  const std::size_t nodes = g.nodes;

  // Reversed Γ² in CSR form.
  std::vector<std::uint32_t> offsets(nodes + 1, 0);
  for (std::size_t v = 0; v < nodes; ++v) {
    for (std::size_t a = 0; a < g.letters; ++a) {
      State t = g.successor(v, a);
      if (t != kUndefined) ++offsets[static_cast<std::size_t>(t) + 1];
    }
  }
  for (std::size_t v = 0; v < nodes; ++v) offsets[v + 1] += offsets[v];
  std::vector<std::uint32_t> sources(offsets.back());
  {
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t v = 0; v < nodes; ++v) {
      for (std::size_t a = 0; a < g.letters; ++a) {
        State t = g.successor(v, a);
        if (t != kUndefined) sources[fill[static_cast<std::size_t>(t)]++] = static_cast<std::uint32_t>(v);
      }
    }
  }

  std::size_t best = nodes;
  std::vector<char> marked(nodes, 0);
  std::vector<std::uint32_t> stack;
  for (std::size_t qi = 0; qi < n; ++qi) {
    const auto q = static_cast<State>(qi);
    bool any_root = false;
    for (std::size_t p = 0; p < n && !any_root; ++p) {
      if (pa.pairs.pair(static_cast<State>(p), q) >= best) break;
      any_root = is_root(pa, static_cast<State>(p), q);
    }
    if (!any_root) continue;

    std::fill(marked.begin(), marked.end(), 0);
    stack.clear();
    for (std::size_t v = 0; v < nodes; ++v) {
      if (pair_violates(pa, mode, q, v, nullptr)) {
        marked[v] = 1;
        stack.push_back(static_cast<std::uint32_t>(v));
      }
    }
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (auto i = offsets[v]; i < offsets[v + 1]; ++i) {
        std::uint32_t u = sources[i];
        if (!marked[u]) {
          marked[u] = 1;
          stack.push_back(u);
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t root = pa.pairs.pair(static_cast<State>(p), q);
      if (root >= best) break;
      if (marked[root] && is_root(pa, static_cast<State>(p), q)) {
        best = root;
        break;
      }
    }
  }
  if (best == nodes) return std::nullopt;
  return scan_from_root(pa, mode, best);
}

bool TripleSet::contains(const Triple& t) const {
  return std::binary_search(members.begin(), members.end(), t);
}

TripleSet triple_sets(const PairAnalysis& pa, const TripleAnalysis& ta,
                      TripleKind kind) {
  const auto n = pa.n();
  const SccIndex& ps = pa.pair_scc;
  TripleSet out;
  out.kind = kind;
  for (std::size_t qi = 0; qi < n; ++qi) {
    if (!pa.base_scc.on_cycle[qi]) continue;
    const auto q = static_cast<State>(qi);
    // sets row c: states r with (some node of c) ⪰ (q, r) [LocId] or (r, q) [Left]
    BitMatrix sets(ps.component_count, n);
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t node = kind == TripleKind::LocId ? pa.pairs.pair(q, static_cast<State>(r))
                                                   : pa.pairs.pair(static_cast<State>(r), q);
      sets.set(ps.component[node], r);
    }
    for (std::size_t c = 0; c < ps.component_count; ++c) {
      for (auto i = ps.dag_offsets[c]; i < ps.dag_offsets[c + 1]; ++i) {
        sets.merge_row(c, ps.dag_targets[i]);
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (p == qi) continue;
      std::size_t c = ps.component[pa.pairs.pair(static_cast<State>(p), q)];
      if (sets.row_empty(c)) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == qi || !sets.test(c, r)) continue;
        auto ps_ = static_cast<State>(p);
        auto rs = static_cast<State>(r);
        if (ta.triple_scc.on_cycle[ta.triples.triple(ps_, q, rs)]) {
          out.members.push_back({ps_, q, rs});
        }
      }
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace loctest
