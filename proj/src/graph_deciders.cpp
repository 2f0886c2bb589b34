#include <chrono>

#include "loctest/deciders.hpp"

namespace loctest {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Word must_path(const GraphView& g, std::size_t from, std::size_t to, bool nonempty) {
  auto w = shortest_word(g, from, to, nonempty);
  if (!w) throw std::logic_error("expected path missing in product graph");
  return *w;
}

// Shared Γ² analysis with Γ³ built on first use.
class GraphContext {
 public:
  GraphContext(const Dfa& d, const GraphOptions& opts)
      : dfa_(d), opts_(opts), pairs_(d, opts.product_cap) {}

  const PairAnalysis& pairs() const { return pairs_; }
  const TripleAnalysis& triples() {
    if (!triples_) triples_.emplace(dfa_, opts_.product_cap);
    return *triples_;
  }
  std::size_t nodes_visited() const {
    return pairs_.pairs.node_count() + (triples_ ? triples_->triples.node_count() : 0);
  }

  std::optional<Condition2Violation> condition2(Condition2Mode mode) const {
    return opts_.reference_scan ? condition2_scan_reference(pairs_, mode)
                                : condition2_scan(pairs_, mode);
  }

  Word pair_unit(Pair t) const {
    return must_path(pairs_.pairs.graph(), pairs_.pairs.pair(t[0], t[1]),
                     pairs_.pairs.pair(t[0], t[1]), true);
  }
  Word pair_path(Pair from, Pair to) const {
    const auto& pg = pairs_.pairs;
    return must_path(pg.graph(), pg.pair(from[0], from[1]), pg.pair(to[0], to[1]), false);
  }
  Word triple_unit(const Triple& t) {
    const auto& tg = triples().triples;
    std::size_t node = tg.triple(t[0], t[1], t[2]);
    return must_path(tg.graph(), node, node, true);
  }

 private:
  const Dfa& dfa_;
  GraphOptions opts_;
  PairAnalysis pairs_;
  std::optional<TripleAnalysis> triples_;
};

std::optional<Witness> loc_idem_conditions(GraphContext& ctx) {
  const PairAnalysis& pa = ctx.pairs();
  const auto n = static_cast<State>(pa.n());

  // 1. (p, q) and (q, p) never share a component of Γ² for p != q.
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      if (p == q) continue;
      if (pa.pair_scc.same_component(pa.pairs.pair(p, q), pa.pairs.pair(q, p))) {
        GraphCondition1 w;
        w.source = PropertyId::LocallyIdempotent;
        w.p = p;
        w.q = q;
        w.u = ctx.pair_path({p, q}, {q, p});
        w.v = w.u;
        return w;
      }
    }
  }

  // 2. pw ⪰ q implies qw ⪰ q for SCC-nodes (p, q).
  if (auto v = ctx.condition2(Condition2Mode::RightOrIdem)) {
    GraphCondition2 w;
    w.source = PropertyId::LocallyIdempotent;
    w.root = v->root;
    w.reached = v->reached;
    w.letter = v->letter;
    w.path = v->path;
    w.unit = ctx.pair_unit(v->root);
    return w;
  }

  // 3. No SCC-node (p, q, r) of Γ³ with distinct components has (p, q) ⪰ (q, r).
  TripleSet locid = triple_sets(pa, ctx.triples(), TripleKind::LocId);
  if (!locid.members.empty()) {
    const Triple t = locid.members.front();
    GraphCondition3 w;
    w.source = PropertyId::LocallyIdempotent;
    w.triple = t;
    w.unit = ctx.triple_unit(t);
    w.w = ctx.pair_path({t[0], t[1]}, {t[1], t[2]});
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> right_lt_conditions(GraphContext& ctx) {
  const PairAnalysis& pa = ctx.pairs();
  const std::size_t n = pa.n();

  // 1. An SCC-node (p, q) of Γ² with p ∼ q has p = q.
  for (std::size_t node = 0; node < n * n; ++node) {
    if (!pa.pair_scc.on_cycle[node]) continue;
    const auto p = static_cast<State>(node / n);
    const auto q = static_cast<State>(node % n);
    if (p == q || !pa.base_scc.same_component(p, q)) continue;
    const GraphView g = pa.dfa->graph();
    GraphCondition1 w;
    w.source = PropertyId::RightLT;
    w.p = p;
    w.q = q;
    w.u = must_path(g, p, q, false);
    w.v = must_path(g, q, p, false);
    w.unit = ctx.pair_unit({p, q});
    return w;
  }

  // 2. Same pair-graph condition as for local idempotency.
  if (auto v = ctx.condition2(Condition2Mode::RightOrIdem)) {
    GraphCondition2 w;
    w.source = PropertyId::RightLT;
    w.root = v->root;
    w.reached = v->reached;
    w.letter = v->letter;
    w.path = v->path;
    w.unit = ctx.pair_unit(v->root);
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> left_lt_conditions(GraphContext& ctx) {
  // 1. Local idempotency.
  if (auto w = loc_idem_conditions(ctx)) return w;

  // 2. pw ⪰ q iff qw ⪰ q for SCC-nodes (p, q) with p ⪰ q.
  if (auto v = ctx.condition2(Condition2Mode::Left)) {
    GraphCondition2 w;
    w.source = PropertyId::LeftLT;
    w.root = v->root;
    w.reached = v->reached;
    w.letter = v->letter;
    w.path = v->path;
    w.unit = ctx.pair_unit(v->root);
    return w;
  }

  // 3. No SCC-node (p, q, r) with (p, q) ⪰ (r, q), (p, r) ⪰ (q, r) and q != r.
  TripleSet left = triple_sets(ctx.pairs(), ctx.triples(), TripleKind::Left);
  for (const Triple& t : left.members) {
    if (!left.contains({t[0], t[2], t[1]})) continue;
    GraphCondition3 w;
    w.source = PropertyId::LeftLT;
    w.triple = t;
    w.unit = ctx.triple_unit(t);
    w.w = ctx.pair_path({t[0], t[1]}, {t[2], t[1]});
    w.w2 = ctx.pair_path({t[0], t[2]}, {t[1], t[2]});
    return w;
  }
  return std::nullopt;
}

template <typename Conditions>
Verdict run_graph(const Dfa& d, const GraphOptions& opts, PropertyId property,
                  Conditions conditions) {
  require_valid(d);
  const auto start = Clock::now();
  GraphContext ctx(d, opts);
  Verdict v;
  v.property = property;
  v.route = Route::Graph;
  v.witness = conditions(ctx);
  v.holds = !v.witness.has_value();
  v.stats.nodes_visited = ctx.nodes_visited();
  v.stats.elapsed_ms = elapsed_ms(start);
  return v;
}

}  // namespace

Verdict decide_loc_idem_graph(const Dfa& d, const GraphOptions& opts) {
  return run_graph(d, opts, PropertyId::LocallyIdempotent, loc_idem_conditions);
}

Verdict decide_right_lt_graph(const Dfa& d, const GraphOptions& opts) {
  return run_graph(d, opts, PropertyId::RightLT, right_lt_conditions);
}

Verdict decide_left_lt_graph(const Dfa& d, const GraphOptions& opts) {
  return run_graph(d, opts, PropertyId::LeftLT, left_lt_conditions);
}

}  // namespace loctest
