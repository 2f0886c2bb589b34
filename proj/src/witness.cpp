#include <chrono>
#include <sstream>

#include "loctest/deciders.hpp"
#include "loctest/text_format.hpp"

namespace loctest {

std::string_view to_string(PropertyId p) {
  switch (p) {
    case PropertyId::LocallyIdempotent: return "loc-idem";
    case PropertyId::RightLT: return "right-lt";
    case PropertyId::LeftLT: return "left-lt";
  }
  return "?";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::Graph: return "graph";
    case Route::Semigroup: return "semigroup";
    case Route::Oracle: return "oracle";
  }
  return "?";
}

PropertyId parse_property(std::string_view s) {
  for (PropertyId p : kAllProperties) {
    if (to_string(p) == s) return p;
  }
  throw std::invalid_argument("unknown property '" + std::string(s) + "'");
}

Route parse_route(std::string_view s) {
  for (Route r : {Route::Graph, Route::Semigroup, Route::Oracle}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown route '" + std::string(s) + "'");
}

namespace {

std::string bracket(const Word& w) { return "[" + format_word(w) + "]"; }

struct Describe {
  std::ostringstream& out;

  void operator()(const GraphCondition1& w) const {
    out << "graph-condition-1 (" << to_string(w.source) << ") p=" << w.p << " q=" << w.q
        << " u=" << bracket(w.u) << " v=" << bracket(w.v);
    if (!w.unit.empty()) out << " unit=" << bracket(w.unit);
  }
  void operator()(const GraphCondition2& w) const {
    out << "graph-condition-2 (" << to_string(w.source) << ") root=(" << w.root[0] << ","
        << w.root[1] << ") reached=(" << w.reached[0] << "," << w.reached[1]
        << ") letter=" << w.letter << " path=" << bracket(w.path)
        << " unit=" << bracket(w.unit);
  }
  void operator()(const GraphCondition3& w) const {
    out << "graph-condition-3 (" << to_string(w.source) << ") triple=(" << w.triple[0] << ","
        << w.triple[1] << "," << w.triple[2] << ") unit=" << bracket(w.unit)
        << " w=" << bracket(w.w);
    if (w.source == PropertyId::LeftLT) out << " w2=" << bracket(w.w2);
  }
  void operator()(const SemigroupIdentity& w) const {
    static constexpr const char* names[] = {"(eae)^2 != eae", "xyx != xy", "xyx != yx"};
    out << "semigroup-identity " << names[static_cast<int>(w.identity)] << " e=" << w.e
        << " a=" << w.a;
    if (w.b) out << " b=" << *w.b;
    if (!w.e_word.empty()) {
      out << " e_word=" << bracket(w.e_word) << " a_word=" << bracket(w.a_word);
      if (w.b) out << " b_word=" << bracket(w.b_word);
    }
  }
  void operator()(const UnitSharing& w) const {
    out << "unit-sharing side=" << (w.side == Side::Right ? "right" : "left") << " e=" << w.e
        << " i=" << w.i << " f=" << w.f;
    if (!w.e_word.empty()) {
      out << " e_word=" << bracket(w.e_word) << " i_word=" << bracket(w.i_word)
          << " f_word=" << bracket(w.f_word);
    }
  }
};

}  // namespace

std::string describe(const Witness& w) {
  std::ostringstream out;
  std::visit(Describe{out}, w);
  return out.str();
}

std::string to_text(const Verdict& v) {
  std::ostringstream out;
  out << "property: " << to_string(v.property) << '\n'
      << "holds: " << (v.holds ? "true" : "false") << '\n'
      << "route: " << to_string(v.route) << '\n';
  if (v.witness) out << "witness: " << describe(*v.witness) << '\n';
  out << "stats: nodes_visited=" << v.stats.nodes_visited
      << " semigroup_order=" << v.stats.semigroup_order
      << " elapsed_ms=" << v.stats.elapsed_ms << '\n';
  return out.str();
}

Instance parse_instance(std::string_view text) {
  const std::string head = text::header_token(text);
  if (head == "dfa") return parse_dfa(text);
  if (head == "semigroup") return parse_cayley(text);
  throw ParseError(1, 1, "expected header 'dfa' or 'semigroup'");
}

Verdict decide(const Instance& instance, PropertyId property, Route route,
               const DecideOptions& opts) {
  if (const auto* s = std::get_if<FiniteSemigroup>(&instance)) {
    switch (route) {
      case Route::Graph:
        throw std::invalid_argument("the graph route needs an automaton, not a semigroup");
      case Route::Oracle: return oracle(*s, property);
      case Route::Semigroup:
        switch (property) {
          case PropertyId::LocallyIdempotent: return decide_loc_idem_semigroup(*s);
          case PropertyId::RightLT: return decide_right_lt_semigroup(*s);
          case PropertyId::LeftLT: return decide_left_lt_semigroup(*s);
        }
    }
    throw std::logic_error("unreachable");
  }
  const Dfa& d = std::get<Dfa>(instance);
  if (route == Route::Graph) {
    switch (property) {
      case PropertyId::LocallyIdempotent: return decide_loc_idem_graph(d, opts.graph);
      case PropertyId::RightLT: return decide_right_lt_graph(d, opts.graph);
      case PropertyId::LeftLT: return decide_left_lt_graph(d, opts.graph);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const TransitionSemigroup ts = transition_semigroup(d, opts.semigroup_cap);
  Verdict v = decide(Instance{ts.semigroup}, property, route, opts);
  v.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return v;
}

// ---------------------------------------------------------------------------
// Witness verification

namespace {

bool source_covers(PropertyId source, PropertyId property) {
  return source == property || source == PropertyId::LocallyIdempotent;
}

class DfaChecker {
 public:
  explicit DfaChecker(const Dfa& d) : d_(d) {}

  void state(State s) const {
    if (s < 0 || static_cast<std::size_t>(s) >= d_.state_count()) {
      throw MalformedWitness("state " + std::to_string(s) + " out of range");
    }
  }
  void word(const Word& w) const {
    for (Letter a : w) letter(a);
  }
  void letter(Letter a) const {
    if (a < 0 || static_cast<std::size_t>(a) >= d_.alphabet_size()) {
      throw MalformedWitness("letter " + std::to_string(a) + " out of range");
    }
  }
  State at(State p, const Word& w) const { return apply(d_, p, w); }
  bool reaches(State p, State q) const {
    if (!reach_) reach_.emplace(reach_table(d_.graph()));
    return p != kUndefined && reach_->reaches(static_cast<std::size_t>(p),
                                              static_cast<std::size_t>(q));
  }
  const Dfa& dfa() const { return d_; }

 private:
  const Dfa& d_;
  mutable std::optional<ReachTable> reach_;
};

bool verify_graph(const DfaChecker& c, PropertyId property, const GraphCondition1& w) {
  c.state(w.p);
  c.state(w.q);
  c.word(w.u);
  c.word(w.v);
  c.word(w.unit);
  if (!source_covers(w.source, property) || w.p == w.q || w.u.empty() || w.v.empty()) {
    return false;
  }
  if (c.at(w.p, w.u) != w.q || c.at(w.q, w.v) != w.p) return false;
  if (w.source == PropertyId::LocallyIdempotent) return w.u == w.v;
  if (w.source == PropertyId::RightLT) {
    return !w.unit.empty() && c.at(w.p, w.unit) == w.p && c.at(w.q, w.unit) == w.q;
  }
  return false;
}

bool verify_graph(const DfaChecker& c, PropertyId property, const GraphCondition2& w) {
  for (State s : {w.root[0], w.root[1], w.reached[0], w.reached[1]}) c.state(s);
  c.word(w.path);
  c.word(w.unit);
  c.letter(w.letter);
  if (!source_covers(w.source, property) || w.unit.empty()) return false;
  const auto [p, q] = w.root;
  const auto [r, s] = w.reached;
  if (c.at(p, w.unit) != p || c.at(q, w.unit) != q) return false;
  if (!c.reaches(p, q)) return false;
  if (c.at(p, w.path) != r || c.at(q, w.path) != s) return false;
  const bool first = c.reaches(c.dfa().delta(r, w.letter), q);
  const bool second = c.reaches(c.dfa().delta(s, w.letter), q);
  return w.source == PropertyId::LeftLT ? first != second : (first && !second);
}

bool verify_graph(const DfaChecker& c, PropertyId property, const GraphCondition3& w) {
  for (State s : w.triple) c.state(s);
  c.word(w.unit);
  c.word(w.w);
  c.word(w.w2);
  const auto [p, q, r] = w.triple;
  if (!source_covers(w.source, property) || w.unit.empty()) return false;
  if (p == q || q == r || p == r) return false;
  if (c.at(p, w.unit) != p || c.at(q, w.unit) != q || c.at(r, w.unit) != r) return false;
  if (w.source == PropertyId::LocallyIdempotent) {
    return c.at(p, w.w) == q && c.at(q, w.w) == r;
  }
  if (w.source == PropertyId::LeftLT) {
    return c.at(p, w.w) == r && c.at(q, w.w) == q && c.at(p, w.w2) == q && c.at(r, w.w2) == r;
  }
  return false;
}

template <typename T, typename Mul>
bool check_identity(Identity identity, const T& e, const T& a, const std::optional<T>& b,
                    Mul mul) {
  if (mul(e, e) != e) return false;
  const T x = mul(mul(e, a), e);
  if (identity == Identity::LocalIdempotency) return mul(x, x) != x;
  if (!b) throw MalformedWitness("identity witness lacks the second element");
  const T y = mul(mul(e, *b), e);
  const T xy = mul(x, y);
  const T xyx = mul(xy, x);
  return identity == Identity::RightIdentity ? xyx != xy : xyx != mul(y, x);
}

template <typename T, typename Mul>
bool check_unit_sharing(Side side, const T& e, const T& i, const T& f, Mul mul) {
  if (e == i || mul(e, e) != e || mul(i, i) != i) return false;
  if (side == Side::Right) {
    return mul(e, i) == i && mul(i, e) == e && mul(e, f) == e && mul(i, f) == i;
  }
  return mul(e, i) == e && mul(i, e) == i && mul(f, e) == e && mul(f, i) == i;
}

bool identity_covers(Identity identity, PropertyId property) {
  switch (identity) {
    case Identity::LocalIdempotency: return true;
    case Identity::RightIdentity: return property == PropertyId::RightLT;
    case Identity::LeftIdentity: return property == PropertyId::LeftLT;
  }
  return false;
}

bool side_covers(Side side, PropertyId property) {
  return side == Side::Right ? property == PropertyId::RightLT : property == PropertyId::LeftLT;
}

using Map = std::vector<State>;

Map compose(const Map& f, const Map& g) {
  Map out(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) {
    out[p] = f[p] == kUndefined ? kUndefined : g[static_cast<std::size_t>(f[p])];
  }
  return out;
}

Map word_map(const DfaChecker& c, const Word& w) {
  if (w.empty()) throw MalformedWitness("witness lacks an element word");
  c.word(w);
  return action(c.dfa(), w);
}

struct Verifier {
  const Instance& instance;
  PropertyId property;

  const Dfa& need_dfa() const {
    const auto* d = std::get_if<Dfa>(&instance);
    if (d == nullptr) throw MalformedWitness("graph witness needs an automaton instance");
    return *d;
  }

  template <typename G>
  bool graph(const G& w) const {
    DfaChecker c(need_dfa());
    return verify_graph(c, property, w);
  }
  bool operator()(const GraphCondition1& w) const { return graph(w); }
  bool operator()(const GraphCondition2& w) const { return graph(w); }
  bool operator()(const GraphCondition3& w) const { return graph(w); }

  void element(const FiniteSemigroup& s, Element x) const {
    if (x >= s.order()) throw MalformedWitness("element " + std::to_string(x) + " out of range");
  }

  bool operator()(const SemigroupIdentity& w) const {
    if (!identity_covers(w.identity, property)) return false;
    if (const auto* s = std::get_if<FiniteSemigroup>(&instance)) {
      element(*s, w.e);
      element(*s, w.a);
      if (w.b) element(*s, *w.b);
      auto mul = [s](Element x, Element y) { return s->product(x, y); };
      return check_identity<Element>(w.identity, w.e, w.a, w.b, mul);
    }
    DfaChecker c(std::get<Dfa>(instance));
    std::optional<Map> b;
    if (w.b) b = word_map(c, w.b_word);
    return check_identity<Map>(w.identity, word_map(c, w.e_word), word_map(c, w.a_word), b,
                               compose);
  }

  bool operator()(const UnitSharing& w) const {
    if (!side_covers(w.side, property)) return false;
    if (const auto* s = std::get_if<FiniteSemigroup>(&instance)) {
      element(*s, w.e);
      element(*s, w.i);
      element(*s, w.f);
      auto mul = [s](Element x, Element y) { return s->product(x, y); };
      return check_unit_sharing<Element>(w.side, w.e, w.i, w.f, mul);
    }
    DfaChecker c(std::get<Dfa>(instance));
    return check_unit_sharing<Map>(w.side, word_map(c, w.e_word), word_map(c, w.i_word),
                                   word_map(c, w.f_word), compose);
  }
};

}  // namespace

bool verify_witness(const Instance& instance, const Verdict& v) {
  if (!v.witness) throw MalformedWitness("verdict carries no witness");
  return std::visit(Verifier{instance, v.property}, *v.witness);
}

}  // namespace loctest
