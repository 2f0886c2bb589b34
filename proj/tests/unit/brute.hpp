#pragma once

// Definition-level brute force used as test oracles. Deliberately naive and
// independent of the library's graph and semigroup code: only Dfa::delta and
// FiniteSemigroup::product are used.

#include <array>
#include <set>
#include <vector>

#include "loctest/dfa.hpp"
#include "loctest/semigroup.hpp"

namespace brute {

using loctest::Dfa;
using loctest::kUndefined;
using loctest::State;
using Map = std::vector<State>;

inline Map letter_map(const Dfa& d, int a) {
  Map m(d.state_count());
  for (std::size_t p = 0; p < d.state_count(); ++p) m[p] = d.delta(static_cast<State>(p), a);
  return m;
}

inline Map compose(const Map& f, const Map& g) {  // first f, then g
  Map h(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) h[p] = f[p] == kUndefined ? kUndefined : g[f[p]];
  return h;
}

// Maps induced by all nonempty words: closure of the letter maps.
inline std::set<Map> word_maps(const Dfa& d) {
  std::set<Map> seen;
  std::vector<Map> frontier;
  for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
    Map m = letter_map(d, static_cast<int>(a));
    if (seen.insert(m).second) frontier.push_back(m);
  }
  while (!frontier.empty()) {
    std::vector<Map> next;
    for (const auto& f : frontier) {
      for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
        Map h = compose(f, letter_map(d, static_cast<int>(a)));
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier.swap(next);
  }
  return seen;
}

struct Closure {
  std::set<Map> maps;
  std::size_t n = 0;
  std::vector<char> reach1;  // p ⪰ q, row-major

  // p ⪰ q
  bool reach(State p, State q) const { return p != kUndefined && reach1[p * n + q]; }
  // (p, q) ⪰ (r, s) in Γ²
  bool reach2(State p, State q, State r, State s) const {
    if (p == r && q == s) return true;
    for (const auto& f : maps) {
      if (f[p] == r && f[q] == s) return true;
    }
    return false;
  }
  bool fixes(std::initializer_list<State> tuple) const {
    for (const auto& f : maps) {
      bool ok = true;
      for (State x : tuple) ok = ok && f[x] == x;
      if (ok) return true;
    }
    return false;
  }
};

inline Closure closure(const Dfa& d) {
  Closure c{word_maps(d), d.state_count(), {}};
  c.reach1.assign(c.n * c.n, 0);
  for (std::size_t p = 0; p < c.n; ++p) c.reach1[p * c.n + p] = 1;
  for (const auto& f : c.maps) {
    for (std::size_t p = 0; p < c.n; ++p) {
      if (f[p] != kUndefined) c.reach1[p * c.n + f[p]] = 1;
    }
  }
  return c;
}

// Word-quantified condition 2: for an SCC-node (p, q) with p ⪰ q and every
// word w, RightOrIdem demands pw ⪰ q ⟹ qw ⪰ q; Left demands ⟺.
inline std::vector<std::array<State, 2>> condition2_roots(const Dfa& d, bool left_mode) {
  const Closure c = closure(d);
  const auto n = static_cast<State>(d.state_count());
  std::vector<std::array<State, 2>> out;
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      if (!c.fixes({p, q}) || !c.reach(p, q)) continue;
      for (const auto& f : c.maps) {
        const bool a = c.reach(f[p], q);
        const bool b = c.reach(f[q], q);
        if (left_mode ? a != b : (a && !b)) {
          out.push_back({p, q});
          break;
        }
      }
    }
  }
  return out;
}

inline std::vector<std::array<State, 3>> triples(const Dfa& d, bool left_kind) {
  const Closure c = closure(d);
  const auto n = static_cast<State>(d.state_count());
  std::vector<std::array<State, 3>> out;
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      for (State r = 0; r < n; ++r) {
        if (p == q || q == r || p == r || !c.fixes({p, q, r})) continue;
        const bool in = left_kind ? c.reach2(p, q, r, q) : c.reach2(p, q, q, r);
        if (in) out.push_back({p, q, r});
      }
  return out;
}

}  // namespace brute
