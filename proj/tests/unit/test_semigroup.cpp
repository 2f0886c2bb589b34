#include <algorithm>
#include <cmath>
#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "loctest/harness.hpp"
#include "loctest/semigroup.hpp"

using namespace loctest;

namespace {

FiniteSemigroup m3() {
  // 0 = identity, 1 = e, 2 = i; {e, i} is right-zero.
  return FiniteSemigroup::from_table(3, {0, 1, 2, 1, 1, 2, 2, 1, 2});
}

std::vector<Element> brute_idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.order(); ++x)
    if (s.product(x, x) == x) out.push_back(x);
  return out;
}

bool same_class(const FiniteSemigroup& s, Side side, Element x, Element y) {
  if (side == Side::Right) return s.product(x, y) == y && s.product(y, x) == x;
  return s.product(x, y) == x && s.product(y, x) == y;
}

// Pairwise check of the reorder contract, independent of the implementation.
void check_reorder(const FiniteSemigroup& s, Side side) {
  const IdempotentList list = reorder_zero_subsemigroups(s, side);
  auto sorted = list.members;
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(sorted == brute_idempotents(s));
  std::vector<std::size_t> interval_of(list.members.size(), SIZE_MAX);
  std::size_t expect_start = 0;
  for (std::size_t k = 0; k < list.zero_intervals.size(); ++k) {
    const auto& iv = list.zero_intervals[k];
    REQUIRE(iv.side == side);
    REQUIRE(iv.start == expect_start);
    REQUIRE(iv.end > iv.start);
    for (std::size_t pos = iv.start; pos < iv.end; ++pos) interval_of[pos] = k;
    expect_start = iv.end;
  }
  REQUIRE(expect_start == list.members.size());
  for (std::size_t a = 0; a < list.members.size(); ++a)
    for (std::size_t b = 0; b < list.members.size(); ++b)
      REQUIRE((interval_of[a] == interval_of[b]) ==
              same_class(s, side, list.members[a], list.members[b]));
}

}  // namespace

TEST_CASE("parse_cayley: examples") {
  const FiniteSemigroup t = parse_cayley("semigroup\norder: 1\n0\n");
  CHECK(t.order() == 1);
  CHECK(t.product(0, 0) == 0);

  const FiniteSemigroup rz = parse_cayley("semigroup\norder: 2\n0 1\n0 1\n");
  CHECK(rz.product(0, 1) == 1);
  CHECK(rz.product(1, 0) == 0);

  // Brute force over all 8 triples: violations are (0,0,1), (0,1,1), (1,0,0), (1,1,0).
  try {
    parse_cayley("semigroup\norder: 2\n1 0\n0 0\n");
    FAIL("expected AssociativityError");
  } catch (const AssociativityError& e) {
    CHECK(e.triple() == std::array<Element, 3>{0, 0, 1});
  }
  const std::vector<Element> bad{1, 0, 0, 0};
  CHECK(find_associativity_violation(2, bad) == std::array<Element, 3>{0, 0, 1});

  CHECK_THROWS_AS(parse_cayley("semigroup\norder: 2\n0 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cayley("semigroup\norder: 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cayley("semigroup\norder: 2\n0 1 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cayley("dfa\nstates: 1\nletters: 1\n"), ParseError);
}

TEST_CASE("serialize_cayley round trip") {
  for (const auto& s : {m3(), cyclic_group(5), zero_semigroup(3, Side::Left)}) {
    const FiniteSemigroup back = parse_cayley(serialize_cayley(s));
    CHECK(back.table() == s.table());
  }
}

TEST_CASE("transition_semigroup: examples") {
  {
    const TransitionSemigroup ts = transition_semigroup(make_dfa(2, 1, {1, 0}));
    REQUIRE(ts.semigroup.order() == 2);
    CHECK(std::vector<State>(ts.action(0).begin(), ts.action(0).end()) == std::vector<State>{1, 0});
    CHECK(std::vector<State>(ts.action(1).begin(), ts.action(1).end()) == std::vector<State>{0, 1});
    CHECK(ts.semigroup.product(0, 0) == 1);
    CHECK(ts.semigroup.word(0) == Word{0});
    CHECK(ts.semigroup.word(1) == Word{0, 0});
    CHECK(ts.semigroup.table() == std::vector<Element>{1, 0, 0, 1});
  }
  CHECK(transition_semigroup(make_dfa(3, 2, {0, 0, 0, 0, 0, 0})).semigroup.order() == 1);
  const TransitionSemigroup id = transition_semigroup(identity_dfa(3, 2));
  CHECK(id.semigroup.order() == 1);
  CHECK(id.semigroup.product(0, 0) == 0);
  CHECK_THROWS_AS(transition_semigroup(random_dfas({6, 3, 1.0, 1, 1}).front(), 5), CapExceeded);
}

TEST_CASE("transition_semigroup: morphism, bound and completeness") {
  std::mt19937_64 rng(3);
  std::vector<Dfa> corpus;
  for (const auto& spec : std::vector<GenSpec>{{3, 2, 0.8, 1, 200}, {4, 2, 1.0, 2, 100},
                                               {5, 3, 0.7, 3, 60}}) {
    auto part = random_dfas(spec);
    corpus.insert(corpus.end(), part.begin(), part.end());
  }
  for (const Dfa& d : corpus) {
    const TransitionSemigroup ts = transition_semigroup(d);
    const std::size_t n = d.state_count();
    const auto& s = ts.semigroup;
    CHECK(static_cast<double>(s.order()) <= std::pow(double(n + 1), double(n)));
    CHECK(s.order() == brute::word_maps(d).size());
    for (int t = 0; t < 20; ++t) {
      Word w(1 + rng() % 8);
      for (auto& a : w) a = static_cast<Letter>(rng() % d.alphabet_size());
      const Element x = ts.element_of(w);
      for (std::size_t p = 0; p < n; ++p) {
        CHECK(ts.action(x)[p] == apply(d, static_cast<State>(p), w));
      }
    }
    for (Element x = 0; x < s.order(); ++x) {
      CHECK(action(d, s.word(x)) == std::vector<State>(ts.action(x).begin(), ts.action(x).end()));
      for (Element y = 0; y < s.order(); y += 3) {
        const brute::Map xy = brute::compose({ts.action(x).begin(), ts.action(x).end()},
                                             {ts.action(y).begin(), ts.action(y).end()});
        CHECK(brute::Map(ts.action(s.product(x, y)).begin(), ts.action(s.product(x, y)).end()) ==
              xy);
      }
    }
  }
}

TEST_CASE("idempotents: examples") {
  CHECK(idempotents(trivial_semigroup()) == std::vector<Element>{0});
  CHECK(idempotents(zero_semigroup(2, Side::Right)) == std::vector<Element>{0, 1});
  CHECK(idempotents(cyclic_group(2)) == std::vector<Element>{0});
  CHECK(idempotents(m3()) == std::vector<Element>{0, 1, 2});
}

TEST_CASE("is_locally_idempotent: examples") {
  CHECK_FALSE(is_locally_idempotent(zero_semigroup(3, Side::Left)));
  CHECK_FALSE(is_locally_idempotent(m3()));
  const auto v = is_locally_idempotent(cyclic_group(2));
  REQUIRE(v);
  CHECK(v->e == 0);
  CHECK(v->x == 1);
  CHECK(is_locally_idempotent(transition_semigroup(make_dfa(2, 1, {1, 0})).semigroup));
}

TEST_CASE("reorder_zero_subsemigroups: examples") {
  const auto rz = zero_semigroup(2, Side::Right);
  const IdempotentList right = reorder_zero_subsemigroups(rz, Side::Right);
  REQUIRE(right.zero_intervals.size() == 1);
  CHECK(right.zero_intervals[0].start == 0);
  CHECK(right.zero_intervals[0].end == 2);
  CHECK(reorder_zero_subsemigroups(rz, Side::Left).zero_intervals.size() == 2);

  // Right-zero law on {e, i} verified directly from the table.
  const auto m = m3();
  REQUIRE(m.product(1, 2) == 2);
  REQUIRE(m.product(2, 1) == 1);
  const IdempotentList list = reorder_zero_subsemigroups(m, Side::Right);
  REQUIRE(list.zero_intervals.size() == 2);
  for (const auto& iv : list.zero_intervals) {
    std::vector<Element> members(list.members.begin() + static_cast<std::ptrdiff_t>(iv.start),
                                 list.members.begin() + static_cast<std::ptrdiff_t>(iv.end));
    std::sort(members.begin(), members.end());
    CHECK((members == std::vector<Element>{0} || members == std::vector<Element>{1, 2}));
  }
  check_reorder(m, Side::Right);
  check_reorder(m, Side::Left);
}

TEST_CASE("reorder_zero_subsemigroups: pairwise contract on transition semigroups") {
  for (const Dfa& d : random_dfas({4, 2, 0.8, 77, 150})) {
    const auto s = transition_semigroup(d).semigroup;
    check_reorder(s, Side::Right);
    check_reorder(s, Side::Left);
  }
}

TEST_CASE("opposite") {
  const auto rz = zero_semigroup(3, Side::Right);
  CHECK(opposite(rz).table() == zero_semigroup(3, Side::Left).table());
  CHECK(opposite(cyclic_group(4)).table() == cyclic_group(4).table());
  CHECK(opposite(opposite(m3())).table() == m3().table());
  CHECK_FALSE(opposite(opposite(m3())).is_opposite());
  for (const Dfa& d : random_dfas({4, 2, 0.9, 8, 60})) {
    const auto s = transition_semigroup(d).semigroup;
    const auto o = opposite(s);
    CHECK(idempotents(o) == idempotents(s));
    for (Element x = 0; x < s.order(); ++x)
      for (Element y = 0; y < s.order(); ++y) REQUIRE(o.product(x, y) == s.product(y, x));
  }
}
