#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loctest/dfa.hpp"
#include "loctest/types.hpp"

namespace loctest {

namespace detail {
struct SemigroupBackend;
}

// A finite semigroup on elements 0..order-1.
//
// Backed either by an explicit Cayley table or, for semigroups generated from
// an automaton, by the right Cayley graph plus one word per element: a
// product a·b is then computed by reading b's word from a. The table is
// materialized only on request. Values are immutable and cheap to copy.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  // Validates closure (std::invalid_argument) and associativity
  // (AssociativityError).
  static FiniteSemigroup from_table(std::size_t order, std::vector<Element> table);
  static FiniteSemigroup from_table_unchecked(std::size_t order,
                                              std::vector<Element> table);

  // `right[x * generators + a]` is x·a; `words[x]` spells x over the
  // generators, and `generator_elements[a]` is the element of letter a.
  static FiniteSemigroup from_cayley_graph(std::size_t generators,
                                           std::vector<Element> right,
                                           std::vector<Word> words,
                                           std::vector<Element> generator_elements);

  std::size_t order() const noexcept { return order_; }
  Element product(Element a, Element b) const;

  // Element words (shortlex-minimal) when generated from an automaton.
  bool has_words() const noexcept;
  const Word& word(Element x) const;
  std::optional<std::size_t> generator_count() const noexcept;

  // Dense row-major table, table[i * order + j] = i·j.
  std::vector<Element> table() const;

  // Same elements with reversed multiplication. O(1).
  FiniteSemigroup opposite() const;
  bool is_opposite() const noexcept { return reversed_; }

 private:
  std::size_t order_ = 0;
  bool reversed_ = false;
  std::shared_ptr<const detail::SemigroupBackend> backend_;
};

class AssociativityError : public std::invalid_argument {
 public:
  explicit AssociativityError(std::array<Element, 3> triple);
  const std::array<Element, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<Element, 3> triple_;
};

// First (i, j, l) in lexicographic order with (i·j)·l != i·(j·l), if any.
std::optional<std::array<Element, 3>> find_associativity_violation(
    std::size_t order, std::span<const Element> table);

FiniteSemigroup parse_cayley(std::string_view text);
std::string serialize_cayley(const FiniteSemigroup& s);

inline constexpr std::size_t kDefaultSemigroupCap = 100'000;

// Transition semigroup of a Dfa together with its morphism from words.
struct TransitionSemigroup {
  FiniteSemigroup semigroup;
  std::size_t state_count = 0;
  std::vector<State> maps;             // element x acts as maps[x*n .. x*n+n)
  std::vector<Element> letter_element;  // element of each one-letter word

  std::span<const State> action(Element x) const {
    return {maps.data() + static_cast<std::size_t>(x) * state_count, state_count};
  }
  // Element induced by a nonempty word.
  Element element_of(std::span<const Letter> w) const;
};

// Partial maps induced by nonempty words, generated breadth-first with
// letters ascending; element indices follow discovery order. Throws
// CapExceeded when more than `cap` elements appear.
TransitionSemigroup transition_semigroup(const Dfa& d,
                                         std::size_t cap = kDefaultSemigroupCap);

std::vector<Element> idempotents(const FiniteSemigroup& s);

struct LocalIdempotencyViolation {
  Element e = 0;
  Element x = 0;
};

// First idempotent e and element x (ascending) with e·x·e not idempotent.
std::optional<LocalIdempotencyViolation> is_locally_idempotent(const FiniteSemigroup& s);

enum class Side { Left, Right };

struct ZeroInterval {
  std::size_t start = 0;  // positions in IdempotentList::members, [start, end)
  std::size_t end = 0;
  Side side = Side::Right;
};

struct IdempotentList {
  std::vector<Element> members;
  std::vector<ZeroInterval> zero_intervals;
};

// Reorders the idempotents so that every maximal right- (xy = y) or left-
// (xy = x) zero subsemigroup occupies one contiguous interval. O(k^2).
IdempotentList reorder_zero_subsemigroups(const FiniteSemigroup& s, Side side);

inline FiniteSemigroup opposite(const FiniteSemigroup& s) { return s.opposite(); }

// Cyclic group of the given order, right/left zero semigroups and similar
// small fixtures.
FiniteSemigroup trivial_semigroup();
FiniteSemigroup zero_semigroup(std::size_t order, Side side);
FiniteSemigroup cyclic_group(std::size_t order);

}  // namespace loctest
