#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loctest/types.hpp"

namespace loctest {

// Read-only view of a deterministic labelled graph: `next[node * letters + a]`
// is the successor of `node` on letter `a`, or kUndefined.
struct GraphView {
  std::size_t nodes = 0;
  std::size_t letters = 0;
  std::span<const State> next;

  State successor(std::size_t node, std::size_t letter) const {
    return next[node * letters + letter];
  }
};

// Deterministic finite automaton with a possibly partial transition function.
// No initial or accepting states: none of the local testability conditions
// refer to them.
//
// The constructor does not validate; use validate_dfa() or make_dfa().
class Dfa {
 public:
  Dfa() = default;
  Dfa(std::size_t state_count, std::size_t alphabet_size,
      std::vector<State> delta, std::vector<std::string> letter_names = {});

  // Automaton with every transition undefined.
  static Dfa empty(std::size_t state_count, std::size_t alphabet_size);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  State delta(State p, Letter a) const {
    return delta_[static_cast<std::size_t>(p) * alphabet_size_ +
                  static_cast<std::size_t>(a)];
  }
  std::span<const State> transitions() const noexcept { return delta_; }
  const std::vector<std::string>& letter_names() const noexcept {
    return letter_names_;
  }

  GraphView graph() const noexcept {
    return {state_count_, alphabet_size_, delta_};
  }

  std::string letter_label(Letter a) const;

  // Copy with delta(p, a) replaced by `target` (kUndefined clears it).
  Dfa with_transition(State p, Letter a, State target) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t state_count_ = 0;
  std::size_t alphabet_size_ = 0;
  std::vector<State> delta_;
  std::vector<std::string> letter_names_;
};

// Every invariant violation of `d`, in a stable order; empty means valid.
std::vector<std::string> validate_dfa(const Dfa& d);

// Throws std::invalid_argument listing the violations when `d` is invalid.
void require_valid(const Dfa& d);

Dfa make_dfa(std::size_t state_count, std::size_t alphabet_size,
             std::vector<State> delta,
             std::vector<std::string> letter_names = {});

// Action of a word on a state: left-to-right composition of delta. The empty
// word acts as the identity. Returns kUndefined as soon as a step is undefined.
State apply(const Dfa& d, State p, std::span<const Letter> w);

// Partial map on states induced by `w`.
std::vector<State> action(const Dfa& d, std::span<const Letter> w);

Dfa parse_dfa(std::string_view text);
std::string serialize_dfa(const Dfa& d);

// Automaton where every letter acts as the identity map.
Dfa identity_dfa(std::size_t states, std::size_t letters);

}  // namespace loctest
