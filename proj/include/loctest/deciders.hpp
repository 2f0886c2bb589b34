#pragma once

#include <cstddef>
#include <variant>

#include "loctest/dfa.hpp"
#include "loctest/graph.hpp"
#include "loctest/semigroup.hpp"
#include "loctest/verdict.hpp"

namespace loctest {

struct GraphOptions {
  std::size_t product_cap = kDefaultProductCap;
  // Use the per-root reference scan for the pair-graph condition instead of
  // the marked-root scan. Both produce the same violation.
  bool reference_scan = false;
};

// Transition graph route. Conditions are checked in order and the first
// failure yields the witness.
Verdict decide_loc_idem_graph(const Dfa& d, const GraphOptions& opts = {});
Verdict decide_right_lt_graph(const Dfa& d, const GraphOptions& opts = {});
Verdict decide_left_lt_graph(const Dfa& d, const GraphOptions& opts = {});

enum class UnitScan { AllElements, IdempotentsOnly };

// Semigroup route: local idempotency, then unit sharing inside zero
// subsemigroups along the reordered idempotent chain.
Verdict decide_loc_idem_semigroup(const FiniteSemigroup& s);
Verdict decide_right_lt_semigroup(const FiniteSemigroup& s,
                                  UnitScan scan = UnitScan::AllElements);
Verdict decide_left_lt_semigroup(const FiniteSemigroup& s,
                                 UnitScan scan = UnitScan::AllElements);

// Brute-force identity check: local idempotency plus xyx = xy (right) or
// xyx = yx (left) inside every eSe.
Verdict oracle(const FiniteSemigroup& s, PropertyId property);

using Instance = std::variant<Dfa, FiniteSemigroup>;

struct DecideOptions {
  GraphOptions graph;
  std::size_t semigroup_cap = kDefaultSemigroupCap;
};

// Dispatch on route. A Dfa is turned into its transition semigroup for the
// semigroup and oracle routes; the graph route on a semigroup throws
// std::invalid_argument.
Verdict decide(const Instance& instance, PropertyId property, Route route,
               const DecideOptions& opts = {});

// Re-evaluates the witness of `v` from scratch with word actions (Dfa) or
// table lookups (semigroup). Throws MalformedWitness on out-of-range
// references or a missing witness.
bool verify_witness(const Instance& instance, const Verdict& v);

// Parses `dfa` or `semigroup` text by its header token.
Instance parse_instance(std::string_view text);

}  // namespace loctest
