#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "loctest/graph.hpp"
#include "loctest/semigroup.hpp"
#include "loctest/types.hpp"

namespace loctest {

enum class PropertyId { LocallyIdempotent, RightLT, LeftLT };
enum class Route { Graph, Semigroup, Oracle };

std::string_view to_string(PropertyId p);
std::string_view to_string(Route r);
PropertyId parse_property(std::string_view s);  // "loc-idem" | "right-lt" | "left-lt"
Route parse_route(std::string_view s);          // "graph" | "semigroup" | "oracle"

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::LocallyIdempotent, PropertyId::RightLT, PropertyId::LeftLT};

// Graph witnesses record which characterization produced them in `source`:
// a locally-idempotent failure also refutes both testability properties.

// States p != q that cannot share a component. Swap form (source
// LocallyIdempotent): u == v and (p, q)·u = (q, p). Pair form (source RightLT):
// p·u = q, q·v = p and (p, q)·unit = (p, q).
struct GraphCondition1 {
  PropertyId source = PropertyId::LocallyIdempotent;
  State p = 0;
  State q = 0;
  Word u;
  Word v;
  Word unit;
};

// root is fixed by unit, (root)·path = reached, and `letter` separates the
// reached pair relative to root's second component.
struct GraphCondition2 {
  PropertyId source = PropertyId::LocallyIdempotent;
  Pair root{};
  Pair reached{};
  Letter letter = 0;
  Word path;
  Word unit;
};

// Triple (p, q, r) fixed by unit. LocallyIdempotent: (p, q)·w = (q, r).
// LeftLT: (p, q)·w = (r, q) and (p, r)·w2 = (q, r).
struct GraphCondition3 {
  PropertyId source = PropertyId::LocallyIdempotent;
  Triple triple{};
  Word unit;
  Word w;
  Word w2;
};

enum class Identity {
  LocalIdempotency,  // (eae)^2 != eae
  RightIdentity,     // xyx != xy with x = eae, y = ebe
  LeftIdentity,      // xyx != yx
};

// Element words are filled in when the semigroup was generated from a Dfa.
struct SemigroupIdentity {
  Identity identity = Identity::LocalIdempotency;
  Element e = 0;
  Element a = 0;
  std::optional<Element> b;
  Word e_word;
  Word a_word;
  Word b_word;
};

// Distinct idempotents e, i of one right (left) zero subsemigroup with a
// common right (left) unit f.
struct UnitSharing {
  Side side = Side::Right;
  Element e = 0;
  Element i = 0;
  Element f = 0;
  Word e_word;
  Word i_word;
  Word f_word;
};

using Witness = std::variant<GraphCondition1, GraphCondition2, GraphCondition3,
                             SemigroupIdentity, UnitSharing>;

struct Stats {
  std::size_t nodes_visited = 0;
  std::size_t semigroup_order = 0;
  double elapsed_ms = 0.0;
};

struct Verdict {
  PropertyId property = PropertyId::LocallyIdempotent;
  bool holds = true;
  Route route = Route::Graph;
  std::optional<Witness> witness;
  Stats stats;
};

std::string describe(const Witness& w);
std::string to_text(const Verdict& v);

}  // namespace loctest
