#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "loctest/dfa.hpp"

namespace loctest {

// Dense bit rows over a fixed column count.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

  std::size_t rows() const noexcept { return stride_ == 0 ? 0 : bits_.size() / stride_; }
  std::size_t cols() const noexcept { return cols_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * stride_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  // row(dst) |= row(src)
  void merge_row(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < stride_; ++i) {
      bits_[dst * stride_ + i] |= bits_[src * stride_ + i];
    }
  }
  bool row_empty(std::size_t r) const {
    for (std::size_t i = 0; i < stride_; ++i) {
      if (bits_[r * stride_ + i] != 0) return false;
    }
    return true;
  }

 private:
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Strongly connected components of a deterministic labelled graph.
// Component ids are assigned in reverse topological order of the
// condensation: every condensation edge goes from a higher id to a lower one.
struct SccIndex {
  std::vector<std::uint32_t> component;  // node -> component id
  std::size_t component_count = 0;
  std::vector<char> on_cycle;            // node reachable from itself by >= 1 edge
  // Condensation DAG in CSR form, successors deduplicated and ascending.
  std::vector<std::uint32_t> dag_offsets;
  std::vector<std::uint32_t> dag_targets;

  bool same_component(std::size_t u, std::size_t v) const {
    return component[u] == component[v];
  }
};

SccIndex scc(const GraphView& g);

// Reflexive-transitive reachability: reaches(u, v) iff v is reachable from u
// by a possibly empty path. Stored per condensation component.
class ReachTable {
 public:
  ReachTable() = default;
  ReachTable(std::vector<std::uint32_t> component, BitMatrix component_reach)
      : component_(std::move(component)), reach_(std::move(component_reach)) {}

  bool reaches(std::size_t u, std::size_t v) const {
    return reach_.test(component_[u], v);
  }
  std::size_t size() const noexcept { return component_.size(); }

 private:
  std::vector<std::uint32_t> component_;
  BitMatrix reach_;
};

// Computed by set propagation over the condensation DAG.
ReachTable reach_table(const GraphView& g, const SccIndex& index);
ReachTable reach_table(const GraphView& g);

using Pair = std::array<State, 2>;
using Triple = std::array<State, 3>;

inline constexpr std::size_t kDefaultProductCap = 2'000'000;

// Direct product of `arity` copies of a Dfa's transition graph. Node
// (p1, ..., pk) has mixed-radix index ((p1 * n) + p2) * n + ...; an edge on a
// letter exists iff every component transition is defined.
class ProductGraph {
 public:
  ProductGraph(const Dfa& d, std::size_t arity,
               std::size_t node_cap = kDefaultProductCap);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t base_states() const noexcept { return base_; }
  std::size_t node_count() const noexcept { return nodes_; }
  std::size_t letters() const noexcept { return letters_; }
  GraphView graph() const noexcept { return {nodes_, letters_, next_}; }

  std::size_t encode(std::span<const State> tuple) const;
  std::vector<State> decode(std::size_t node) const;

  std::size_t pair(State p, State q) const {
    return static_cast<std::size_t>(p) * base_ + static_cast<std::size_t>(q);
  }
  std::size_t triple(State p, State q, State r) const {
    return (static_cast<std::size_t>(p) * base_ + static_cast<std::size_t>(q)) * base_ +
           static_cast<std::size_t>(r);
  }

 private:
  std::size_t arity_;
  std::size_t base_;
  std::size_t letters_;
  std::size_t nodes_;
  std::vector<State> next_;
};

inline ProductGraph product(const Dfa& d, std::size_t arity,
                            std::size_t node_cap = kDefaultProductCap) {
  return ProductGraph(d, arity, node_cap);
}

// Product nodes lying on a cycle, ascending by node index.
std::vector<std::size_t> scc_nodes(const ProductGraph& pg);
std::vector<std::size_t> scc_nodes(const SccIndex& index);

// Shortest word leading from `from` to `to` (shortlex among shortest). With
// `nonempty`, the word has at least one letter even when from == to.
std::optional<Word> shortest_word(const GraphView& g, std::size_t from,
                                  std::size_t to, bool nonempty = false);

// Precomputed structure over Γ and Γ² shared by the graph deciders.
struct PairAnalysis {
  const Dfa* dfa = nullptr;
  SccIndex base_scc;
  ReachTable base_reach;
  ProductGraph pairs;
  SccIndex pair_scc;

  PairAnalysis(const Dfa& d, std::size_t node_cap = kDefaultProductCap);

  std::size_t n() const noexcept { return dfa->state_count(); }
  bool reaches(State p, State q) const {
    return base_reach.reaches(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
  }
  // p ⪰ q, with undefined never reaching anything.
  bool reaches_defined(State p, State q) const { return p != kUndefined && reaches(p, q); }
};

struct TripleAnalysis {
  ProductGraph triples;
  SccIndex triple_scc;

  TripleAnalysis(const Dfa& d, std::size_t node_cap = kDefaultProductCap);
};

enum class Condition2Mode { RightOrIdem, Left };

// Violation of the pair-graph condition: the root (p, q) is an SCC-node of Γ²
// with p ⪰ q, (p, q)·path = reached, and letter separates the two components
// relative to q.
struct Condition2Violation {
  Pair root{};
  Pair reached{};
  Letter letter = 0;
  Word path;
};

// Whether letter `a` applied at pair (r, s) violates the condition for the
// root's second component q. Undefined targets never reach q.
bool condition2_violates(const PairAnalysis& pa, Condition2Mode mode, State q,
                         State r, State s, Letter a);

// Per-root reference scan: roots ascending, breadth-first from each root,
// letters ascending. O(n^4 * letters).
std::optional<Condition2Violation> condition2_scan_reference(
    const PairAnalysis& pa, Condition2Mode mode);

// Same result as the reference scan in O(n^3 * letters): per second component
// q, marks pairs that reach a violating pair on the reversed Γ², then replays
// the reference scan from the first marked root.
std::optional<Condition2Violation> condition2_scan(const PairAnalysis& pa,
                                                   Condition2Mode mode);

enum class TripleKind { Left, LocId };

// Triples (p, q, r) with distinct components that are SCC-nodes of Γ³ and
// satisfy (p, q) ⪰ (q, r) in Γ² (LocId) or (p, q) ⪰ (r, q) (Left).
struct TripleSet {
  TripleKind kind = TripleKind::LocId;
  std::vector<Triple> members;  // ascending

  bool contains(const Triple& t) const;
};

TripleSet triple_sets(const PairAnalysis& pa, const TripleAnalysis& ta,
                      TripleKind kind);

}  // namespace loctest
