#include <chrono>

#include "loctest/deciders.hpp"

namespace loctest {

namespace {

using Clock = std::chrono::steady_clock;

Word word_or_empty(const FiniteSemigroup& s, Element x) {
  return s.has_words() ? s.word(x) : Word{};
}

Verdict start_verdict(const FiniteSemigroup& s, PropertyId property) {
  Verdict v;
  v.property = property;
  v.route = Route::Semigroup;
  v.stats.semigroup_order = s.order();
  return v;
}

void finish(Verdict& v, Clock::time_point start) {
  v.holds = !v.witness.has_value();
  v.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<Witness> loc_idem_witness(const FiniteSemigroup& s) {
  auto bad = is_locally_idempotent(s);
  if (!bad) return std::nullopt;
  SemigroupIdentity w;
  w.identity = Identity::LocalIdempotency;
  w.e = bad->e;
  w.a = bad->x;
  w.e_word = word_or_empty(s, bad->e);
  w.a_word = word_or_empty(s, bad->x);
  return w;
}

// Walks the reordered idempotent chain once per candidate unit f, comparing
// each idempotent fixed by f with the previous one: the zero subsemigroups
// are contiguous, so two of them in one interval show up as neighbours.
std::optional<Witness> unit_sharing_witness(const FiniteSemigroup& s, Side side,
                                            UnitScan scan) {
  const IdempotentList chain = reorder_zero_subsemigroups(s, side);
  std::vector<std::size_t> interval_of(chain.members.size());
  for (std::size_t k = 0; k < chain.zero_intervals.size(); ++k) {
    const auto& iv = chain.zero_intervals[k];
    for (std::size_t pos = iv.start; pos < iv.end; ++pos) interval_of[pos] = k;
  }
  // Singleton intervals can never hold two idempotents.
  bool any_wide = false;
  for (const auto& iv : chain.zero_intervals) any_wide |= iv.end - iv.start > 1;
  if (!any_wide) return std::nullopt;

  for (Element f = 0; f < s.order(); ++f) {
    if (scan == UnitScan::IdempotentsOnly && s.product(f, f) != f) continue;
    std::optional<std::size_t> prev;
    for (std::size_t pos = 0; pos < chain.members.size(); ++pos) {
      const Element i = chain.members[pos];
      const bool unit = side == Side::Right ? s.product(i, f) == i : s.product(f, i) == i;
      if (!unit) continue;
      if (prev && interval_of[*prev] == interval_of[pos]) {
        UnitSharing w;
        w.side = side;
        w.e = chain.members[*prev];
        w.i = i;
        w.f = f;
        w.e_word = word_or_empty(s, w.e);
        w.i_word = word_or_empty(s, w.i);
        w.f_word = word_or_empty(s, f);
        return w;
      }
      prev = pos;
    }
  }
  return std::nullopt;
}

Verdict decide_lt_semigroup(const FiniteSemigroup& s, Side side, UnitScan scan) {
  const auto start = Clock::now();
  Verdict v = start_verdict(s, side == Side::Right ? PropertyId::RightLT : PropertyId::LeftLT);
  v.witness = loc_idem_witness(s);
  if (!v.witness) v.witness = unit_sharing_witness(s, side, scan);
  finish(v, start);
  return v;
}

}  // namespace

Verdict decide_loc_idem_semigroup(const FiniteSemigroup& s) {
  const auto start = Clock::now();
  Verdict v = start_verdict(s, PropertyId::LocallyIdempotent);
  v.witness = loc_idem_witness(s);
  finish(v, start);
  return v;
}

Verdict decide_right_lt_semigroup(const FiniteSemigroup& s, UnitScan scan) {
  return decide_lt_semigroup(s, Side::Right, scan);
}

Verdict decide_left_lt_semigroup(const FiniteSemigroup& s, UnitScan scan) {
  return decide_lt_semigroup(s, Side::Left, scan);
}

}  // namespace loctest
