// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "loctest/deciders.hpp"
#include "loctest/harness.hpp"

using namespace loctest;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool clean(const CrossSummary& s) {
  return s.disagreements == 0 && s.witness_failures == 0;
}

std::string counts(const CrossSummary& s) {
  return std::to_string(s.instances) + " instances, " + std::to_string(s.disagreements) +
         " disagreements, " + std::to_string(s.skipped) + " skipped";
}

struct Fixture {
  const char* name;
  Instance instance;
  bool expect[3];  // loc-idem, right-lt, left-lt
};

// Expected bits are taken from the oracle; the golden values are then
// compared against every route.
bool check_fixtures(std::size_t& witnesses, std::size_t& witness_failures, std::string& detail) {
  const std::vector<Fixture> fixtures{
      {"2-cycle", make_dfa(2, 1, {1, 0}), {false, false, false}},
      {"identity-letters", identity_dfa(3, 2), {true, true, true}},
      {"constant", make_dfa(3, 2, {0, 0, 0, 0, 0, 0}), {true, true, true}},
      {"M3", FiniteSemigroup::from_table(3, {0, 1, 2, 1, 1, 2, 2, 1, 2}), {true, false, true}},
  };
  bool ok = true;
  for (const auto& f : fixtures) {
    const bool is_dfa = std::holds_alternative<Dfa>(f.instance);
    for (std::size_t k = 0; k < 3; ++k) {
      const PropertyId p = kAllProperties[k];
      if (decide(f.instance, p, Route::Oracle).holds != f.expect[k]) {
        ok = false;
        detail += std::string(" oracle-mismatch:") + f.name;
      }
      for (Route r : {Route::Graph, Route::Semigroup, Route::Oracle}) {
        if (r == Route::Graph && !is_dfa) continue;
        const Verdict v = decide(f.instance, p, r);
        if (v.holds != f.expect[k]) {
          ok = false;
          detail += std::string(" ") + f.name + "/" + std::string(to_string(p)) + "/" +
                    std::string(to_string(r));
        }
        if (!v.holds) {
          ++witnesses;
          if (!verify_witness(f.instance, v)) ++witness_failures;
        }
        if (std::string_view(f.name) == "2-cycle" && r == Route::Graph &&
            !std::holds_alternative<GraphCondition1>(*v.witness)) {
          ok = false;
          detail += " 2-cycle-not-condition-1";
        }
        if (std::string_view(f.name) == "M3" && p == PropertyId::RightLT &&
            r == Route::Semigroup) {
          const auto* u = std::get_if<UnitSharing>(&*v.witness);
          if (!u || u->f != 0) {
            ok = false;
            detail += " M3-unit-not-identity";
          }
        }
      }
    }
  }
  return ok;
}

// Corollary 3.4 consequence, Lemma 3.3 / l1 / l2 on one automaton.
std::size_t lemma_violations(const Dfa& d) {
  const auto s = transition_semigroup(d).semigroup;
  std::size_t bad = 0;
  const PairAnalysis pa(d);
  if (oracle(s, PropertyId::LocallyIdempotent).holds) {
    if (condition2_scan_reference(pa, Condition2Mode::RightOrIdem)) ++bad;
    const ReachTable pair_reach = reach_table(pa.pairs.graph(), pa.pair_scc);
    const auto n = static_cast<State>(d.state_count());
    for (std::size_t node : scc_nodes(pa.pair_scc)) {
      const State p = static_cast<State>(node / d.state_count());
      const State q = static_cast<State>(node % d.state_count());
      for (State r = 0; r < n; ++r) {
        const std::size_t target = pa.pairs.pair(q, r);
        if (target == node || !pair_reach.reaches(node, target)) continue;
        if (!(pa.reaches(r, q) && pa.reaches(q, r))) ++bad;
      }
      (void)p;
    }
  }
  if (oracle(s, PropertyId::LeftLT).holds) {
    if (condition2_scan_reference(pa, Condition2Mode::Left)) ++bad;
    const TripleSet left = triple_sets(pa, TripleAnalysis(d), TripleKind::Left);
    for (const Triple& t : left.members) {
      if (left.contains({t[0], t[2], t[1]})) ++bad;
    }
  }
  return bad;
}

bool same_class(const FiniteSemigroup& s, Side side, Element x, Element y) {
  if (side == Side::Right) return s.product(x, y) == y && s.product(y, x) == x;
  return s.product(x, y) == x && s.product(y, x) == y;
}

// Independent O(k^2) pairwise check of the reorder contract.
bool reorder_ok(const FiniteSemigroup& s, Side side) {
  const IdempotentList list = reorder_zero_subsemigroups(s, side);
  std::vector<Element> expect;
  for (Element x = 0; x < s.order(); ++x)
    if (s.product(x, x) == x) expect.push_back(x);
  auto sorted = list.members;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expect) return false;
  std::vector<std::size_t> interval_of(list.members.size());
  std::size_t pos = 0;
  for (std::size_t k = 0; k < list.zero_intervals.size(); ++k) {
    const auto& iv = list.zero_intervals[k];
    if (iv.start != pos || iv.end <= iv.start || iv.side != side) return false;
    for (; pos < iv.end; ++pos) interval_of[pos] = k;
  }
  if (pos != list.members.size()) return false;
  for (std::size_t a = 0; a < list.members.size(); ++a)
    for (std::size_t b = 0; b < list.members.size(); ++b)
      if ((interval_of[a] == interval_of[b]) !=
          same_class(s, side, list.members[a], list.members[b]))
        return false;
  return true;
}

}  // namespace

int main() {
  std::size_t witnesses = 0, witness_failures = 0;
  std::size_t hierarchy = 0, duality = 0;

  // 1. Exhaustive oracle equivalence.
  auto exhaustive = enumerate_dfas(3, 2, true);
  {
    auto two = enumerate_dfas(2, 2, true);
    exhaustive.insert(exhaustive.end(), two.begin(), two.end());
  }
  auto t0 = Clock::now();
  const CrossReport ex = cross_validate(exhaustive);
  const double ex_s = seconds_since(t0);
  report(1, clean(ex.summary) && ex.summary.instances == 745 && ex.summary.skipped == 0 &&
                ex_s < 60.0,
         counts(ex.summary) + ", " + std::to_string(ex_s) + " s");
  witnesses += ex.summary.witnesses_checked;
  witness_failures += ex.summary.witness_failures;
  hierarchy += ex.summary.hierarchy_violations;
  duality += ex.summary.duality_violations;

  // 2. Randomized oracle equivalence.
  std::vector<Dfa> random;
  for (const auto& spec : canonical_random_specs()) {
    auto part = random_dfas(spec);
    random.insert(random.end(), part.begin(), part.end());
  }
  t0 = Clock::now();
  const CrossReport rnd = cross_validate(random);
  const double rnd_s = seconds_since(t0);
  const bool skip_ok = rnd.summary.skipped * 20 < rnd.summary.instances;
  report(2, clean(rnd.summary) && rnd.summary.instances == 5000 && skip_ok && rnd_s < 600.0,
         counts(rnd.summary) + ", " + std::to_string(rnd_s) + " s");
  witnesses += rnd.summary.witnesses_checked;
  witness_failures += rnd.summary.witness_failures;
  hierarchy += rnd.summary.hierarchy_violations;
  duality += rnd.summary.duality_violations;

  // 3. Hierarchy and duality.
  report(3, hierarchy == 0 && duality == 0,
         std::to_string(hierarchy) + " hierarchy, " + std::to_string(duality) +
             " duality violations over " + std::to_string(ex.records.size() + rnd.records.size()) +
             " instances");

  // 4. Canonical fixtures.
  std::string fixture_detail;
  const bool fixtures_ok = check_fixtures(witnesses, witness_failures, fixture_detail);
  report(4, fixtures_ok,
         "2-cycle, identity-letters, constant, M3" +
             (fixture_detail.empty() ? std::string() : ";" + fixture_detail));

  // 5. Witness soundness.
  report(5, witness_failures == 0 && witnesses > 0,
         std::to_string(witnesses - witness_failures) + "/" + std::to_string(witnesses) +
             " witnesses verified");

  // 6. Lemma-level properties on the exhaustive suite.
  std::size_t lemma_bad = 0;
  for (const Dfa& d : exhaustive) lemma_bad += lemma_violations(d);
  report(6, lemma_bad == 0,
         std::to_string(lemma_bad) + " violations over " + std::to_string(exhaustive.size()) +
             " instances");

  // 7. Zero-subsemigroup reordering on random transition semigroups.
  std::size_t sampled = 0, reorder_bad = 0, largest = 0;
  std::uint64_t seed = 7000;
  while (sampled < 1000) {
    GenSpec spec{3 + seed % 3, 2 + seed % 2, seed % 2 == 0 ? 1.0 : 0.8, seed, 1};
    ++seed;
    const Dfa d = random_dfas(spec).front();
    FiniteSemigroup s;
    try {
      s = transition_semigroup(d, 200).semigroup;
    } catch (const CapExceeded&) {
      continue;
    }
    ++sampled;
    largest = std::max(largest, s.order());
    if (!reorder_ok(s, Side::Right)) ++reorder_bad;
    if (!reorder_ok(s, Side::Left)) ++reorder_bad;
  }
  report(7, reorder_bad == 0,
         std::to_string(sampled) + " semigroups (max order " + std::to_string(largest) + "), " +
             std::to_string(reorder_bad) + " contract violations");

  // 8. Scaling smoke.
  const Dfa big = random_dfas({200, 5, 1.0, 8, 1}).front();
  t0 = Clock::now();
  const Verdict right = decide_right_lt_graph(big);
  const double right_s = seconds_since(t0);
  const Dfa mid = random_dfas({60, 3, 1.0, 9, 1}).front();
  t0 = Clock::now();
  const Verdict li = decide_loc_idem_graph(mid);
  const Verdict left = decide_left_lt_graph(mid);
  const double mid_s = seconds_since(t0);
  (void)right;
  (void)li;
  (void)left;
  report(8, right_s < 5.0 && mid_s < 30.0,
         "right-lt 200x5 in " + std::to_string(right_s) + " s; loc-idem + left-lt 60x3 in " +
             std::to_string(mid_s) + " s");

  return failures == 0 ? 0 : 1;
}
