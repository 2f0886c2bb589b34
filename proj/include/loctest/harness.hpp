#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "loctest/deciders.hpp"

namespace loctest {

// Random automaton parameters. The stream is reproducible: each (state,
// letter) in row-major order draws u = (x >> 11) * 2^-53 from std::mt19937_64
// seeded with `seed`; the transition is defined iff u < completeness, and
// then its target is the next draw modulo `states`.
struct GenSpec {
  std::size_t states = 1;
  std::size_t letters = 1;
  double completeness = 1.0;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

inline constexpr const char* kPrngName = "mt19937_64";

class RandomDfaStream {
 public:
  explicit RandomDfaStream(const GenSpec& spec);
  std::optional<Dfa> next();

 private:
  GenSpec spec_;
  std::mt19937_64 rng_;
  std::size_t produced_ = 0;
};

std::vector<Dfa> random_dfas(const GenSpec& spec);

// Every transition assignment of the given shape exactly once, in
// lexicographic order of the row-major delta with "undefined" first.
class DfaEnumerator {
 public:
  DfaEnumerator(std::size_t states, std::size_t letters, bool complete_only);
  std::optional<Dfa> next();

 private:
  std::size_t states_;
  std::size_t letters_;
  bool complete_only_;
  std::vector<State> delta_;
  bool done_ = false;
};

std::vector<Dfa> enumerate_dfas(std::size_t states, std::size_t letters, bool complete_only);

// All complete automata with 1..3 states and 1..2 letters.
std::vector<Dfa> canonical_exhaustive_suite();

// 5000 automata over 1..6 states, 1..3 letters and completeness 1.0 / 0.8,
// one GenSpec per shape with seeds derived from `seed`.
std::vector<GenSpec> canonical_random_specs(std::uint64_t seed = 20030101);

struct CrossOptions {
  std::size_t semigroup_cap = kDefaultSemigroupCap;
  GraphOptions graph;
  unsigned jobs = 1;
  bool stop_on_disagreement = true;
  bool check_duality = true;
};

struct PropertyOutcome {
  Verdict graph;
  Verdict semigroup;
  Verdict oracle;
  bool agree = true;
};

struct InstanceRecord {
  std::size_t index = 0;
  Dfa dfa;
  bool skipped = false;
  std::string skip_reason;
  std::size_t semigroup_order = 0;
  std::array<PropertyOutcome, 3> outcomes;  // indexed like kAllProperties
  bool agree = true;
  std::size_t witnesses_checked = 0;
  std::size_t witness_failures = 0;
  bool hierarchy_ok = true;  // right-lt and left-lt each imply loc-idem
  bool duality_ok = true;    // right-lt(s) = left-lt(opposite(s)) and dually
  double elapsed_ms = 0.0;
};

struct CrossSummary {
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::array<std::size_t, 3> holds{};
  std::array<std::size_t, 3> fails{};
  std::size_t disagreements = 0;
  std::size_t witnesses_checked = 0;
  std::size_t witness_failures = 0;
  std::size_t hierarchy_violations = 0;
  std::size_t duality_violations = 0;
  double p50_ms = 0, p90_ms = 0, p99_ms = 0, max_ms = 0;
  double total_ms = 0;
};

struct CrossReport {
  std::string source;  // description of the instance stream
  std::vector<InstanceRecord> records;
  std::vector<std::size_t> disagreement_indices;
  CrossSummary summary;
  bool aborted = false;  // stopped at the first disagreement
};

// Evaluates one automaton through every route, property and check.
InstanceRecord evaluate_instance(const Dfa& d, std::size_t index, const CrossOptions& opts);

CrossReport cross_validate(const std::vector<Dfa>& instances, const CrossOptions& opts = {},
                           std::string source = "instances");

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_report_format(std::string_view s);

// Line-delimited records followed by a summary block. Timing fields are
// emitted only with `include_timing`, which keeps the default output
// byte-identical across runs and job counts.
std::string format_report(const CrossReport& report, ReportFormat format,
                          bool include_timing = false);

// Full dump of an instance: serialized automaton, every verdict and witness.
std::string dump_instance(const InstanceRecord& r);

}  // namespace loctest
