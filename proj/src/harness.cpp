#include "loctest/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "loctest/verdict_json.hpp"

namespace loctest {

RandomDfaStream::RandomDfaStream(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
  if (spec.states == 0 || spec.letters == 0) {
    throw std::invalid_argument("GenSpec needs positive states and letters");
  }
  if (!(spec.completeness >= 0.0 && spec.completeness <= 1.0)) {
    throw std::invalid_argument("completeness must lie in [0, 1]");
  }
}

std::optional<Dfa> RandomDfaStream::next() {
  if (produced_ >= spec_.count) return std::nullopt;
  ++produced_;
  std::vector<State> delta(spec_.states * spec_.letters, kUndefined);
  for (auto& slot : delta) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    if (u < spec_.completeness) slot = static_cast<State>(rng_() % spec_.states);
  }
  return Dfa(spec_.states, spec_.letters, std::move(delta));
}

std::vector<Dfa> random_dfas(const GenSpec& spec) {
  std::vector<Dfa> out;
  RandomDfaStream stream(spec);
  while (auto d = stream.next()) out.push_back(std::move(*d));
  return out;
}

DfaEnumerator::DfaEnumerator(std::size_t states, std::size_t letters, bool complete_only)
    : states_(states),
      letters_(letters),
      complete_only_(complete_only),
      delta_(states * letters, complete_only ? 0 : kUndefined) {
  if (states == 0 || letters == 0) throw std::invalid_argument("states and letters must be positive");
}

std::optional<Dfa> DfaEnumerator::next() {
  if (done_) return std::nullopt;
  Dfa current(states_, letters_, delta_);
  // Odometer over the row-major delta, last slot fastest.
  const State low = complete_only_ ? 0 : kUndefined;
  std::size_t i = delta_.size();
  for (; i-- > 0;) {
    if (static_cast<std::size_t>(delta_[i] + 1) < states_) {
      ++delta_[i];
      break;
    }
    delta_[i] = low;
  }
  if (i == static_cast<std::size_t>(-1)) done_ = true;
  return current;
}

std::vector<Dfa> enumerate_dfas(std::size_t states, std::size_t letters, bool complete_only) {
  std::vector<Dfa> out;
  DfaEnumerator it(states, letters, complete_only);
  while (auto d = it.next()) out.push_back(std::move(*d));
  return out;
}

std::vector<Dfa> canonical_exhaustive_suite() {
  std::vector<Dfa> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      auto part = enumerate_dfas(n, m, true);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

std::vector<GenSpec> canonical_random_specs(std::uint64_t seed) {
  constexpr std::size_t kTotal = 5000;
  std::vector<GenSpec> specs;
  for (double completeness : {1.0, 0.8}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t m = 1; m <= 3; ++m) {
        specs.push_back({n, m, completeness, seed + specs.size(), 0});
      }
    }
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    specs[i].count = kTotal / specs.size() + (i < kTotal % specs.size() ? 1 : 0);
  }
  return specs;
}

namespace {

using Clock = std::chrono::steady_clock;

std::size_t slot(PropertyId p) { return static_cast<std::size_t>(p); }

bool implies_loc_idem(const std::array<bool, 3>& holds) {
  const bool loc = holds[slot(PropertyId::LocallyIdempotent)];
  return (!holds[slot(PropertyId::RightLT)] || loc) && (!holds[slot(PropertyId::LeftLT)] || loc);
}

void check_witness(InstanceRecord& r, const Instance& instance, const Verdict& v) {
  if (v.holds) return;
  ++r.witnesses_checked;
  bool ok = false;
  try {
    ok = verify_witness(instance, v);
  } catch (const std::exception&) {
    ok = false;
  }
  if (!ok) ++r.witness_failures;
}

}  // namespace

InstanceRecord evaluate_instance(const Dfa& d, std::size_t index, const CrossOptions& opts) {
  const auto start = Clock::now();
  InstanceRecord r;
  r.index = index;
  r.dfa = d;
  const Instance as_dfa{d};

  for (PropertyId p : kAllProperties) {
    auto& out = r.outcomes[slot(p)];
    switch (p) {
      case PropertyId::LocallyIdempotent: out.graph = decide_loc_idem_graph(d, opts.graph); break;
      case PropertyId::RightLT: out.graph = decide_right_lt_graph(d, opts.graph); break;
      case PropertyId::LeftLT: out.graph = decide_left_lt_graph(d, opts.graph); break;
    }
    check_witness(r, as_dfa, out.graph);
  }
  std::array<bool, 3> graph_holds{};
  for (PropertyId p : kAllProperties) graph_holds[slot(p)] = r.outcomes[slot(p)].graph.holds;
  r.hierarchy_ok = implies_loc_idem(graph_holds);

  std::optional<TransitionSemigroup> ts;
  try {
    ts = transition_semigroup(d, opts.semigroup_cap);
  } catch (const CapExceeded& e) {
    r.skipped = true;
    r.skip_reason = e.what();
  }

  if (ts) {
    const FiniteSemigroup& s = ts->semigroup;
    r.semigroup_order = s.order();
    std::array<bool, 3> sg_holds{}, or_holds{};
    for (PropertyId p : kAllProperties) {
      auto& out = r.outcomes[slot(p)];
      switch (p) {
        case PropertyId::LocallyIdempotent: out.semigroup = decide_loc_idem_semigroup(s); break;
        case PropertyId::RightLT: out.semigroup = decide_right_lt_semigroup(s); break;
        case PropertyId::LeftLT: out.semigroup = decide_left_lt_semigroup(s); break;
      }
      out.oracle = oracle(s, p);
      check_witness(r, as_dfa, out.semigroup);
      check_witness(r, as_dfa, out.oracle);
      out.agree = out.graph.holds == out.semigroup.holds && out.graph.holds == out.oracle.holds;
      r.agree = r.agree && out.agree;
      sg_holds[slot(p)] = out.semigroup.holds;
      or_holds[slot(p)] = out.oracle.holds;
    }
    r.hierarchy_ok = r.hierarchy_ok && implies_loc_idem(sg_holds) && implies_loc_idem(or_holds);

    if (opts.check_duality) {
      const FiniteSemigroup op = s.opposite();
      const Instance as_op{op};
      const Verdict right_op = decide_right_lt_semigroup(op);
      const Verdict left_op = decide_left_lt_semigroup(op);
      const Verdict right_op_oracle = oracle(op, PropertyId::RightLT);
      const Verdict left_op_oracle = oracle(op, PropertyId::LeftLT);
      for (const Verdict* v : {&right_op, &left_op, &right_op_oracle, &left_op_oracle}) {
        check_witness(r, as_op, *v);
      }
      const auto& right = r.outcomes[slot(PropertyId::RightLT)];
      const auto& left = r.outcomes[slot(PropertyId::LeftLT)];
      r.duality_ok = right.semigroup.holds == left_op.holds &&
                     left.semigroup.holds == right_op.holds &&
                     right.oracle.holds == left_op_oracle.holds &&
                     left.oracle.holds == right_op_oracle.holds;
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

namespace {

double percentile(std::vector<double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::min(sorted.size() - 1, rank == 0 ? 0 : rank - 1)];
}

CrossSummary summarize(const std::vector<InstanceRecord>& records) {
  CrossSummary s;
  std::vector<double> times;
  for (const auto& r : records) {
    ++s.instances;
    if (r.skipped) ++s.skipped;
    for (PropertyId p : kAllProperties) {
      if (r.outcomes[slot(p)].graph.holds) {
        ++s.holds[slot(p)];
      } else {
        ++s.fails[slot(p)];
      }
    }
    if (!r.agree) ++s.disagreements;
    s.witnesses_checked += r.witnesses_checked;
    s.witness_failures += r.witness_failures;
    if (!r.hierarchy_ok) ++s.hierarchy_violations;
    if (!r.duality_ok) ++s.duality_violations;
    times.push_back(r.elapsed_ms);
    s.total_ms += r.elapsed_ms;
  }
  std::sort(times.begin(), times.end());
  s.p50_ms = percentile(times, 0.50);
  s.p90_ms = percentile(times, 0.90);
  s.p99_ms = percentile(times, 0.99);
  s.max_ms = times.empty() ? 0.0 : times.back();
  return s;
}

}  // namespace

CrossReport cross_validate(const std::vector<Dfa>& instances, const CrossOptions& opts,
                           std::string source) {
  CrossReport report;
  report.source = std::move(source);
  std::vector<std::optional<InstanceRecord>> slots(instances.size());
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      slots[i] = evaluate_instance(instances[i], i, opts);
      if (opts.stop_on_disagreement && !slots[i]->agree) stop.store(true);
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Every index below a picked one was picked too, so the evaluated prefix is
  // contiguous; cut it at the first disagreement when stopping.
  for (auto& rec : slots) {
    if (!rec) break;
    report.records.push_back(std::move(*rec));
    if (!report.records.back().agree) {
      report.disagreement_indices.push_back(report.records.back().index);
      if (opts.stop_on_disagreement) {
        report.aborted = report.records.size() < instances.size();
        break;
      }
    }
  }
  report.summary = summarize(report.records);
  return report;
}

ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format '" + std::string(s) + "'");
}

namespace {

std::string holds_bits(const PropertyOutcome& o, bool skipped) {
  std::string s = o.graph.holds ? "1" : "0";
  if (skipped) return s + "/-/-";
  s += o.semigroup.holds ? "/1" : "/0";
  s += o.oracle.holds ? "/1" : "/0";
  return s;
}

nlohmann::json summary_json(const CrossSummary& s, bool timing) {
  nlohmann::json j = {
      {"instances", s.instances},
      {"skipped", s.skipped},
      {"disagreements", s.disagreements},
      {"witnesses_checked", s.witnesses_checked},
      {"witness_failures", s.witness_failures},
      {"hierarchy_violations", s.hierarchy_violations},
      {"duality_violations", s.duality_violations},
  };
  for (PropertyId p : kAllProperties) {
    j["holds"][std::string(to_string(p))] = s.holds[slot(p)];
    j["fails"][std::string(to_string(p))] = s.fails[slot(p)];
  }
  if (timing) {
    j["timing_ms"] = {{"p50", s.p50_ms}, {"p90", s.p90_ms}, {"p99", s.p99_ms},
                      {"max", s.max_ms}, {"total", s.total_ms}};
  }
  return j;
}

}  // namespace

std::string dump_instance(const InstanceRecord& r) {
  std::ostringstream out;
  out << "# instance " << r.index << (r.agree ? "" : " DISAGREEMENT") << '\n'
      << serialize_dfa(r.dfa);
  for (PropertyId p : kAllProperties) {
    const auto& o = r.outcomes[slot(p)];
    out << "# " << to_string(p) << " graph: " << (o.graph.holds ? "holds" : "fails");
    if (o.graph.witness) out << " " << describe(*o.graph.witness);
    out << '\n';
    if (r.skipped) continue;
    out << "# " << to_string(p) << " semigroup: " << (o.semigroup.holds ? "holds" : "fails");
    if (o.semigroup.witness) out << " " << describe(*o.semigroup.witness);
    out << '\n';
    out << "# " << to_string(p) << " oracle: " << (o.oracle.holds ? "holds" : "fails");
    if (o.oracle.witness) out << " " << describe(*o.oracle.witness);
    out << '\n';
  }
  return out.str();
}

std::string format_report(const CrossReport& report, ReportFormat format, bool include_timing) {
  std::ostringstream out;
  const auto& s = report.summary;
  switch (format) {
    case ReportFormat::Json: {
      out << nlohmann::json{{"source", report.source}, {"prng", kPrngName}}.dump() << '\n';
      for (const auto& r : report.records) {
        nlohmann::json j = {{"index", r.index},
                            {"states", r.dfa.state_count()},
                            {"letters", r.dfa.alphabet_size()},
                            {"skipped", r.skipped},
                            {"semigroup_order", r.semigroup_order},
                            {"agree", r.agree},
                            {"witnesses_checked", r.witnesses_checked},
                            {"witness_failures", r.witness_failures},
                            {"hierarchy_ok", r.hierarchy_ok},
                            {"duality_ok", r.duality_ok}};
        for (PropertyId p : kAllProperties) {
          const auto& o = r.outcomes[slot(p)];
          nlohmann::json pj = {{"graph", o.graph.holds}, {"agree", o.agree}};
          if (!r.skipped) {
            pj["semigroup"] = o.semigroup.holds;
            pj["oracle"] = o.oracle.holds;
          }
          j["properties"][std::string(to_string(p))] = pj;
        }
        if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
        if (!r.agree) {
          j["dfa"] = serialize_dfa(r.dfa);
          for (PropertyId p : kAllProperties) {
            const auto& o = r.outcomes[slot(p)];
            auto& dump = j["verdicts"][std::string(to_string(p))];
            dump["graph"] = to_json(o.graph);
            if (!r.skipped) {
              dump["semigroup"] = to_json(o.semigroup);
              dump["oracle"] = to_json(o.oracle);
            }
          }
        }
        out << j.dump() << '\n';
      }
      nlohmann::json tail = {{"summary", summary_json(s, include_timing)},
                             {"aborted", report.aborted}};
      out << tail.dump() << '\n';
      break;
    }
    case ReportFormat::Csv: {
      out << "# source: " << report.source << "; prng: " << kPrngName << '\n'
          << "index,states,letters,skipped,semigroup_order";
      for (PropertyId p : kAllProperties) {
        for (const char* route : {"graph", "semigroup", "oracle"}) {
          out << ',' << to_string(p) << '_' << route;
        }
      }
      out << ",agree,witnesses_checked,witness_failures,hierarchy_ok,duality_ok";
      if (include_timing) out << ",elapsed_ms";
      out << '\n';
      for (const auto& r : report.records) {
        out << r.index << ',' << r.dfa.state_count() << ',' << r.dfa.alphabet_size() << ','
            << r.skipped << ',' << r.semigroup_order;
        for (PropertyId p : kAllProperties) {
          const auto& o = r.outcomes[slot(p)];
          out << ',' << o.graph.holds;
          if (r.skipped) {
            out << ",,";
          } else {
            out << ',' << o.semigroup.holds << ',' << o.oracle.holds;
          }
        }
        out << ',' << r.agree << ',' << r.witnesses_checked << ',' << r.witness_failures << ','
            << r.hierarchy_ok << ',' << r.duality_ok;
        if (include_timing) out << ',' << r.elapsed_ms;
        out << '\n';
      }
      out << "# summary " << summary_json(s, include_timing).dump() << '\n';
      break;
    }
    case ReportFormat::Text: {
      out << "source: " << report.source << "\nprng: " << kPrngName << '\n';
      for (const auto& r : report.records) {
        out << "instance " << r.index << ": states=" << r.dfa.state_count()
            << " letters=" << r.dfa.alphabet_size();
        if (r.skipped) {
          out << " order=skipped";
        } else {
          out << " order=" << r.semigroup_order;
        }
        for (PropertyId p : kAllProperties) {
          out << ' ' << to_string(p) << '=' << holds_bits(r.outcomes[slot(p)], r.skipped);
        }
        out << (r.agree ? " agree" : " DISAGREE");
        if (include_timing) out << " ms=" << r.elapsed_ms;
        out << '\n';
      }
      for (const auto& r : report.records) {
        if (!r.agree) out << dump_instance(r);
      }
      out << "summary:\n"
          << "  instances: " << s.instances << '\n'
          << "  skipped: " << s.skipped << '\n';
      for (PropertyId p : kAllProperties) {
        out << "  " << to_string(p) << ": holds=" << s.holds[slot(p)]
            << " fails=" << s.fails[slot(p)] << '\n';
      }
      out << "  disagreements: " << s.disagreements << '\n'
          << "  witnesses: checked=" << s.witnesses_checked
          << " failed=" << s.witness_failures << '\n'
          << "  hierarchy_violations: " << s.hierarchy_violations << '\n'
          << "  duality_violations: " << s.duality_violations << '\n';
      if (include_timing) {
        out << "  timing_ms: p50=" << s.p50_ms << " p90=" << s.p90_ms << " p99=" << s.p99_ms
            << " max=" << s.max_ms << " total=" << s.total_ms << '\n';
      }
      if (report.aborted) out << "  aborted: stopped at first disagreement\n";
      break;
    }
  }
  return out.str();
}

}  // namespace loctest
