#include "loctest/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "loctest/deciders.hpp"
#include "loctest/harness.hpp"
#include "loctest/text_format.hpp"
#include "loctest/verdict_json.hpp"

namespace loctest::cli {

namespace {

// Thrown for bad flag combinations discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open input '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::size_t default_cap() {
  if (const char* env = std::getenv("LOCTEST_CAP")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string_view(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("LOCTEST_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultSemigroupCap;
}

std::string word_labels(const Dfa& d, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ' ';
    s += d.letter_label(w[i]);
  }
  return s;
}

std::vector<Dfa> read_dfa_stream(const std::string& text) {
  std::vector<Dfa> out;
  for (const auto& doc : text::split_documents(text)) out.push_back(parse_dfa(doc));
  if (out.empty()) throw ParseError(1, 1, "no 'dfa' documents in input");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decide local testability and local idempotency of automata and semigroups",
               "loctest"};
  app.require_subcommand(1);

  std::size_t cap = 0;
  std::size_t product_cap = kDefaultProductCap;

  // check
  auto* check = app.add_subcommand("check", "Decide one property of one instance");
  std::string property_name, route_name, input_path;
  bool as_json = false, show_witness = false;
  check->add_option("--property", property_name, "right-lt | left-lt | loc-idem")
      ->required()
      ->check(CLI::IsMember({"right-lt", "left-lt", "loc-idem"}));
  check->add_option("--route", route_name, "graph | semigroup | oracle")
      ->required()
      ->check(CLI::IsMember({"graph", "semigroup", "oracle"}));
  check->add_option("--input", input_path, "instance file, '-' for stdin")->required();
  check->add_flag("--json", as_json, "print the verdict as JSON");
  check->add_flag("--witness", show_witness, "include the witness in text output");
  check->add_option("--cap", cap, "semigroup order cap (default: $LOCTEST_CAP or 100000)");
  check->add_option("--product-cap", product_cap, "node cap for product graphs");

  // semigroup-of
  auto* sgof = app.add_subcommand("semigroup-of", "Print the transition semigroup of a DFA");
  sgof->add_option("--input", input_path, "DFA file, '-' for stdin")->required();
  sgof->add_option("--cap", cap, "semigroup order cap");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate seeded random DFAs");
  GenSpec spec;
  gen->add_option("--states", spec.states)->required()->check(CLI::PositiveNumber);
  gen->add_option("--letters", spec.letters)->required()->check(CLI::PositiveNumber);
  gen->add_option("--completeness", spec.completeness, "probability a transition is defined")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", spec.seed);
  gen->add_option("--count", spec.count);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every DFA of one shape");
  std::size_t enum_states = 1, enum_letters = 1;
  bool complete_only = false;
  enumerate->add_option("--states", enum_states)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--letters", enum_letters)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--complete-only", complete_only);

  // cross-validate
  auto* cross = app.add_subcommand("cross-validate", "Compare all routes on many DFAs");
  std::string cross_input, format_name = "text";
  bool exhaustive = false, canonical_random = false, random = false, timing = false,
       keep_going = false;
  std::size_t max_states = 3, max_letters = 2;
  unsigned jobs = 1;
  std::uint64_t canonical_seed = 20030101;
  auto* in_opt = cross->add_option("--input", cross_input, "stream of DFA documents");
  auto* ex_opt = cross->add_flag("--exhaustive", exhaustive, "all complete DFAs up to the bounds");
  auto* cr_opt = cross->add_flag("--canonical-random", canonical_random,
                                 "the 5000-instance seeded random suite");
  auto* rnd_opt = cross->add_flag("--random", random, "one GenSpec from --states/--letters/...");
  in_opt->excludes(ex_opt)->excludes(cr_opt)->excludes(rnd_opt);
  ex_opt->excludes(cr_opt)->excludes(rnd_opt);
  cr_opt->excludes(rnd_opt);
  cross->add_option("--max-states", max_states)->check(CLI::Range(1, 4));
  cross->add_option("--max-letters", max_letters)->check(CLI::Range(1, 3));
  cross->add_option("--states", spec.states)->check(CLI::PositiveNumber);
  cross->add_option("--letters", spec.letters)->check(CLI::PositiveNumber);
  cross->add_option("--completeness", spec.completeness)->check(CLI::Range(0.0, 1.0));
  cross->add_option("--seed", spec.seed, "seed for --random and --canonical-random");
  cross->add_option("--count", spec.count);
  cross->add_option("--cap", cap, "semigroup order cap");
  cross->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  cross->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "csv"}));
  cross->add_flag("--timing", timing, "include per-instance and percentile timings");
  cross->add_flag("--keep-going", keep_going, "do not stop at the first disagreement");

  // verify-witness
  auto* verify = app.add_subcommand("verify-witness", "Re-check a verdict's witness");
  std::string verdict_path;
  verify->add_option("--input", input_path, "instance file")->required();
  verify->add_option("--verdict", verdict_path, "verdict JSON file, '-' for stdin")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (cap == 0) cap = default_cap();
    DecideOptions opts;
    opts.semigroup_cap = cap;
    opts.graph.product_cap = product_cap;

    if (*check) {
      const Instance instance = parse_instance(read_input(input_path, in));
      const Verdict v = decide(instance, parse_property(property_name), parse_route(route_name),
                               opts);
      if (as_json) {
        out << to_json(v).dump(2) << '\n';
      } else {
        Verdict shown = v;
        if (!show_witness) shown.witness.reset();
        out << to_text(shown);
      }
      return v.holds ? kHolds : kFails;
    }

    if (*sgof) {
      const Dfa d = parse_dfa(read_input(input_path, in));
      const TransitionSemigroup ts = transition_semigroup(d, cap);
      out << serialize_cayley(ts.semigroup);
      for (Element x = 0; x < ts.semigroup.order(); ++x) {
        out << "# word " << x << ": " << word_labels(d, ts.semigroup.word(x)) << '\n';
      }
      return 0;
    }

    if (*gen) {
      RandomDfaStream stream(spec);
      bool first = true;
      while (auto d = stream.next()) {
        if (!first) out << '\n';
        first = false;
        out << serialize_dfa(*d);
      }
      return 0;
    }

    if (*enumerate) {
      DfaEnumerator it(enum_states, enum_letters, complete_only);
      bool first = true;
      while (auto d = it.next()) {
        if (!first) out << '\n';
        first = false;
        out << serialize_dfa(*d);
      }
      return 0;
    }

    if (*cross) {
      std::vector<Dfa> instances;
      std::string source;
      if (exhaustive) {
        for (std::size_t n = 1; n <= max_states; ++n) {
          for (std::size_t m = 1; m <= max_letters; ++m) {
            auto part = enumerate_dfas(n, m, true);
            instances.insert(instances.end(), part.begin(), part.end());
          }
        }
        source = "exhaustive complete states<=" + std::to_string(max_states) +
                 " letters<=" + std::to_string(max_letters);
      } else if (canonical_random) {
        if (cross->count("--seed") > 0) canonical_seed = spec.seed;
        for (const auto& s : canonical_random_specs(canonical_seed)) {
          auto part = random_dfas(s);
          instances.insert(instances.end(), part.begin(), part.end());
        }
        source = "canonical-random seed=" + std::to_string(canonical_seed);
      } else if (random) {
        instances = random_dfas(spec);
        std::ostringstream s;
        s << "random states=" << spec.states << " letters=" << spec.letters
          << " completeness=" << spec.completeness << " seed=" << spec.seed
          << " count=" << spec.count;
        source = s.str();
      } else if (!cross_input.empty()) {
        instances = read_dfa_stream(read_input(cross_input, in));
        source = "input " + cross_input;
      } else {
        throw UsageError(
            "cross-validate needs one of --input, --exhaustive, --canonical-random, --random");
      }
      CrossOptions copts;
      copts.semigroup_cap = cap;
      copts.graph = opts.graph;
      copts.jobs = jobs;
      copts.stop_on_disagreement = !keep_going;
      const CrossReport report = cross_validate(instances, copts, source);
      out << format_report(report, parse_report_format(format_name), timing);
      const auto& s = report.summary;
      const bool clean = s.disagreements == 0 && s.witness_failures == 0 &&
                         s.hierarchy_violations == 0 && s.duality_violations == 0;
      return clean ? 0 : 1;
    }

    if (*verify) {
      const Instance instance = parse_instance(read_input(input_path, in));
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_input(verdict_path, in));
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("verdict is not valid JSON: ") + e.what());
      }
      const Verdict v = verdict_from_json(j);
      const bool ok = verify_witness(instance, v);
      out << (ok ? "witness verified" : "witness rejected") << '\n';
      return ok ? 0 : 1;
    }
  } catch (const CapExceeded& e) {
    err << "loctest: " << e.what() << '\n';
    return kCapError;
  } catch (const ParseError& e) {
    err << "loctest: parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "loctest: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace loctest::cli
