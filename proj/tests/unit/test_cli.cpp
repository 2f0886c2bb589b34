#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "loctest/cli.hpp"
#include "loctest/verdict_json.hpp"

using namespace loctest;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LOCTEST_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("check: 2-cycle fails loc-idem with a condition-1 witness") {
  const Result r = run({"check", "--property", "loc-idem", "--route", "graph", "--input",
                        data("two_cycle.dfa"), "--witness"});
  CHECK(r.code == cli::kFails);
  CHECK(r.out.find("holds: false") != std::string::npos);
  CHECK(r.out.find("graph-condition-1") != std::string::npos);
}

TEST_CASE("check: exit codes") {
  CHECK(run({"check", "--property", "right-lt", "--route", "oracle", "--input",
             data("trivial.sgp")}).code == cli::kHolds);
  CHECK(run({"check", "--property", "right-lt", "--route", "semigroup", "--input",
             data("m3.sgp")}).code == cli::kFails);
  CHECK(run({"check", "--property", "left-lt", "--route", "semigroup", "--input",
             data("m3.sgp")}).code == cli::kHolds);
  CHECK(run({"check", "--property", "right-lt", "--route", "graph", "--input",
             data("trivial.sgp")}).code == cli::kUsageError);
  CHECK(run({"check", "--property", "bogus", "--route", "graph", "--input",
             data("two_cycle.dfa")}).code == cli::kUsageError);
  CHECK(run({"check", "--property", "loc-idem", "--route", "graph", "--input",
             data("missing.dfa")}).code == cli::kUsageError);
  CHECK(run({"check", "--property", "loc-idem", "--route", "graph", "--input", "-"},
            "dfa\nstates: 2\nletters: 1\n0 0 9\n").code == cli::kUsageError);
  CHECK(run({"check", "--property", "loc-idem", "--route", "oracle", "--input",
             data("two_cycle.dfa"), "--cap", "1"}).code == cli::kCapError);
  CHECK(run({"check", "--property", "loc-idem", "--route", "graph", "--input",
             data("two_cycle.dfa"), "--product-cap", "2"}).code == cli::kCapError);
  CHECK(run({}).code == cli::kUsageError);
}

TEST_CASE("check: stdin and JSON output round-trips") {
  const Result r = run({"check", "--property", "left-lt", "--route", "graph", "--input", "-",
                        "--json"},
                       "dfa\nstates: 2\nletters: 1\n0 0 1\n1 0 0\n");
  CHECK(r.code == cli::kFails);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(to_json(verdict_from_json(j)) == j);
}

TEST_CASE("check: routes agree on the partial regression fixture") {
  for (const char* p : {"loc-idem", "right-lt", "left-lt"}) {
    for (const char* route : {"graph", "semigroup", "oracle"}) {
      CHECK(run({"check", "--property", p, "--route", route, "--input",
                 data("partial_nilpotent.dfa")}).code == cli::kFails);
    }
  }
}

TEST_CASE("semigroup-of: 2-cycle") {
  const Result r = run({"semigroup-of", "--input", data("two_cycle.dfa")});
  CHECK(r.code == 0);
  CHECK(r.out == "semigroup\norder: 2\n1 0\n0 1\n# word 0: 0\n# word 1: 0 0\n");
}

TEST_CASE("gen and enumerate emit parseable streams") {
  const Result g = run({"gen", "--states", "3", "--letters", "2", "--seed", "4", "--count", "3"});
  CHECK(g.code == 0);
  const Result x = run({"cross-validate", "--input", "-"}, g.out);
  CHECK(x.code == 0);
  CHECK(x.out.find("instances: 3") != std::string::npos);

  const Result e = run({"enumerate", "--states", "2", "--letters", "1", "--complete-only"});
  CHECK(e.code == 0);
  std::size_t docs = 0;
  for (std::size_t pos = 0; (pos = e.out.find("dfa\n", pos)) != std::string::npos; ++pos) ++docs;
  CHECK(docs == 4);
}

TEST_CASE("cross-validate: suites and flags") {
  const Result ex = run({"cross-validate", "--exhaustive", "--max-states", "2", "--format", "csv"});
  CHECK(ex.code == 0);
  const Result rnd = run({"cross-validate", "--random", "--states", "3", "--letters", "2",
                          "--completeness", "0.8", "--count", "40", "--jobs", "2"});
  CHECK(rnd.code == 0);
  CHECK(run({"cross-validate"}).code == cli::kUsageError);
  CHECK(run({"cross-validate", "--exhaustive", "--random"}).code == cli::kUsageError);
}

TEST_CASE("verify-witness") {
  const Result c = run({"check", "--property", "right-lt", "--route", "semigroup", "--input",
                        data("m3.sgp"), "--json"});
  REQUIRE(c.code == cli::kFails);
  const Result ok = run({"verify-witness", "--input", data("m3.sgp"), "--verdict", "-"}, c.out);
  CHECK(ok.code == 0);
  CHECK(ok.out == "witness verified\n");

  auto j = nlohmann::json::parse(c.out);
  j["witness"]["f"] = 1;
  CHECK(run({"verify-witness", "--input", data("m3.sgp"), "--verdict", "-"}, j.dump()).code == 1);
  j["witness"]["f"] = 40;
  CHECK(run({"verify-witness", "--input", data("m3.sgp"), "--verdict", "-"}, j.dump()).code ==
        cli::kUsageError);
  CHECK(run({"verify-witness", "--input", data("m3.sgp"), "--verdict", "-"}, "{").code ==
        cli::kUsageError);
}

TEST_CASE("LOCTEST_CAP sets the default cap") {
  ::setenv("LOCTEST_CAP", "1", 1);
  const int capped = run({"check", "--property", "loc-idem", "--route", "oracle", "--input",
                          data("two_cycle.dfa")}).code;
  ::setenv("LOCTEST_CAP", "junk", 1);
  const int junk = run({"check", "--property", "loc-idem", "--route", "oracle", "--input",
                        data("two_cycle.dfa")}).code;
  ::unsetenv("LOCTEST_CAP");
  CHECK(capped == cli::kCapError);
  CHECK(junk == cli::kUsageError);
}
