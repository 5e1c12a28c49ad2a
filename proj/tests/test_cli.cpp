#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "hilb/cli.hpp"
#include "hilb/errors.hpp"
#include "hilb/integrand_parser.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hilbdon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hilb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse_integrand accepts the grammar") {
  CHECK(hilb::parse_integrand("s12(E*L)") == hilb::IntegrandSpec{0, 12});
  CHECK(hilb::parse_integrand("c1(L)^2 * s2(E*L)") == hilb::IntegrandSpec{2, 2});
  CHECK(hilb::parse_integrand("c1(L)") == hilb::IntegrandSpec{1, 0});
  CHECK(hilb::parse_integrand("  s3(E*L)*c1(L)^3 ") == hilb::IntegrandSpec{3, 3});
  CHECK(hilb::parse_integrand("c1(L)^2*c1(L)*s0(E*L)") == hilb::IntegrandSpec{3, 0});
}

TEST_CASE("parse_integrand rejects everything else with a position") {
  auto error_for = [](std::string_view text) -> hilb::ParseError {
    try {
      hilb::parse_integrand(text);
    } catch (const hilb::ParseError& e) {
      return e;
    }
    FAIL("no ParseError for " << text);
    return hilb::ParseError(0, {}, "");
  };

  const auto two_segre = error_for("s3(E*L) * s2(E*L)");
  CHECK(two_segre.offset() == 10);
  CHECK(contains(two_segre.what(), "at most one Segre factor"));

  const auto dangling = error_for("c1(L)^");
  CHECK(dangling.offset() == 6);
  CHECK(dangling.expected() == std::vector<std::string>{"integer"});

  const auto junk = error_for("foo");
  CHECK(junk.offset() == 0);
  CHECK(junk.expected() == std::vector<std::string>{"'c1(L)'", "'s'"});

  CHECK(error_for("").offset() == 0);
  CHECK(error_for("s12(E*L) s1(E*L)").expected() ==
        std::vector<std::string>{"'*'", "end of input"});
  CHECK(error_for("s12(E x L)").offset() == 3);
  CHECK(error_for("c1(L) *").offset() == 7);
}

TEST_CASE("donaldson subcommand") {
  const auto r = invoke({"donaldson", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "q_17 = 2540"));
  CHECK(contains(r.out, "fixed pts  : 221"));

  const auto bad = invoke({"donaldson", "--n", "9"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "OutOfRange"));
}

TEST_CASE("integrate subcommand") {
  const auto r = invoke({"integrate", "--m", "3", "--expr", "c1(L)^3 * s3(E*L)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "= 8\n"));

  const auto parse = invoke({"integrate", "--m", "3", "--expr", "s3(E*L) * s2(E*L)"});
  CHECK(parse.code == 2);
  CHECK(contains(parse.err, "offset 10"));

  const auto too_big = invoke({"integrate", "--m", "2", "--expr", "s5(E*L)"});
  CHECK(too_big.code == 2);
  CHECK(contains(too_big.err, "DegreeMismatch"));
}

TEST_CASE("JSON output follows the fixed schema") {
  const auto r = invoke({"--format", "json", "--seed", "5", "donaldson", "--n", "6"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "donaldson");
  CHECK(j["n"] == 6);
  CHECK(j["i"] == 0);
  CHECK(j["k"] == 14);
  CHECK(j["value"]["num"] == "233208");
  CHECK(j["value"]["den"] == "1");
  CHECK(j["fixed_points"] == 429);
  CHECK(j["spec"]["seed"] == "5");
  CHECK(j["spec"]["w1"].is_number_integer());
  CHECK(j["spec"]["w2"].is_number_integer());
  CHECK(j["elapsed_ms"].is_number());
  CHECK(j["raw_integral"]["num"] == "583020");
  CHECK(j["prefactor"]["num"] == "2");
  CHECK(j["prefactor"]["den"] == "5");

  // Global flags may follow the subcommand.
  const auto after = invoke({"darboux", "--n", "2", "--i", "3", "--format", "json"});
  REQUIRE(after.code == 0);
  CHECK(nlohmann::json::parse(after.out)["value"]["num"] == "8");
}

TEST_CASE("CSV and table output") {
  const auto csv = invoke({"--format", "csv", "darboux", "--n", "5", "--i", "0"});
  CHECK(csv.code == 0);
  CHECK(contains(csv.out, "command,n,m,i,k,num,den,fixed_points,w1,w2,seed,elapsed_ms\n"));
  CHECK(contains(csv.out, "darboux,5,6,0,12,2540,1,221,"));

  const auto table = invoke({"--format", "json", "table", "--n-max", "3"});
  REQUIRE(table.code == 0);
  const auto rows = nlohmann::json::parse(table.out);
  CHECK(rows.size() == 2 + 7 + 9);
  CHECK(rows[0]["value"]["num"] == "1");
  CHECK(rows[1]["value"]["num"] == "3");

  const auto text = invoke({"table", "--n-max", "4", "--threads", "3"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "q_13  = 54"));
  CHECK(invoke({"table", "--n-max", "7"}).code == 2);
}

TEST_CASE("darboux beyond the published range is labelled") {
  const auto r = invoke({"--format", "json", "darboux", "--n", "7", "--i", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "unvalidated"));
  CHECK(contains(nlohmann::json::parse(r.out)["note"].get<std::string>(), "unvalidated"));
  CHECK(invoke({"darboux", "--n", "3", "--i", "9"}).code == 2);
}

TEST_CASE("witness subcommand") {
  const auto r = invoke({"witness", "--n", "3", "--seed", "4", "--samples", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "all samples verified"));

  const auto j = invoke({"--format", "json", "witness", "--n", "2"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["samples"].size() == 1);
  CHECK(doc["samples"][0]["curve"]["coefficients"].size() == 6);
  CHECK(doc["samples"][0]["system_dimension"] == 2);

  CHECK(invoke({"witness", "--n", "1"}).code == 2);
}

TEST_CASE("verify subcommand runs the acceptance suite") {
  const auto r = invoke({"verify"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[PASS] 1 published-integers"));
  CHECK(contains(r.out, "[PASS] 8 parallel-determinism"));
  CHECK(contains(r.out, "all acceptance criteria passed"));
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"donaldson"}).code == 2);
  CHECK(invoke({"donaldson", "--n", "5", "--bogus"}).code == 2);
  CHECK(invoke({"--format", "yaml", "donaldson", "--n", "5"}).code == 2);
  CHECK(invoke({"--threads", "0", "donaldson", "--n", "2"}).code == 2);
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "donaldson"));
}
