#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "qll/io/coefficient_file.hpp"
#include "qll/io/report.hpp"
#include "qll/lift/lift.hpp"
#include "qll/util/errors.hpp"

using namespace qll;

namespace {

std::string config_error_of(const std::string& text) {
  try {
    parse_coefficient_file(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal coefficient file") {
  const auto f = parse_coefficient_file(R"({"r": 9.53, "atkin_lehner": -1, "coefficients": [[-1, 1.0]]})");
  CHECK(f.r == doctest::Approx(9.53));
  CHECK(f.atkin_lehner == -1);
  REQUIRE(f.coefficients.count(-1) == 1);
  const auto source = make_source(f);
  CHECK(source->numeric(1) == 1.0);
  CHECK(source->numeric(7) == 0.0);
  CHECK(source->epsilon_sign() == -1);
}

TEST_CASE("rational strings are kept exactly") {
  const auto f = parse_coefficient_file(R"({"r": 1, "atkin_lehner": 1, "coefficients": [[-3, "-3/7"], [-1, "1/3"]]})");
  REQUIRE(f.coefficients.at(-3).exact.has_value());
  CHECK(*f.coefficients.at(-3).exact == make_rational(-3, 7));
  const auto source = make_source(f);
  CHECK(source->exact(3) == SymbolicValue(AlgebraicReal(make_rational(-3, 7))));
  const auto again = parse_coefficient_file(serialize_coefficient_file(f));
  CHECK(*again.coefficients.at(-1).exact == make_rational(1, 3));
  CHECK(serialize_coefficient_file(again) == serialize_coefficient_file(f));
}

TEST_CASE("float coefficients have no exact value") {
  const auto f = parse_coefficient_file(R"({"r": 1, "atkin_lehner": 1, "coefficients": [[-2, 0.25]]})");
  CHECK_FALSE(f.coefficients.at(-2).exact.has_value());
  CHECK_THROWS(make_source(f)->exact(2));
}

TEST_CASE("malformed files name the offending field") {
  CHECK(config_error_of(R"({"atkin_lehner": 1, "coefficients": []})").find("r") != std::string::npos);
  CHECK(config_error_of(R"({"r": 1, "atkin_lehner": 2, "coefficients": []})").find("atkin_lehner") != std::string::npos);
  CHECK(config_error_of(R"({"r": 1, "coefficients": []})").find("atkin_lehner") != std::string::npos);
  CHECK(config_error_of(R"({"r": 1, "atkin_lehner": 1, "coefficients": [[-1, 1], [-1, 2]]})").find("duplicate") !=
        std::string::npos);
  CHECK(config_error_of(R"({"r": 1, "atkin_lehner": 1, "coefficients": [[0, 1]]})") != "");
  CHECK(config_error_of(R"({"r": 1, "atkin_lehner": 1, "coefficients": [[-1, "x/y"]]})").find("coefficients") !=
        std::string::npos);
  CHECK(config_error_of("not json") != "");
}

TEST_CASE("file save and load round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "qll_io_roundtrip.json").string();
  CoefficientFile f;
  f.r = 2.5;
  f.atkin_lehner = -1;
  f.coefficients[-1] = {0.5, make_rational(1, 2)};
  f.coefficients[-4] = {-0.125, std::nullopt};
  save_coefficient_file(path, f);
  const auto g = load_coefficient_file(path);
  std::remove(path.c_str());
  CHECK(serialize_coefficient_file(g) == serialize_coefficient_file(f));
  CHECK(g.coefficients.at(-4).approx == -0.125);
  CHECK_THROWS_AS(load_coefficient_file(path), ConfigError);
}

TEST_CASE("report serialization") {
  Report pass;
  pass.suite = "demo";
  pass.results = {{"b", 1}, {"a", 2}};
  const auto json = emit_report(pass, Format::json);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"schema\": \"qll-report/1\"") != std::string::npos);
  CHECK(json.find("\"a\"") < json.find("\"b\""));
  CHECK(emit_report(pass, Format::json) == json);
  CHECK_THROWS_AS(emit_report(pass, Format::csv), ConfigError);

  Report fail = pass;
  fail.status = Status::fail;
  CHECK_THROWS_AS(emit_report(fail, Format::json), std::logic_error);
  fail.witnesses.push_back({{"beta", to_json(HurwitzQuaternion::omega())}});
  const auto parsed = nlohmann::json::parse(emit_report(fail, Format::json));
  CHECK(parsed["witnesses"][0]["beta"] == nlohmann::json::array({1, 1, 1, 1}));

  Report table;
  table.suite = "coeffs";
  table.table = Table{{"n", "value"}, {{"1", "1/2"}, {"2", "a,b"}}};
  CHECK(emit_report(table, Format::csv) == "n,value\n1,1/2\n2,\"a,b\"\n");
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("sub-suites are ordered by name and fold their status") {
  Report all;
  all.suite = "all";
  Report b;
  b.suite = "b";
  Report a;
  a.suite = "a";
  a.status = Status::inconclusive;
  all.add_suite(b);
  all.add_suite(a);
  CHECK(all.status == Status::inconclusive);
  const auto json = emit_report(all, Format::json);
  CHECK(json.find("\"suite\": \"a\"") < json.find("\"suite\": \"b\""));
  CHECK(exit_code(Status::pass) == 0);
  CHECK(exit_code(Status::fail) == 1);
  CHECK(exit_code(Status::config_error) == 2);
  CHECK(exit_code(Status::inconclusive) == 3);
  CHECK(worst(Status::fail, Status::inconclusive) == Status::fail);
  CHECK(worst(Status::fail, Status::config_error) == Status::config_error);
}

TEST_CASE("exact values serialize as strings") {
  CHECK(to_json(make_rational(3, 2)) == "3/2");
  CHECK(to_json(AlgebraicReal(2)).dump() == R"({"terms":[[1,"2/1"]]})");
  CHECK(to_json(sym_coeff(1)).is_string());
}
