#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "qll/cli/app.hpp"

using namespace qll;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("exit-code contract over the command matrix") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"cp", "enumerate", "-p", "3"}, 0},
      {{"cp", "enumerate", "-p", "4"}, 2},
      {{"cp", "enumerate", "-p", "2"}, 2},
      {{"cp", "enumerate"}, 2},
      {{"frobnicate"}, 2},
      {{}, 2},
      {{"lattice", "member", "--beta", "1+i"}, 0},
      {{"lattice", "decompose", "--beta", "3+3i"}, 0},
      {{"lattice", "decompose", "--beta", "1"}, 2},
      {{"lattice", "enumerate", "--norm", "6"}, 0},
      {{"lattice", "check"}, 0},
      {{"lift", "coeff", "--beta", "3+3i"}, 0},
      {{"l", "coeff", "--beta", "2", "--epsilon", "-1"}, 0},
      {{"lift", "coeff", "--beta", "1"}, 2},
      {{"lift", "coeff", "--beta", "1+i", "--epsilon", "7"}, 2},
      {{"theta", "basis", "--l", "2"}, 0},
      {{"theta", "basis", "--l", "3"}, 2},
      {{"theta", "coeffs", "--l", "0", "--nu", "0", "--max", "5"}, 0},
      {{"theta", "check-transform", "--l", "0", "--z", "0.3+0.8i"}, 0},
      {{"theta", "check-transform", "--l", "0", "--z", "0.3+0.8i", "--sign", "1"}, 1},
      {{"theta", "check-transform", "--l", "0", "--z", "0.3+0.8i", "--max", "2"}, 3},
      {{"theta", "check-transform", "--l", "0", "--z", "0.3-0.8i"}, 2},
      {{"theta", "os-identity", "--l", "4", "--max", "6"}, 0},
      {{"satake", "--p", "3", "--lambda", "0.5"}, 0},
      {{"satake", "--p", "2", "--epsilon", "1"}, 0},
      {{"satake", "--p", "3", "--symbolic"}, 0},
      {{"satake", "--p", "4", "--lambda", "1"}, 2},
      {{"capmatch", "--p", "5", "--lambda", "-1.5"}, 0},
      {{"verify", "cp"}, 0},
      {{"verify", "cosets"}, 0},
      {{"verify", "nonvanishing"}, 0},
      {{"verify", "satake"}, 0},
      {{"verify", "fundlemma", "--p", "3", "--bound", "60"}, 0},
      {{"verify", "equivariance", "--p", "2", "--bound", "40", "--epsilon", "1"}, 0},
      {{"verify", "equivariance", "--p", "3", "--bound", "40"}, 2},
      {{"verify", "equivariance", "--p", "4", "--shape", "b"}, 2},
      {{"verify", "dirichlet", "--l", "0", "--N", "30"}, 0},
      {{"verify", "structure", "--seed", "3"}, 0},
      {{"gen", "coeffs", "--count", "4"}, 0},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    const auto r = run(c.args);
    CHECK(r.code == c.code);
  }
}

TEST_CASE("unknown commands print usage") {
  const auto r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("equivariance report echoes the eigenvalue") {
  const auto r = run({"verify", "equivariance", "--p", "3", "--shape", "c", "--bound", "240", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["schema"] == "qll-report/1");
  CHECK(j["results"]["eigenvalue"] == "30 + 9*lambda_3^2");
}

TEST_CASE("config errors produce a config-error report") {
  const auto r = run({"cp", "enumerate", "-p", "4", "--format", "json"});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "config-error");
}

TEST_CASE("csv only for tables") {
  CHECK(run({"theta", "coeffs", "--l", "0", "--nu", "0", "--max", "3", "--format", "csv"}).code == 0);
  CHECK(run({"verify", "cosets", "--format", "csv"}).code == 2);
  CHECK(run({"cp", "enumerate", "-p", "3", "--format", "yaml"}).code == 2);
}

TEST_CASE("seeded commands are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "satake", "--seed", "17", "--format", "json"},
        std::vector<std::string>{"verify", "structure", "--seed", "17", "--format", "text"},
        std::vector<std::string>{"gen", "coeffs", "--count", "12", "--seed", "5"},
        std::vector<std::string>{"verify", "equivariance", "--p", "5", "--shape", "b", "--bound", "40", "--seed", "2"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("generated coefficient files drive lift and eval") {
  const auto path = (std::filesystem::temp_directory_path() / "qll_cli_coeffs.json").string();
  REQUIRE(run({"gen", "coeffs", "--count", "10", "--seed", "1", "--r", "1", "--out", path}).code == 0);
  const auto lift = run({"lift", "coeff", "--beta", "1+i", "--coeffs", path, "--format", "json"});
  CHECK(lift.code == 0);
  const auto eval = run({"eval", "--x", "0", "--y", "1", "--bound", "60", "--coeffs", path, "--format", "json"});
  CHECK(eval.code == 0);
  CHECK(nlohmann::json::parse(eval.out)["results"].contains("value"));
  std::remove(path.c_str());
  CHECK(run({"eval", "--x", "0", "--y", "1", "--coeffs", path}).code == 2);
}
