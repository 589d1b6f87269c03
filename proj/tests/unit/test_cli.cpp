#include <doctest.h>

#include <json.hpp>

#include "support/run_cli.hpp"

using recipcas::testing::run_command;

namespace {

const std::string kCli = RECIPCAS_CLI_PATH;

}  // namespace

TEST_CASE("eval prints the canonical normal form") {
  const auto result = run_command(kCli + " eval \"recip(X)+recip(Y)\"");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "(X + Y)/(X*Y)\n");
}

TEST_CASE("val evaluates valuations") {
  const auto result = run_command(kCli + " val order \"sigma(1/(X+Y))\"");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "1\n");

  const auto lex = run_command(kCli + " val lex:Y:xadic:1 \"X + Y\"");
  CHECK(lex.exit_code == 0);
  CHECK(lex.output == "(0, -1)\n");

  const auto inf = run_command(kCli + " val order \"X - X\"");
  CHECK(inf.exit_code == 0);
  CHECK(inf.output == "inf\n");
}

TEST_CASE("check emits a json report and exit code 0 on pass") {
  const auto result = run_command(kCli + " check beta_integrality 2 3 --json");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["name"] == "beta_integrality");
  CHECK(doc["passed"] == true);
  CHECK(doc.size() == 6);
}

TEST_CASE("check all merges reports in name order") {
  const auto result = run_command(kCli + " check all --json");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  REQUIRE(doc.is_array());
  for (std::size_t i = 1; i < doc.size(); ++i)
    CHECK(doc[i - 1]["name"].get<std::string>() < doc[i]["name"].get<std::string>());
}

TEST_CASE("star subcommand") {
  const auto result = run_command(kCli + " star \"X^2 + Y\"");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "fstar: X^2 + Y\na: (2, 1)\nt: (0, 0)\n");
}

TEST_CASE("invert subcommand prints the verification product") {
  const auto result = run_command(kCli + " invert \"recip(1)+recip(X)\"");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "inverse: recip(1) + recip(-X - 1)\nproduct: 1\n");
}

TEST_CASE("length subcommand") {
  const auto result =
      run_command(kCli + " length \"recip(X)+recip(Y)\" --deg 2 --height 2 --terms 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "2\n");

  const auto missing = run_command(kCli + " length \"X/Y\" --deg 1 --height 1 --terms 2");
  CHECK(missing.exit_code == 0);
  CHECK(missing.output == "NotFound\n");
}

TEST_CASE("usage and parse errors exit with status 2") {
  CHECK(run_command(kCli).exit_code == 2);
  CHECK(run_command(kCli + " frobnicate").exit_code == 2);
  CHECK(run_command(kCli + " eval").exit_code == 2);
  CHECK(run_command(kCli + " eval \"1/(X - X)\"").exit_code == 2);
  CHECK(run_command(kCli + " eval \"Z\"").exit_code == 2);
  CHECK(run_command(kCli + " val wsub:2,3,7 \"X\" --vars 3").exit_code == 2);
  CHECK(run_command(kCli + " check nonsense").exit_code == 2);
  CHECK(run_command(kCli + " check beta_integrality 2 4").exit_code == 2);
  CHECK(run_command(kCli + " length \"1/X\" --deg 2").exit_code == 2);
  CHECK(run_command(kCli + " --bogus eval \"X\"").exit_code == 2);
}

TEST_CASE("vars flag widens the variable set") {
  const auto result = run_command(kCli + " --vars 3 eval \"X1*X2*X3\"");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "X*Y*Z\n");
  const auto wide = run_command(kCli + " --vars 4 eval \"X4^2\"");
  CHECK(wide.exit_code == 0);
  CHECK(wide.output == "X4^2\n");
}
